#include "zenossep/distribution.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "zenossep/fock.hpp"

namespace zenossep {

void validate_distribution(const Eigen::VectorXd& distribution, double sum_tolerance,
                           double negative_tolerance) {
    if (distribution.size() == 0)
        throw std::invalid_argument("distribution must be nonempty");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < distribution.size(); ++k) {
        const double p = distribution(k);
        if (!std::isfinite(p))
            throw std::invalid_argument("distribution entries must be finite");
        if (p < -negative_tolerance)
            throw std::invalid_argument("distribution entries must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > sum_tolerance)
        throw std::invalid_argument("distribution must sum to 1");
}

Eigen::VectorXd clamp_distribution(Eigen::VectorXd distribution) {
    validate_distribution(distribution, 1e-9, 1e-12);
    distribution = distribution.cwiseMax(0.0);
    distribution /= distribution.sum();
    return distribution;
}

Eigen::VectorXd delta_distribution(std::size_t dim, std::size_t index) {
    if (index >= dim) throw std::invalid_argument("delta_distribution: index out of range");
    Eigen::VectorXd q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    q(static_cast<Eigen::Index>(index)) = 1.0;
    return q;
}

Eigen::VectorXd uniform_distribution(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("uniform_distribution: empty support");
    return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(dim),
                                     1.0 / static_cast<double>(dim));
}

Eigen::VectorXd sector_uniform_distribution(int n_sites, int particles) {
    const auto dim = fock_dimension(n_sites);
    if (particles < 0 || particles > n_sites)
        throw std::invalid_argument("sector_uniform_distribution: bad particle count");
    Eigen::VectorXd q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    std::size_t members = 0;
    for (std::uint32_t word = 0; word < dim; ++word)
        if (std::popcount(word) == particles) {
            q(static_cast<Eigen::Index>(word)) = 1.0;
            ++members;
        }
    return q / static_cast<double>(members);
}

double total_variation(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("total_variation: size mismatch");
    return 0.5 * (p - q).lpNorm<1>();
}

}  // namespace zenossep
