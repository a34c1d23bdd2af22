#include "zenossep/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zenossep/measurement.hpp"
#include "zenossep/rng.hpp"

namespace zenossep {

void validate(const HamiltonianSpec& spec) {
    fock_dimension(spec.n_sites);
    if (spec.potential.size() != spec.n_sites)
        throw std::invalid_argument("hamiltonian: potential length must equal n_sites");
    if (!spec.potential.allFinite())
        throw std::invalid_argument("hamiltonian: potential entries must be finite");
    if (!std::isfinite(spec.coupling))
        throw std::invalid_argument("hamiltonian: coupling must be finite");
}

Eigen::MatrixXcd build_hamiltonian(const HamiltonianSpec& spec) {
    validate(spec);
    const int n = spec.n_sites;
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
    Eigen::MatrixXcd hamiltonian = Eigen::MatrixXcd::Zero(dim, dim);

    const auto wrap = [n](int site) { return site > n ? site - n : site; };

    for (std::uint32_t word = 0; word < static_cast<std::uint32_t>(dim); ++word) {
        double diagonal = 0.0;
        for (int site = 1; site <= n; ++site) {
            const bool here = word & (1u << (site - 1));
            const bool next = word & (1u << (wrap(site + 1) - 1));
            if (here) diagonal += spec.potential(site - 1);
            if (here && next) diagonal += spec.coupling;

            // -1/2 (a_site^* a_{site+1} + a_{site+1}^* a_site)
            for (const auto [create_at, destroy_at] :
                 {std::pair{site, wrap(site + 1)}, std::pair{wrap(site + 1), site}}) {
                const auto lowered = apply_annihilator(word, destroy_at);
                if (!lowered) continue;
                const auto raised = apply_creator(lowered->bits, create_at);
                if (!raised) continue;
                hamiltonian(static_cast<Eigen::Index>(raised->bits),
                            static_cast<Eigen::Index>(word)) +=
                    -0.5 * lowered->sign * raised->sign;
            }
        }
        hamiltonian(word, word) += diagonal;
    }
    return hamiltonian;
}

Eigen::VectorXd constant_potential(int n_sites, double value) {
    fock_dimension(n_sites);
    return Eigen::VectorXd::Constant(n_sites, value);
}

Eigen::VectorXd cosine_potential(int n_sites, double amplitude, int wavenumber) {
    fock_dimension(n_sites);
    Eigen::VectorXd v(n_sites);
    for (int site = 1; site <= n_sites; ++site)
        v(site - 1) = amplitude *
                      std::cos(2.0 * std::numbers::pi * wavenumber * site / n_sites);
    return v;
}

Eigen::VectorXd random_potential(int n_sites, double width, std::uint64_t seed) {
    fock_dimension(n_sites);
    if (width < 0.0) throw std::invalid_argument("random_potential: width must be >= 0");
    auto engine = make_engine(seed);
    Eigen::VectorXd v(n_sites);
    for (int k = 0; k < n_sites; ++k) v(k) = uniform_in(engine, -width, width);
    return v;
}

Eigen::MatrixXd free_density_evolution(const HamiltonianSpec& spec, const Configuration& x0,
                                       std::span<const double> times) {
    validate(spec);
    validate(x0);
    if (x0.n_sites != spec.n_sites)
        throw std::invalid_argument("free_density_evolution: configuration size mismatch");
    for (const double t : times)
        if (!(t >= 0.0))
            throw std::invalid_argument("free_density_evolution: times must be >= 0");

    const Propagator propagator(build_hamiltonian(spec));
    Eigen::MatrixXd profiles(static_cast<Eigen::Index>(times.size()), spec.n_sites);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const Eigen::VectorXd weights =
            propagator.evolve_basis_state(times[k], basis_index(x0)).cwiseAbs2();
        for (int site = 1; site <= spec.n_sites; ++site) {
            double density = 0.0;
            for (std::uint32_t word = 0; word < weights.size(); ++word)
                if (word & (1u << (site - 1))) density += weights(word);
            profiles(static_cast<Eigen::Index>(k), site - 1) = density;
        }
    }
    return profiles;
}

}  // namespace zenossep
