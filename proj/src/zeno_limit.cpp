#include "zenossep/zeno_limit.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "zenossep/linalg.hpp"
#include "zenossep/measurement.hpp"
#include "zenossep/rng.hpp"

namespace zenossep {

Eigen::MatrixXd generator_from_double_commutator(const Eigen::MatrixXcd& hamiltonian) {
    require_hermitian(hamiltonian);
    const Eigen::Index dim = hamiltonian.rows();
    Eigen::MatrixXd generator(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        // h = H e_x; [H, P_x] = h e_x^* - e_x h^*.
        const Eigen::VectorXcd h = hamiltonian.col(x);
        generator.row(x) = h.cwiseAbs2().transpose();
        generator(x, x) -= h.squaredNorm();  // (H^2)_{xx}
    }
    return generator;
}

Eigen::MatrixXd ssep_generator_closed_form(int n_sites) {
    if (n_sites < 3)
        throw std::invalid_argument("ssep generator: n_sites must be >= 3");
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
    Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(dim, dim);
    for (std::uint32_t word = 0; word < static_cast<std::uint32_t>(dim); ++word) {
        for (int site = 0; site < n_sites; ++site) {
            const int next = (site + 1) % n_sites;
            const bool here = word & (1u << site);
            const bool there = word & (1u << next);
            if (here == there) continue;  // exclusion: only mixed bonds exchange
            const std::uint32_t swapped = word ^ ((1u << site) | (1u << next));
            generator(static_cast<Eigen::Index>(swapped), static_cast<Eigen::Index>(word)) += 0.25;
            generator(static_cast<Eigen::Index>(word), static_cast<Eigen::Index>(word)) -= 0.25;
        }
    }
    return generator;
}

double verify_potential_independence(int n_sites, std::span<const HamiltonianSpec> specs) {
    if (specs.empty())
        throw std::invalid_argument("potential independence: need at least one spec");
    std::vector<Eigen::MatrixXd> generators;
    generators.reserve(specs.size());
    for (const auto& spec : specs) {
        if (spec.n_sites != n_sites)
            throw std::invalid_argument("potential independence: mixed n_sites");
        generators.push_back(generator_from_double_commutator(build_hamiltonian(spec)));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            worst = std::max(worst, max_abs(Eigen::MatrixXd(generators[i] - generators[j])));
    return worst;
}

namespace {

Eigen::MatrixXd random_matrix_with_norm(Eigen::Index dim, double norm, std::uint64_t seed) {
    auto engine = make_engine(seed);
    Eigen::MatrixXd matrix(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row)
        for (Eigen::Index col = 0; col < dim; ++col)
            matrix(row, col) = uniform_in(engine, -1.0, 1.0);
    const double current = spectral_norm(matrix);
    if (current == 0.0) return Eigen::MatrixXd::Zero(dim, dim);
    return matrix * (norm / current);
}

}  // namespace

std::vector<SemigroupCheckPoint> semigroup_limit_check(const Eigen::MatrixXd& generator,
                                                       double scale, double exponent,
                                                       std::span<const std::int64_t> step_counts,
                                                       std::uint64_t seed) {
    if (generator.rows() != generator.cols())
        throw std::invalid_argument("semigroup check: matrix must be square");
    if (!(exponent > 1.0))
        throw std::invalid_argument(
            "semigroup check: exponent must be > 1 so that K * ||Y_K|| -> 0; "
            "smaller exponents void the hypothesis of the product limit");
    if (scale < 0.0)
        throw std::invalid_argument("semigroup check: scale must be >= 0");
    for (const auto steps : step_counts)
        if (steps < 1)
            throw std::invalid_argument("semigroup check: step counts must be >= 1");

    const Eigen::MatrixXd limit = generator.exp();
    const Eigen::MatrixXd identity =
        Eigen::MatrixXd::Identity(generator.rows(), generator.cols());

    std::vector<SemigroupCheckPoint> points;
    points.reserve(step_counts.size());
    for (const auto steps : step_counts) {
        const double norm = scale * std::pow(static_cast<double>(steps), -exponent);
        const Eigen::MatrixXd perturbation = random_matrix_with_norm(
            generator.rows(), norm, derive_seed(seed, static_cast<std::uint64_t>(steps)));
        const Eigen::MatrixXd factor =
            identity + generator / static_cast<double>(steps) + perturbation;
        points.push_back({steps, spectral_norm(matrix_power(factor,
                                                            static_cast<std::uint64_t>(steps)) -
                                               limit)});
    }
    return points;
}

ConvergenceReport zeno_scan(const Eigen::MatrixXcd& hamiltonian, double tau,
                            const Eigen::VectorXd& q0, std::span<const int> m_values) {
    if (!(tau > 0.0)) throw std::invalid_argument("zeno scan: tau must be > 0");
    validate_distribution(q0);
    if (q0.size() != hamiltonian.rows())
        throw std::invalid_argument("zeno scan: distribution dimension mismatch");
    for (const int m : m_values)
        if (m < 1) throw std::invalid_argument("zeno scan: M values must be >= 1");

    const Propagator propagator(hamiltonian);
    const Eigen::VectorXd target =
        generator_exponential(generator_from_double_commutator(hamiltonian), tau) * q0;

    ConvergenceReport report;
    report.n_sites = static_cast<int>(std::round(std::log2(double(hamiltonian.rows()))));
    report.tau = tau;
    report.rows.resize(m_values.size());

    std::vector<std::future<void>> futures;
    for (std::size_t k = 0; k < m_values.size(); ++k) {
        futures.push_back(std::async(std::launch::async, [&, k] {
            const auto start = std::chrono::steady_clock::now();
            const int m = m_values[k];
            const double interval = 1.0 / m;
            const auto steps =
                static_cast<std::int64_t>(std::floor(tau * double(m) * double(m)));
            Eigen::VectorXd evolved = q0;
            if (steps > 0)
                evolved = matrix_power(transition_matrix(propagator, interval),
                                       static_cast<std::uint64_t>(steps)) *
                          evolved;
            const double distance = total_variation(evolved, target);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            report.rows[k] = {m, steps, distance, elapsed.count()};
        }));
    }
    for (auto& future : futures) future.get();

    std::sort(report.rows.begin(), report.rows.end(),
              [](const auto& a, const auto& b) { return a.m < b.m; });
    return report;
}

std::vector<std::pair<double, double>> finite_difference_generator(
    const Eigen::MatrixXcd& hamiltonian, std::span<const double> t_values) {
    for (const double t : t_values)
        if (!(t > 0.0))
            throw std::invalid_argument("finite difference: t values must be > 0");
    const Propagator propagator(hamiltonian);
    const Eigen::MatrixXd generator = generator_from_double_commutator(hamiltonian);
    const Eigen::MatrixXd identity =
        Eigen::MatrixXd::Identity(hamiltonian.rows(), hamiltonian.cols());

    std::vector<std::pair<double, double>> errors;
    errors.reserve(t_values.size());
    for (const double t : t_values) {
        const Eigen::MatrixXd difference =
            (transition_matrix(propagator, t) - identity) / (t * t) - generator;
        errors.emplace_back(t, max_abs(difference));
    }
    return errors;
}

Eigen::MatrixXd generator_exponential(const Eigen::MatrixXd& generator, double tau) {
    return symmetric_exponential(generator, tau);
}

}  // namespace zenossep
