// Acceptance suite: one gate per criterion, each printing a single
// [PASS]/[FAIL] line with the measured quantity and its pinned tolerance.
//
//   zenossep_acceptance        runs every criterion
//   zenossep_acceptance <k>    runs criterion k only
//
// The exit code is the number of failed criteria.

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zenossep/distribution.hpp"
#include "zenossep/fock.hpp"
#include "zenossep/hamiltonian.hpp"
#include "zenossep/linalg.hpp"
#include "zenossep/measurement.hpp"
#include "zenossep/rng.hpp"
#include "zenossep/ssep.hpp"
#include "zenossep/zeno_limit.hpp"

using namespace zenossep;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

std::vector<HamiltonianSpec> survey_specs(int n_sites) {
    std::vector<HamiltonianSpec> specs;
    for (int draw = 0; draw < 5; ++draw) {
        const Eigen::VectorXd potential =
            random_potential(n_sites, 5.0, 100 + static_cast<std::uint64_t>(draw));
        for (const double coupling : {0.0, 1.0, -1.5, 2.0})
            specs.push_back({n_sites, potential, coupling});
    }
    return specs;
}

// 1. emergent generator vs closed-form exclusion generator, N = 3..8,
//    5 random potentials x 4 couplings, tolerance 1e-9
Outcome generator_equivalence() {
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n) {
        const Eigen::MatrixXd closed = ssep_generator_closed_form(n);
        for (const auto& spec : survey_specs(n)) {
            const Eigen::MatrixXd numeric =
                generator_from_double_commutator(build_hamiltonian(spec));
            worst = std::max(worst, max_abs(Eigen::MatrixXd(numeric - closed)));
        }
    }
    return {worst < 1e-9, fmt("max |X_num - X_ssep| = %.3e (tolerance 1e-9)", worst)};
}

// 2. generator is independent of potential and coupling, tolerance 1e-10
Outcome potential_independence() {
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n)
        worst = std::max(worst, verify_potential_independence(n, survey_specs(n)));
    return {worst < 1e-10, fmt("max pairwise deviation = %.3e (tolerance 1e-10)", worst)};
}

// 3. transition matrices are doubly stochastic to 1e-12 at N = 6
Outcome double_stochasticity() {
    const HamiltonianSpec spec{6, random_potential(6, 5.0, 33), 0.7};
    const Propagator propagator(build_hamiltonian(spec));
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(64);
    double worst = 0.0;
    for (const double t : {0.01, 0.1, 1.0}) {
        const Eigen::MatrixXd u = transition_matrix(propagator, t);
        worst = std::max(worst, (u.rowwise().sum() - ones).cwiseAbs().maxCoeff());
        worst = std::max(worst,
                         (u.colwise().sum().transpose() - ones).cwiseAbs().maxCoeff());
    }
    return {worst < 1e-12, fmt("max row/column sum deviation = %.3e (tolerance 1e-12)", worst)};
}

// 4. measured dynamics converges to the semigroup: distances strictly
//    decreasing over M in {4,...,64} and d(64) < 0.02
Outcome semigroup_convergence() {
    const HamiltonianSpec spec{4, random_potential(4, 5.0, 11), 1.0};
    const Eigen::VectorXd q0 =
        delta_distribution(16, config_from_string("1010").bits);
    const std::vector<int> ms{4, 8, 16, 32, 64};
    const auto report = zeno_scan(build_hamiltonian(spec), 0.5, q0, ms);

    bool decreasing = true;
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        decreasing = decreasing && report.rows[k].distance < report.rows[k - 1].distance;
    const double final_distance = report.rows.back().distance;
    return {decreasing && final_distance < 0.02,
            fmt("d(M) = [%.3e %.3e %.3e %.3e %.3e], %s, d(64) = %.3e (< 0.02)",
                report.rows[0].distance, report.rows[1].distance, report.rows[2].distance,
                report.rows[3].distance, report.rows[4].distance,
                decreasing ? "strictly decreasing" : "NOT decreasing", final_distance)};
}

// 5. finite-difference extraction of the generator: the error after dividing
//    by t^2 must shrink by a factor in [0.3, 0.7] per halving of t
Outcome finite_difference_rate() {
    const HamiltonianSpec spec{4, random_potential(4, 5.0, 11), 1.0};
    const std::vector<double> ts{0.1, 0.05, 0.025, 0.0125};
    const auto errors = finite_difference_generator(build_hamiltonian(spec), ts);
    bool pass = true;
    std::string ratios;
    for (std::size_t k = 1; k < errors.size(); ++k) {
        const double ratio = errors[k].second / errors[k - 1].second;
        if (!(ratio >= 0.3 && ratio <= 0.7)) pass = false;
        ratios += fmt("%s%.4f", k > 1 ? " " : "", ratio);
    }
    return {pass, fmt("halving ratios = [%s] (required range [0.3, 0.7])", ratios.c_str())};
}

// 6. perturbed Euler product: errors decreasing over K in {1e2,1e3,1e4} and
//    below 1e-2 at K = 1e4, with ||X|| = 2 and ||Y_K|| = K^{-1.5}
Outcome euler_product_limit() {
    auto engine = make_engine(1);
    Eigen::MatrixXd generator(8, 8);
    for (Eigen::Index row = 0; row < 8; ++row)
        for (Eigen::Index col = 0; col < 8; ++col)
            generator(row, col) = uniform_in(engine, -1.0, 1.0);
    generator *= 2.0 / spectral_norm(generator);

    const std::vector<std::int64_t> ks{100, 1000, 10000};
    const auto points = semigroup_limit_check(generator, 1.0, 1.5, ks, 77);
    const bool decreasing =
        points[1].error < points[0].error && points[2].error < points[1].error;
    const bool small = points[2].error < 1e-2;
    return {decreasing && small,
            fmt("errors = [%.3e %.3e %.3e], %s, final %s 1e-2", points[0].error,
                points[1].error, points[2].error,
                decreasing ? "decreasing" : "NOT decreasing", small ? "<" : ">=")};
}

// 7. survival probability deficits follow the 1/M law and p(160) > 0.99
Outcome zeno_survival_baseline() {
    const HamiltonianSpec spec{4, random_potential(4, 5.0, 21), 0.0};
    const Propagator propagator(build_hamiltonian(spec));
    const Configuration x0 = config_from_string("1000");

    bool ratios_ok = true;
    std::string ratios;
    double previous = 0.0;
    double last_survival = 0.0;
    for (const int repetitions : {10, 20, 40, 80, 160}) {
        last_survival = zeno_survival(propagator, 1.0, repetitions, x0);
        const double deficit = 1.0 - last_survival;
        if (previous > 0.0) {
            const double ratio = deficit / previous;
            if (!(ratio >= 0.4 && ratio <= 0.6)) ratios_ok = false;
            ratios += fmt("%s%.3f", ratios.empty() ? "" : " ", ratio);
        }
        previous = deficit;
    }
    const bool survived = last_survival > 0.99;
    return {ratios_ok && survived,
            fmt("deficit ratios = [%s] (range [0.4, 0.6]), p(160) = %.5f (> 0.99)",
                ratios.c_str(), last_survival)};
}

// 8. Monte-Carlo exclusion sampler agrees with the master equation:
//    total variation < 0.01 with 1e5 trajectories
Outcome sampler_vs_master() {
    const int n = 6;
    const Configuration x0 = config_from_string("111000");
    const Eigen::VectorXd exact = master_evolve(
        ssep_generator_closed_form(n), delta_distribution(64, x0.bits), 1.0);
    const Eigen::VectorXd empirical = gillespie_histogram(n, x0, 1.0, 100000, 42);
    const double tv = total_variation(empirical, exact);
    return {tv < 0.01, fmt("total variation = %.5f (tolerance 0.01)", tv)};
}

// 9. exclusion densities follow the discrete heat flow to 1e-8
Outcome diffusion_closure() {
    const int n = 6;
    const Eigen::MatrixXd generator = ssep_generator_closed_form(n);
    double worst = 0.0;
    for (const std::uint64_t seed : {4ull, 5ull, 6ull}) {
        auto engine = make_engine(seed);
        Eigen::VectorXd q0(64);
        for (Eigen::Index k = 0; k < q0.size(); ++k) q0(k) = uniform01(engine) + 1e-3;
        q0 /= q0.sum();
        for (const double tau : {0.3, 1.0, 3.0}) {
            const Eigen::VectorXd via_master =
                density_profile(n, master_evolve(generator, q0, tau));
            const Eigen::VectorXd via_heat =
                heat_equation_reference(density_profile(n, q0), tau);
            worst = std::max(worst, (via_master - via_heat).cwiseAbs().maxCoeff());
        }
    }
    return {worst < 1e-8, fmt("max profile deviation = %.3e (tolerance 1e-8)", worst)};
}

// 10. ballistic free spreading vs diffusive measured/exclusion spreading
Outcome transport_contrast() {
    const int n = 8;
    const Configuration x0 = config_from_string("10000000");
    const std::vector<double> grid{0.2, 0.4, 0.6, 0.8, 1.0};

    const HamiltonianSpec clean{n, Eigen::VectorXd::Zero(n), 0.0};
    const Eigen::MatrixXd profiles = free_density_evolution(clean, x0, grid);
    std::vector<double> free_variances;
    for (Eigen::Index row = 0; row < profiles.rows(); ++row)
        free_variances.push_back(ring_displacement_variance(profiles.row(row), 1));
    const double free_exponent = oracles::log_log_slope(grid, free_variances);

    const Eigen::MatrixXd generator = ssep_generator_closed_form(n);
    const Eigen::VectorXd q0 = delta_distribution(256, x0.bits);
    std::vector<double> exclusion_variances;
    for (const double tau : grid)
        exclusion_variances.push_back(
            ring_displacement_variance(density_profile(n, master_evolve(generator, q0, tau)), 1));
    const double exclusion_exponent = oracles::log_log_slope(grid, exclusion_variances);

    const Propagator propagator(build_hamiltonian(clean));
    std::vector<double> measured_variances;
    for (const double tau : grid) {
        const Eigen::VectorXd p =
            repeated_measurement_distribution(propagator, 1.0 / 16, tau * 16, q0);
        measured_variances.push_back(ring_displacement_variance(density_profile(n, p), 1));
    }
    const double measured_exponent = oracles::log_log_slope(grid, measured_variances);

    const bool ballistic = free_exponent > 1.8 && free_exponent < 2.2;
    const bool diffusive = exclusion_exponent > 0.8 && exclusion_exponent < 1.2 &&
                           measured_exponent > 0.8 && measured_exponent < 1.2;
    return {ballistic && diffusive,
            fmt("free exponent = %.3f (range [1.8, 2.2]); exclusion = %.3f, "
                "measured = %.3f (range [0.8, 1.2])",
                free_exponent, exclusion_exponent, measured_exponent)};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"generator-equivalence", generator_equivalence},
    {"potential-independence", potential_independence},
    {"double-stochasticity", double_stochasticity},
    {"semigroup-convergence", semigroup_convergence},
    {"finite-difference-rate", finite_difference_rate},
    {"euler-product-limit", euler_product_limit},
    {"zeno-survival", zeno_survival_baseline},
    {"sampler-vs-master", sampler_vs_master},
    {"diffusion-closure", diffusion_closure},
    {"transport-contrast", transport_contrast},
};

}  // namespace

int main(int argc, char** argv) {
    int requested = 0;
    if (argc > 1) {
        requested = std::atoi(argv[1]);
        if (requested < 1 || requested > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
            return 64;
        }
    }

    int failures = 0;
    for (int k = 1; k <= 10; ++k) {
        if (requested != 0 && k != requested) continue;
        const auto outcome = kCriteria[k - 1].run();
        std::printf("[%s] %02d %s: %s\n", outcome.pass ? "PASS" : "FAIL", k,
                    kCriteria[k - 1].name, outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    return failures;
}
