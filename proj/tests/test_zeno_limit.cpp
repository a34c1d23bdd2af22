#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "oracles.hpp"
#include "zenossep/distribution.hpp"
#include "zenossep/hamiltonian.hpp"
#include "zenossep/linalg.hpp"
#include "zenossep/rng.hpp"
#include "zenossep/zeno_limit.hpp"

using namespace zenossep;

namespace {

Eigen::MatrixXcd random_hamiltonian(int n_sites, double width, double coupling,
                                    std::uint64_t seed) {
    return build_hamiltonian({n_sites, random_potential(n_sites, width, seed), coupling});
}

Eigen::MatrixXd random_square(Eigen::Index dim, double norm, std::uint64_t seed) {
    auto engine = make_engine(seed);
    Eigen::MatrixXd matrix(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row)
        for (Eigen::Index col = 0; col < dim; ++col)
            matrix(row, col) = uniform_in(engine, -1.0, 1.0);
    return matrix * (norm / spectral_norm(matrix));
}

}  // namespace

TEST_CASE("generator columns sum to zero") {
    const Eigen::MatrixXd generator =
        generator_from_double_commutator(random_hamiltonian(5, 5.0, 1.2, 1));
    CHECK(generator.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("three-site free generator has the known entries") {
    const Eigen::MatrixXd generator = generator_from_double_commutator(
        build_hamiltonian({3, Eigen::VectorXd::Zero(3), 0.0}));
    const auto one_particle = config_from_string("100").bits;   // word 1
    const auto shifted = config_from_string("010").bits;        // word 2
    CHECK(generator(one_particle, shifted) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(generator(one_particle, one_particle) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("generator matches the dense double-commutator oracle") {
    for (int n : {3, 4, 5}) {
        CAPTURE(n);
        const Eigen::MatrixXcd h = random_hamiltonian(n, 5.0, -1.5, 40 + n);
        const Eigen::MatrixXd fast = generator_from_double_commutator(h);
        const Eigen::MatrixXd dense = oracles::generator_from_dense_commutators(h);
        CHECK(max_abs(Eigen::MatrixXd(fast - dense)) < 1e-11);
    }
}

TEST_CASE("generator equals the closed-form exclusion generator") {
    for (int n : {3, 4, 5, 6}) {
        CAPTURE(n);
        const Eigen::MatrixXd closed = ssep_generator_closed_form(n);
        for (double coupling : {0.0, 2.0}) {
            const Eigen::MatrixXd numeric = generator_from_double_commutator(
                random_hamiltonian(n, 5.0, coupling, 50 + n));
            CHECK(max_abs(Eigen::MatrixXd(numeric - closed)) < 1e-9);
        }
    }
}

TEST_CASE("generator invariants: symmetry, sign, adjacency sparsity") {
    // hand-rolled property sweep over random specs
    const int n = 5;
    for (std::uint64_t seed : {5ull, 6ull, 7ull}) {
        for (double coupling : {0.7, -2.0}) {
            CAPTURE(seed);
            CAPTURE(coupling);
            const Eigen::MatrixXd generator =
                generator_from_double_commutator(random_hamiltonian(n, 5.0, coupling, seed));
            CHECK(max_abs(Eigen::MatrixXd(generator - generator.transpose())) < 1e-12);
            CHECK(generator.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);

            for (std::uint32_t x = 0; x < 32; ++x)
                for (std::uint32_t y = 0; y < 32; ++y) {
                    if (x == y) continue;
                    CHECK(generator(x, y) >= -1e-12);
                    // allowed moves: exactly one adjacent (periodic) pair swapped
                    bool adjacent_swap = false;
                    for (int site = 0; site < n; ++site) {
                        const int next = (site + 1) % n;
                        const std::uint32_t mask = (1u << site) | (1u << next);
                        const bool mixed = std::popcount(x & mask) == 1;
                        if (mixed && (x ^ mask) == y) adjacent_swap = true;
                    }
                    if (!adjacent_swap) CHECK(generator(x, y) < 1e-12);
                    // positive rate +1/4 pins the sign convention
                    if (adjacent_swap)
                        CHECK(generator(x, y) == doctest::Approx(0.25).epsilon(1e-9));
                }
        }
    }
}

TEST_CASE("closed-form generator annihilates constants and freezes the full ring") {
    const int n = 4;
    const Eigen::MatrixXd generator = ssep_generator_closed_form(n);
    const Eigen::VectorXd constant = Eigen::VectorXd::Ones(16);
    CHECK((generator.transpose() * constant).cwiseAbs().maxCoeff() < 1e-13);

    const std::uint32_t full = 0b1111;
    CHECK(generator.row(full).cwiseAbs().maxCoeff() == 0.0);
    CHECK(generator.col(full).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(ssep_generator_closed_form(2), std::invalid_argument);
}

TEST_CASE("generator exponential is doubly stochastic") {
    const Eigen::MatrixXd generator = ssep_generator_closed_form(5);
    for (double tau : {0.1, 1.0, 10.0}) {
        CAPTURE(tau);
        const Eigen::MatrixXd semigroup = generator_exponential(generator, tau);
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(32);
        CHECK(semigroup.minCoeff() > -1e-10);
        CHECK((semigroup.rowwise().sum() - ones).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((semigroup.colwise().sum().transpose() - ones).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("potential and interaction leave the generator unchanged") {
    const int n = 4;
    std::vector<HamiltonianSpec> specs;
    specs.push_back({n, Eigen::VectorXd::Zero(n), 0.0});
    specs.push_back({n, random_potential(n, 5.0, 61), 0.0});
    specs.push_back({n, Eigen::VectorXd::Zero(n), 2.0});
    specs.push_back({n, random_potential(n, 5.0, 62), -1.5});
    CHECK(verify_potential_independence(n, specs) < 1e-10);

    const std::vector<HamiltonianSpec> single{specs.front()};
    CHECK(verify_potential_independence(n, single) == 0.0);

    std::vector<HamiltonianSpec> mixed{specs.front(), {5, Eigen::VectorXd::Zero(5), 0.0}};
    CHECK_THROWS_AS(verify_potential_independence(n, mixed), std::invalid_argument);
}

TEST_CASE("independence does not extend to the hopping scale") {
    const int n = 4;
    const Eigen::MatrixXcd doubled =
        2.0 * build_hamiltonian({n, Eigen::VectorXd::Zero(n), 0.0});
    const Eigen::MatrixXd generator = generator_from_double_commutator(doubled);
    const double deviation =
        max_abs(Eigen::MatrixXd(generator - ssep_generator_closed_form(n)));
    // X scales with the square of the hopping amplitude: every rate becomes
    // 4/4, and the diagonal of the alternating configuration (four active
    // bonds) moves from -1 to -4
    CHECK(deviation == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("unperturbed Euler product converges to the exponential") {
    const Eigen::MatrixXd generator = random_square(8, 2.0, 9);
    const std::vector<std::int64_t> steps{100, 1000, 10000};
    const auto points = semigroup_limit_check(generator, 0.0, 1.5, steps, 1);
    CHECK(points.back().error < 1e-3);
    for (std::size_t k = 1; k < points.size(); ++k)
        CHECK(points[k].error < points[k - 1].error);
}

TEST_CASE("perturbed Euler product converges once K||Y_K|| vanishes") {
    const Eigen::MatrixXd generator = random_square(8, 2.0, 10);
    const std::vector<std::int64_t> steps{100, 1000, 10000};
    const auto points = semigroup_limit_check(generator, 1.0, 1.5, steps, 11);
    for (std::size_t k = 1; k < points.size(); ++k)
        CHECK(points[k].error < points[k - 1].error);
    // On this schedule K ||Y_K|| = 1/sqrt(K), so the best possible error at
    // K = 1e4 is of order 1e-2 (the first-order perturbation term itself).
    CHECK(points.back().error < 5e-2);
}

TEST_CASE("semigroup check rejects a hypothesis-violating schedule") {
    const Eigen::MatrixXd generator = random_square(8, 2.0, 12);
    const std::vector<std::int64_t> steps{100};
    CHECK_THROWS_AS(semigroup_limit_check(generator, 1.0, 0.5, steps, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(semigroup_limit_check(generator, 1.0, 1.0, steps, 1),
                    std::invalid_argument);
}

TEST_CASE("zeno scan distances decrease toward the semigroup limit") {
    const Eigen::MatrixXcd h = random_hamiltonian(4, 5.0, 1.0, 11);
    const Eigen::VectorXd q0 = delta_distribution(16, config_from_string("1010").bits);
    const std::vector<int> ms{4, 8, 16, 32, 64};
    const auto report = zeno_scan(h, 0.5, q0, ms);

    REQUIRE(report.rows.size() == 5);
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        CHECK(report.rows[k].m == ms[k]);
        CHECK(report.rows[k].steps ==
              static_cast<std::int64_t>(0.5 * ms[k] * ms[k]));
        if (k > 0) CHECK(report.rows[k].distance < report.rows[k - 1].distance);
    }
    CHECK(report.rows.back().distance < 0.02);
}

TEST_CASE("zeno scan is continuous at tau -> 0") {
    const Eigen::MatrixXcd h = random_hamiltonian(4, 2.0, 0.5, 12);
    const Eigen::VectorXd q0 = delta_distribution(16, 3);
    const std::vector<int> ms{8};
    const auto report = zeno_scan(h, 1e-4, q0, ms);
    CHECK(report.rows.front().distance < 1e-3);
}

TEST_CASE("uniform initial data is stationary for the zeno scan") {
    const Eigen::MatrixXcd h = random_hamiltonian(4, 3.0, -0.7, 13);
    const std::vector<int> ms{4, 16};
    const auto report = zeno_scan(h, 0.5, uniform_distribution(16), ms);
    for (const auto& row : report.rows) CHECK(row.distance < 1e-12);
}

TEST_CASE("finite-difference error shrinks quartically after division by t^2") {
    const Eigen::MatrixXcd h = random_hamiltonian(4, 5.0, 1.0, 11);
    const std::vector<double> ts{0.1, 0.05, 0.025, 0.0125};
    const auto errors = finite_difference_generator(h, ts);
    REQUIRE(errors.size() == 4);
    CHECK(errors.back().second < errors.front().second);
    // U_t is even in t (H is real symmetric), so the remainder after the
    // t^2 X term is O(t^4) and each halving shrinks the error by ~1/4.
    for (std::size_t k = 1; k < errors.size(); ++k) {
        const double ratio = errors[k].second / errors[k - 1].second;
        CHECK(ratio > 0.2);
        CHECK(ratio < 0.3);
    }
}

TEST_CASE("finite difference vanishes for measurement-diagonal evolution") {
    Eigen::MatrixXcd diagonal = Eigen::MatrixXcd::Zero(8, 8);
    for (int k = 0; k < 8; ++k) diagonal(k, k) = 0.5 * k - 2.0;
    const std::vector<double> ts{0.1, 0.05};
    const auto errors = finite_difference_generator(diagonal, ts);
    for (const auto& [t, error] : errors) CHECK(error < 1e-12);
    CHECK(max_abs(generator_from_double_commutator(diagonal)) < 1e-12);
}
