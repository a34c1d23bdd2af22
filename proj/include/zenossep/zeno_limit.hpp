#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zenossep/hamiltonian.hpp"

namespace zenossep {

/// Markov generator emerging from the measurement dynamics: entry (x, y) is
/// -1/2 <y| [H, [H, P_x]] |y>.  Columns sum to zero, off-diagonal entries are
/// nonnegative exchange rates, and the matrix is symmetric.
///
/// With P_x = e_x e_x^*, the double commutator contracts to
///   <y|[H,[H,P_x]]|y> = 2 delta_{xy} (H^2)_{xx} - 2 |H_{yx}|^2,
/// so each column needs one matrix-vector product with H.
Eigen::MatrixXd generator_from_double_commutator(const Eigen::MatrixXcd& hamiltonian);

/// The exclusion-process generator written down directly: every periodic
/// bond with exactly one particle exchanges its endpoints at rate 1/4.
/// Requires n_sites >= 3 (at N = 2 the wrapped chain double-counts its only
/// bond and the equivalence with the measured dynamics breaks down).
Eigen::MatrixXd ssep_generator_closed_form(int n_sites);

/// Max entrywise deviation between the emergent generators of the given
/// specs (all on the same number of sites).  Zero means the measured
/// dynamics does not see potential or interaction at all.
double verify_potential_independence(int n_sites, std::span<const HamiltonianSpec> specs);

struct SemigroupCheckPoint {
    std::int64_t steps;  // K
    double error;        // ||(I + X/K + Y_K)^K - e^X||_2
};

/// Numerical witness of the perturbed Euler-product limit: Y_K is a seeded
/// random matrix rescaled to spectral norm `scale * K^{-exponent}`.  The
/// hypothesis K * ||Y_K|| -> 0 requires exponent > 1; smaller exponents are
/// rejected.
std::vector<SemigroupCheckPoint> semigroup_limit_check(const Eigen::MatrixXd& generator,
                                                       double scale, double exponent,
                                                       std::span<const std::int64_t> step_counts,
                                                       std::uint64_t seed);

struct ConvergenceRow {
    int m = 0;                // measurement refinement M (interval 1/M)
    std::int64_t steps = 0;   // [tau M^2]
    double distance = 0.0;    // total variation to e^{tau X} q0
    double seconds = 0.0;     // wall time of this row's computation
};

struct ConvergenceReport {
    int n_sites = 0;
    double tau = 0.0;
    std::vector<ConvergenceRow> rows;  // sorted by increasing m
};

/// For each M: apply (U_{1/M})^{[tau M^2]} to q0 and report the total
/// variation distance to e^{tau X} q0.  The trailing fractional step U_s
/// tends to the identity and is omitted.  Rows are computed concurrently on
/// a shared propagator.
ConvergenceReport zeno_scan(const Eigen::MatrixXcd& hamiltonian, double tau,
                            const Eigen::VectorXd& q0, std::span<const int> m_values);

/// Errors ||(U_t - I)/t^2 - X||_max for each t.  For this model H is real
/// symmetric, so U_t is even in t and the error shrinks like t^2 (factor
/// ~1/4 per halving of t).
std::vector<std::pair<double, double>> finite_difference_generator(
    const Eigen::MatrixXcd& hamiltonian, std::span<const double> t_values);

/// e^{tau X} for a symmetric generator, via its spectral decomposition.
Eigen::MatrixXd generator_exponential(const Eigen::MatrixXd& generator, double tau);

}  // namespace zenossep
