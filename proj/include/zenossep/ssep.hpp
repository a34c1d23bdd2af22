#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "zenossep/distribution.hpp"
#include "zenossep/fock.hpp"

namespace zenossep {

/// State of one exclusion-process realization.
struct SsepState {
    std::uint32_t config = 0;
    double clock = 0.0;
};

/// q_tau = e^{tau X} q0 for a symmetric Markov generator X.
Eigen::VectorXd master_evolve(const Eigen::MatrixXd& generator, const Eigen::VectorXd& q0,
                              double tau);

/// Continuous-time simulation of the ring exclusion process at exchange rate
/// 1/4 per active bond: exponential waiting times, uniform choice among
/// active bonds.  Returns the configuration seen at clock `tau`.
SsepState gillespie_sample(int n_sites, const Configuration& x0, double tau,
                           std::uint64_t seed);

/// gillespie_sample plus per-bond event counts, for statistical checks.
struct GillespieRun {
    SsepState state;
    std::vector<std::int64_t> bond_events;  // length n_sites, bond k = (k+1, k+2)
};
GillespieRun gillespie_sample_with_counts(int n_sites, const Configuration& x0, double tau,
                                          std::uint64_t seed);

/// Empirical distribution of gillespie_sample over `samples` runs; trajectory
/// k uses the seed derived from (seed, k), so thread count does not matter.
Eigen::VectorXd gillespie_histogram(int n_sites, const Configuration& x0, double tau,
                                    std::int64_t samples, std::uint64_t seed);

/// Site occupation probabilities rho_n = sum_x q(x) x_n.
Eigen::VectorXd density_profile(int n_sites, const Eigen::VectorXd& distribution);

/// Solves d/dtau rho_n = 1/4 (rho_{n+1} + rho_{n-1} - 2 rho_n) on the
/// periodic ring; the 1/4 matches the exclusion exchange rate, for which the
/// one-point functions close exactly on this equation.
Eigen::VectorXd heat_equation_reference(const Eigen::VectorXd& profile, double tau);

/// Variance of the site displacement from `center` (1-based), with periodic
/// displacements folded into (-N/2, N/2].  Meaningful while the profile mass
/// is concentrated well inside one winding of the ring.
double ring_displacement_variance(const Eigen::VectorXd& profile, int center);

}  // namespace zenossep
