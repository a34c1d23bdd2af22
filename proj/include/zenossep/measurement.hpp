#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "zenossep/distribution.hpp"
#include "zenossep/fock.hpp"

namespace zenossep {

/// Unitary evolution e^{-itH} backed by the spectral decomposition of H,
/// so one construction serves every t.  Immutable; safe for concurrent reads.
class Propagator {
public:
    /// Throws std::invalid_argument when `hamiltonian` is not Hermitian.
    explicit Propagator(const Eigen::MatrixXcd& hamiltonian);

    Eigen::Index dim() const { return eigenvectors_.rows(); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    /// e^{-itH} = V e^{-it Lambda} V^dagger.
    Eigen::MatrixXcd unitary(double t) const;

    /// Column `index` of e^{-itH}: the evolved basis state.
    Eigen::VectorXcd evolve_basis_state(double t, std::size_t index) const;

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// Measurement transition matrix U_t: entry (x, y) is the probability of
/// outcome x given that the previous measurement left the system in |y>,
/// i.e. |<x| e^{-itH} |y>|^2.  Doubly stochastic, block-diagonal across
/// particle-number sectors.
Eigen::MatrixXd transition_matrix(const Propagator& propagator, double t);
Eigen::MatrixXd transition_matrix(const Eigen::MatrixXcd& hamiltonian, double t);

/// Outcome distribution after measuring every `interval` until `total_time`,
/// starting from the configuration-diagonal state with weights q0:
/// U_s (U_t)^L q0 with L = floor(T/t), s = T - L t.
Eigen::VectorXd repeated_measurement_distribution(const Propagator& propagator,
                                                  double interval, double total_time,
                                                  const Eigen::VectorXd& q0);

/// Outcome distribution of a single configuration measurement on the pure
/// state `psi` after free evolution for `interval`.
Eigen::VectorXd pure_state_measurement_distribution(const Propagator& propagator,
                                                    double interval,
                                                    const Eigen::VectorXcd& psi);

/// One realized sequence of measurement outcomes.  `outcomes[0]` is the
/// initial configuration; each later entry is drawn from the U_t column of
/// its predecessor.
struct MeasurementRecord {
    std::uint64_t seed = 0;
    double interval = 0.0;
    std::vector<std::uint32_t> outcomes;
};

MeasurementRecord sample_trajectory(const Propagator& propagator, double interval,
                                    std::int64_t steps, const Configuration& x0,
                                    std::uint64_t seed);

/// Empirical distribution of the final outcome over `samples` independent
/// trajectories of `steps` measurements.  Each trajectory owns a seed derived
/// from (seed, trajectory index), so the result does not depend on the number
/// of worker threads.
Eigen::VectorXd trajectory_histogram(const Propagator& propagator, double interval,
                                     std::int64_t steps, const Configuration& x0,
                                     std::int64_t samples, std::uint64_t seed);

/// Probability that all `repetitions` equally spaced configuration
/// measurements up to `total_time` return x0:
/// [ (U_{T/M})_{x0,x0} ]^M.
double zeno_survival(const Propagator& propagator, double total_time, int repetitions,
                     const Configuration& x0);

}  // namespace zenossep
