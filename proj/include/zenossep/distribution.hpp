#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace zenossep {

// Probability vectors over the 2^N configurations are plain Eigen vectors
// indexed by occupation word.  Tolerances below mirror what floating-point
// noise from spectral routes can produce.
inline constexpr double kDistributionNegativeTolerance = 1e-14;
inline constexpr double kDistributionSumTolerance = 1e-12;

/// Throws std::invalid_argument unless entries are >= -negative_tolerance
/// and the total mass is 1 within sum_tolerance.
void validate_distribution(const Eigen::VectorXd& distribution,
                           double sum_tolerance = kDistributionSumTolerance,
                           double negative_tolerance = kDistributionNegativeTolerance);

/// Clamps tiny negative entries to zero and rescales to unit mass, so the
/// result satisfies the strict invariants.  Accumulated roundoff from long
/// evolution chains is tolerated up to 1e-9 before it is treated as a bug.
Eigen::VectorXd clamp_distribution(Eigen::VectorXd distribution);

Eigen::VectorXd delta_distribution(std::size_t dim, std::size_t index);
Eigen::VectorXd uniform_distribution(std::size_t dim);

/// Uniform distribution over the configurations of one particle-number
/// sector of an n_sites chain.
Eigen::VectorXd sector_uniform_distribution(int n_sites, int particles);

/// Total variation distance, one half of the L1 distance.
double total_variation(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

}  // namespace zenossep
