#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace zenossep {

/// Max-abs deviation from Hermiticity.
double hermiticity_defect(const Eigen::MatrixXcd& matrix);

/// Throws std::invalid_argument when `matrix` is not square-Hermitian within
/// `tolerance` in the max norm.
void require_hermitian(const Eigen::MatrixXcd& matrix, double tolerance = 1e-10);

/// matrix^power by binary exponentiation.
Eigen::MatrixXd matrix_power(Eigen::MatrixXd matrix, std::uint64_t power);

/// Operator 2-norm (largest singular value).
double spectral_norm(const Eigen::MatrixXd& matrix);

/// exp(scale * sym) through the real spectral decomposition.  `sym` must be
/// symmetric within `tolerance`; it is symmetrized before the solve.
Eigen::MatrixXd symmetric_exponential(const Eigen::MatrixXd& sym, double scale,
                                      double tolerance = 1e-9);

inline double max_abs(const Eigen::MatrixXd& matrix) {
    return matrix.size() == 0 ? 0.0 : matrix.cwiseAbs().maxCoeff();
}

inline double max_abs(const Eigen::MatrixXcd& matrix) {
    return matrix.size() == 0 ? 0.0 : matrix.cwiseAbs().maxCoeff();
}

}  // namespace zenossep
