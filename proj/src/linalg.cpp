#include "zenossep/linalg.hpp"

#include <stdexcept>

namespace zenossep {

double hermiticity_defect(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) return std::numeric_limits<double>::infinity();
    return max_abs(Eigen::MatrixXcd(matrix - matrix.adjoint()));
}

void require_hermitian(const Eigen::MatrixXcd& matrix, double tolerance) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("matrix must be square");
    if (hermiticity_defect(matrix) > tolerance)
        throw std::invalid_argument("matrix must be Hermitian");
}

Eigen::MatrixXd matrix_power(Eigen::MatrixXd matrix, std::uint64_t power) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("matrix_power: matrix must be square");
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(matrix.rows(), matrix.cols());
    while (power > 0) {
        if (power & 1u) result = result * matrix;
        power >>= 1u;
        if (power > 0) matrix = matrix * matrix;
    }
    return result;
}

double spectral_norm(const Eigen::MatrixXd& matrix) {
    if (matrix.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix);
    return svd.singularValues()(0);
}

Eigen::MatrixXd symmetric_exponential(const Eigen::MatrixXd& sym, double scale,
                                      double tolerance) {
    if (sym.rows() != sym.cols())
        throw std::invalid_argument("symmetric_exponential: matrix must be square");
    if (max_abs(Eigen::MatrixXd(sym - sym.transpose())) > tolerance)
        throw std::invalid_argument("symmetric_exponential: matrix must be symmetric");
    const Eigen::MatrixXd balanced = 0.5 * (sym + sym.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(balanced);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric_exponential: eigendecomposition failed");
    const Eigen::VectorXd scaled = (scale * solver.eigenvalues().array()).exp();
    return solver.eigenvectors() * scaled.asDiagonal() * solver.eigenvectors().transpose();
}

}  // namespace zenossep
