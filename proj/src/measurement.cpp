#include "zenossep/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <stdexcept>
#include <thread>

#include "zenossep/linalg.hpp"
#include "zenossep/rng.hpp"

namespace zenossep {

namespace {

constexpr std::complex<double> kImaginary{0.0, 1.0};

Eigen::VectorXcd phases(const Eigen::VectorXd& eigenvalues, double t) {
    return (-kImaginary * t * eigenvalues.array()).exp();
}

}  // namespace

Propagator::Propagator(const Eigen::MatrixXcd& hamiltonian) {
    require_hermitian(hamiltonian);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("propagator: eigendecomposition failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd Propagator::unitary(double t) const {
    return eigenvectors_ * phases(eigenvalues_, t).asDiagonal() * eigenvectors_.adjoint();
}

Eigen::VectorXcd Propagator::evolve_basis_state(double t, std::size_t index) const {
    if (index >= static_cast<std::size_t>(dim()))
        throw std::invalid_argument("evolve_basis_state: index out of range");
    const Eigen::VectorXcd weights =
        eigenvectors_.row(static_cast<Eigen::Index>(index)).adjoint();
    return eigenvectors_ * phases(eigenvalues_, t).cwiseProduct(weights);
}

Eigen::MatrixXd transition_matrix(const Propagator& propagator, double t) {
    return propagator.unitary(t).cwiseAbs2();
}

Eigen::MatrixXd transition_matrix(const Eigen::MatrixXcd& hamiltonian, double t) {
    return transition_matrix(Propagator(hamiltonian), t);
}

Eigen::VectorXd repeated_measurement_distribution(const Propagator& propagator,
                                                  double interval, double total_time,
                                                  const Eigen::VectorXd& q0) {
    if (!(interval > 0.0))
        throw std::invalid_argument("repeated measurement: interval must be > 0");
    if (!(total_time >= 0.0))
        throw std::invalid_argument("repeated measurement: total time must be >= 0");
    validate_distribution(q0);
    if (q0.size() != propagator.dim())
        throw std::invalid_argument("repeated measurement: distribution dimension mismatch");

    const auto full_steps = static_cast<std::uint64_t>(std::floor(total_time / interval));
    const double remainder = total_time - static_cast<double>(full_steps) * interval;

    Eigen::VectorXd q = q0;
    if (full_steps > 0)
        q = matrix_power(transition_matrix(propagator, interval), full_steps) * q;
    q = transition_matrix(propagator, remainder) * q;
    return clamp_distribution(std::move(q));
}

Eigen::VectorXd pure_state_measurement_distribution(const Propagator& propagator,
                                                    double interval,
                                                    const Eigen::VectorXcd& psi) {
    if (psi.size() != propagator.dim())
        throw std::invalid_argument("pure state measurement: state dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("pure state measurement: state must be normalized");
    return clamp_distribution((propagator.unitary(interval) * psi).cwiseAbs2());
}

namespace {

/// Per-column sampling tables for one transition matrix; negative noise is
/// clamped and each column renormalized before the cumulative sums are taken.
class ColumnSampler {
public:
    explicit ColumnSampler(const Eigen::MatrixXd& transition)
        : cumulative_(transition.cwiseMax(0.0)) {
        for (Eigen::Index col = 0; col < cumulative_.cols(); ++col) {
            double acc = 0.0;
            for (Eigen::Index row = 0; row < cumulative_.rows(); ++row) {
                acc += cumulative_(row, col);
                cumulative_(row, col) = acc;
            }
            cumulative_.col(col) /= acc;
        }
    }

    std::uint32_t draw(std::uint32_t from, std::mt19937_64& engine) const {
        const double u = uniform01(engine);
        const auto* begin = cumulative_.col(from).data();
        const auto* end = begin + cumulative_.rows();
        const auto* hit = std::lower_bound(begin, end, u);
        auto row = static_cast<Eigen::Index>(hit - begin);
        if (row >= cumulative_.rows()) row = cumulative_.rows() - 1;
        return static_cast<std::uint32_t>(row);
    }

private:
    Eigen::MatrixXd cumulative_;
};

}  // namespace

MeasurementRecord sample_trajectory(const Propagator& propagator, double interval,
                                    std::int64_t steps, const Configuration& x0,
                                    std::uint64_t seed) {
    validate(x0);
    if (steps < 0) throw std::invalid_argument("sample_trajectory: steps must be >= 0");
    if (fock_dimension(x0.n_sites) != static_cast<std::size_t>(propagator.dim()))
        throw std::invalid_argument("sample_trajectory: configuration dimension mismatch");

    MeasurementRecord record{seed, interval, {}};
    record.outcomes.reserve(static_cast<std::size_t>(steps) + 1);
    record.outcomes.push_back(x0.bits);
    if (steps == 0) return record;

    const ColumnSampler sampler(transition_matrix(propagator, interval));
    auto engine = make_engine(seed);
    std::uint32_t current = x0.bits;
    for (std::int64_t k = 0; k < steps; ++k) {
        current = sampler.draw(current, engine);
        record.outcomes.push_back(current);
    }
    return record;
}

Eigen::VectorXd trajectory_histogram(const Propagator& propagator, double interval,
                                     std::int64_t steps, const Configuration& x0,
                                     std::int64_t samples, std::uint64_t seed) {
    validate(x0);
    if (steps < 0 || samples <= 0)
        throw std::invalid_argument("trajectory_histogram: steps >= 0 and samples > 0 required");

    const ColumnSampler sampler(transition_matrix(propagator, interval));
    const auto dim = propagator.dim();

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t chunk = (samples + workers - 1) / workers;

    std::vector<std::future<Eigen::VectorXd>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min<std::int64_t>(samples, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            Eigen::VectorXd counts = Eigen::VectorXd::Zero(dim);
            for (std::int64_t trajectory = begin; trajectory < end; ++trajectory) {
                auto engine = make_engine(derive_seed(seed, static_cast<std::uint64_t>(trajectory)));
                std::uint32_t current = x0.bits;
                for (std::int64_t k = 0; k < steps; ++k) current = sampler.draw(current, engine);
                counts(current) += 1.0;
            }
            return counts;
        }));
    }

    Eigen::VectorXd counts = Eigen::VectorXd::Zero(dim);
    for (auto& future : futures) counts += future.get();
    return counts / static_cast<double>(samples);
}

double zeno_survival(const Propagator& propagator, double total_time, int repetitions,
                     const Configuration& x0) {
    validate(x0);
    if (!(total_time > 0.0)) throw std::invalid_argument("zeno_survival: total time must be > 0");
    if (repetitions < 1) throw std::invalid_argument("zeno_survival: repetitions must be >= 1");
    const auto index = static_cast<std::size_t>(basis_index(x0));
    const double stay =
        std::norm(propagator.evolve_basis_state(total_time / repetitions, index)(
            static_cast<Eigen::Index>(index)));
    return std::pow(stay, repetitions);
}

}  // namespace zenossep
