#include "zenossep/zenossep.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <mutex>
#include <new>
#include <span>
#include <stdexcept>
#include <string>

#include "zenossep/distribution.hpp"
#include "zenossep/fock.hpp"
#include "zenossep/hamiltonian.hpp"
#include "zenossep/linalg.hpp"
#include "zenossep/measurement.hpp"
#include "zenossep/rng.hpp"
#include "zenossep/ssep.hpp"
#include "zenossep/zeno_limit.hpp"

using namespace zenossep;

struct zs_system {
    HamiltonianSpec spec;
    Eigen::MatrixXcd hamiltonian;

    const Propagator& propagator() const {
        std::call_once(once_, [this] {
            propagator_ = std::make_unique<Propagator>(hamiltonian);
        });
        return *propagator_;
    }

private:
    mutable std::once_flag once_;
    mutable std::unique_ptr<Propagator> propagator_;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) { t_last_error = message ? message : "unknown error"; }

zs_status fail(zs_status status, const char* message) {
    set_error(message);
    return status;
}

/// Runs `body`, translating exceptions to statuses.
template <typename Body>
zs_status guarded(Body&& body) {
    try {
        body();
        return ZS_OK;
    } catch (const std::invalid_argument& error) {
        return fail(ZS_ERR_INVALID_ARGUMENT, error.what());
    } catch (const std::bad_alloc&) {
        return fail(ZS_ERR_NUMERIC, "out of memory");
    } catch (const std::exception& error) {
        return fail(ZS_ERR_NUMERIC, error.what());
    } catch (...) {
        return fail(ZS_ERR_NUMERIC, "unknown failure");
    }
}

bool all_present(std::initializer_list<const void*> pointers) {
    for (const void* p : pointers)
        if (p == nullptr) return false;
    return true;
}

Eigen::VectorXd to_vector(const double* data, Eigen::Index size) {
    return Eigen::Map<const Eigen::VectorXd>(data, size);
}

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void copy_out(const Eigen::MatrixXd& matrix, double* out) {
    Eigen::Map<RowMajorMatrix>(out, matrix.rows(), matrix.cols()) = matrix;
}

void copy_out(const Eigen::VectorXd& vector, double* out) {
    Eigen::Map<Eigen::VectorXd>(out, vector.size()) = vector;
}

Configuration make_config(std::uint32_t bits, int n_sites) {
    Configuration config{bits, n_sites};
    validate(config);
    return config;
}

}  // namespace

extern "C" {

const char* zs_status_name(zs_status status) {
    switch (status) {
        case ZS_OK: return "ZS_OK";
        case ZS_ERR_NULL_ARGUMENT: return "ZS_ERR_NULL_ARGUMENT";
        case ZS_ERR_INVALID_ARGUMENT: return "ZS_ERR_INVALID_ARGUMENT";
        case ZS_ERR_NUMERIC: return "ZS_ERR_NUMERIC";
    }
    return "ZS_ERR_UNKNOWN";
}

const char* zs_last_error(void) { return t_last_error.c_str(); }

const char* zs_version(void) { return "0.1.0"; }

zs_status zs_system_create(int32_t n_sites, const double* potential, double coupling,
                           zs_system** out_system) {
    if (out_system == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out_system is NULL");
    *out_system = nullptr;
    return guarded([&] {
        HamiltonianSpec spec;
        spec.n_sites = n_sites;
        spec.potential = potential != nullptr
                             ? to_vector(potential, n_sites)
                             : Eigen::VectorXd::Zero(std::max<int32_t>(n_sites, 0)).eval();
        spec.coupling = coupling;
        auto system = std::make_unique<zs_system>();
        system->spec = spec;
        system->hamiltonian = build_hamiltonian(spec);
        *out_system = system.release();
    });
}

void zs_system_destroy(zs_system* system) { delete system; }

int32_t zs_system_sites(const zs_system* system) {
    return system == nullptr ? 0 : system->spec.n_sites;
}

int64_t zs_system_dim(const zs_system* system) {
    return system == nullptr ? 0 : static_cast<int64_t>(system->hamiltonian.rows());
}

zs_status zs_hamiltonian(const zs_system* system, double* out_real, double* out_imag) {
    if (!all_present({system, out_real}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_real is NULL");
    return guarded([&] {
        copy_out(Eigen::MatrixXd(system->hamiltonian.real()), out_real);
        if (out_imag != nullptr)
            copy_out(Eigen::MatrixXd(system->hamiltonian.imag()), out_imag);
    });
}

zs_status zs_transition_matrix(const zs_system* system, double t, double* out_matrix) {
    if (!all_present({system, out_matrix}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_matrix is NULL");
    return guarded([&] { copy_out(transition_matrix(system->propagator(), t), out_matrix); });
}

zs_status zs_generator(const zs_system* system, double* out_matrix) {
    if (!all_present({system, out_matrix}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_matrix is NULL");
    return guarded(
        [&] { copy_out(generator_from_double_commutator(system->hamiltonian), out_matrix); });
}

zs_status zs_ssep_generator(int32_t n_sites, double* out_matrix) {
    if (out_matrix == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out_matrix is NULL");
    return guarded([&] { copy_out(ssep_generator_closed_form(n_sites), out_matrix); });
}

zs_status zs_repeated_measurement(const zs_system* system, double interval,
                                  double total_time, const double* q0, double* out) {
    if (!all_present({system, q0, out}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/q0/out is NULL");
    return guarded([&] {
        copy_out(repeated_measurement_distribution(
                     system->propagator(), interval, total_time,
                     to_vector(q0, system->hamiltonian.rows())),
                 out);
    });
}

zs_status zs_zeno_survival(const zs_system* system, double total_time, int32_t repetitions,
                           uint32_t initial_config, double* out_probability) {
    if (!all_present({system, out_probability}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_probability is NULL");
    return guarded([&] {
        *out_probability = zeno_survival(system->propagator(), total_time, repetitions,
                                         make_config(initial_config, system->spec.n_sites));
    });
}

zs_status zs_sample_trajectory(const zs_system* system, double interval, int64_t steps,
                               uint32_t initial_config, uint64_t seed,
                               uint32_t* out_configs) {
    if (!all_present({system, out_configs}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_configs is NULL");
    return guarded([&] {
        const auto record =
            sample_trajectory(system->propagator(), interval, steps,
                              make_config(initial_config, system->spec.n_sites), seed);
        std::memcpy(out_configs, record.outcomes.data(),
                    record.outcomes.size() * sizeof(uint32_t));
    });
}

zs_status zs_free_density(const zs_system* system, uint32_t initial_config, double time,
                          double* out_profile) {
    if (!all_present({system, out_profile}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/out_profile is NULL");
    return guarded([&] {
        const double times[] = {time};
        const Eigen::MatrixXd profiles =
            free_density_evolution(system->spec, make_config(initial_config, system->spec.n_sites),
                                   std::span<const double>(times));
        copy_out(Eigen::VectorXd(profiles.row(0)), out_profile);
    });
}

zs_status zs_zeno_scan(const zs_system* system, double tau, const double* q0,
                       const int32_t* m_values, int32_t m_count, double* out_distances,
                       int64_t* out_steps, double* out_seconds) {
    if (!all_present({system, q0, m_values, out_distances}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/q0/m_values/out_distances is NULL");
    if (m_count <= 0) return fail(ZS_ERR_INVALID_ARGUMENT, "m_count must be > 0");
    return guarded([&] {
        std::vector<int> ms(m_values, m_values + m_count);
        const auto report = zeno_scan(system->hamiltonian, tau,
                                      to_vector(q0, system->hamiltonian.rows()), ms);
        // report rows are sorted by M; answer in the caller's order
        for (int32_t k = 0; k < m_count; ++k) {
            const auto row = std::find_if(report.rows.begin(), report.rows.end(),
                                          [&](const auto& r) { return r.m == m_values[k]; });
            out_distances[k] = row->distance;
            if (out_steps != nullptr) out_steps[k] = row->steps;
            if (out_seconds != nullptr) out_seconds[k] = row->seconds;
        }
    });
}

zs_status zs_finite_difference(const zs_system* system, const double* t_values,
                               int32_t t_count, double* out_errors) {
    if (!all_present({system, t_values, out_errors}))
        return fail(ZS_ERR_NULL_ARGUMENT, "system/t_values/out_errors is NULL");
    if (t_count <= 0) return fail(ZS_ERR_INVALID_ARGUMENT, "t_count must be > 0");
    return guarded([&] {
        const auto errors = finite_difference_generator(
            system->hamiltonian, std::span<const double>(t_values, t_count));
        for (int32_t k = 0; k < t_count; ++k) out_errors[k] = errors[k].second;
    });
}

zs_status zs_master_evolve(int32_t n_sites, const double* q0, double tau, double* out) {
    if (!all_present({q0, out})) return fail(ZS_ERR_NULL_ARGUMENT, "q0/out is NULL");
    return guarded([&] {
        const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
        copy_out(master_evolve(ssep_generator_closed_form(n_sites), to_vector(q0, dim), tau),
                 out);
    });
}

zs_status zs_density_profile(int32_t n_sites, const double* q, double* out_profile) {
    if (!all_present({q, out_profile}))
        return fail(ZS_ERR_NULL_ARGUMENT, "q/out_profile is NULL");
    return guarded([&] {
        const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
        copy_out(density_profile(n_sites, to_vector(q, dim)), out_profile);
    });
}

zs_status zs_heat_reference(int32_t n_sites, const double* profile, double tau,
                            double* out_profile) {
    if (!all_present({profile, out_profile}))
        return fail(ZS_ERR_NULL_ARGUMENT, "profile/out_profile is NULL");
    return guarded([&] {
        fock_dimension(n_sites);
        copy_out(heat_equation_reference(to_vector(profile, n_sites), tau), out_profile);
    });
}

zs_status zs_gillespie_final(int32_t n_sites, uint32_t initial_config, double tau,
                             uint64_t seed, uint32_t* out_config, double* out_clock) {
    if (out_config == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out_config is NULL");
    return guarded([&] {
        const auto state =
            gillespie_sample(n_sites, make_config(initial_config, n_sites), tau, seed);
        *out_config = state.config;
        if (out_clock != nullptr) *out_clock = state.clock;
    });
}

zs_status zs_gillespie_histogram(int32_t n_sites, uint32_t initial_config, double tau,
                                 int64_t samples, uint64_t seed, double* out_distribution) {
    if (out_distribution == nullptr)
        return fail(ZS_ERR_NULL_ARGUMENT, "out_distribution is NULL");
    return guarded([&] {
        copy_out(gillespie_histogram(n_sites, make_config(initial_config, n_sites), tau,
                                     samples, seed),
                 out_distribution);
    });
}

uint64_t zs_derive_seed(uint64_t base_seed, uint64_t stream) {
    return derive_seed(base_seed, stream);
}

zs_status zs_semigroup_limit_check(const double* x_matrix, int32_t dim, double scale,
                                   double exponent, const int64_t* k_values,
                                   int32_t k_count, uint64_t seed, double* out_errors) {
    if (!all_present({x_matrix, k_values, out_errors}))
        return fail(ZS_ERR_NULL_ARGUMENT, "x_matrix/k_values/out_errors is NULL");
    if (dim <= 0) return fail(ZS_ERR_INVALID_ARGUMENT, "dim must be > 0");
    if (k_count <= 0) return fail(ZS_ERR_INVALID_ARGUMENT, "k_count must be > 0");
    return guarded([&] {
        const Eigen::MatrixXd x =
            Eigen::Map<const RowMajorMatrix>(x_matrix, dim, dim);
        std::vector<std::int64_t> ks(k_values, k_values + k_count);
        const auto points = semigroup_limit_check(x, scale, exponent, ks, seed);
        for (int32_t k = 0; k < k_count; ++k) out_errors[k] = points[k].error;
    });
}

zs_status zs_random_matrix(int32_t dim, double norm, uint64_t seed, double* out_matrix) {
    if (out_matrix == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out_matrix is NULL");
    if (dim <= 0) return fail(ZS_ERR_INVALID_ARGUMENT, "dim must be > 0");
    if (!(norm >= 0.0)) return fail(ZS_ERR_INVALID_ARGUMENT, "norm must be >= 0");
    return guarded([&] {
        auto engine = make_engine(seed);
        Eigen::MatrixXd matrix(dim, dim);
        for (Eigen::Index row = 0; row < dim; ++row)
            for (Eigen::Index col = 0; col < dim; ++col)
                matrix(row, col) = uniform_in(engine, -1.0, 1.0);
        const double current = spectral_norm(matrix);
        if (current > 0.0) matrix *= norm / current;
        copy_out(matrix, out_matrix);
    });
}

zs_status zs_car_check(int32_t n_sites, double* out_pair_dev, double* out_cross_dev) {
    if (!all_present({out_pair_dev, out_cross_dev}))
        return fail(ZS_ERR_NULL_ARGUMENT, "out_pair_dev/out_cross_dev is NULL");
    return guarded([&] {
        const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
        std::vector<Eigen::MatrixXcd> lower;
        lower.reserve(n_sites);
        for (int site = 1; site <= n_sites; ++site) lower.push_back(annihilator(site, n_sites));
        const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
        double pair_dev = 0.0;
        double cross_dev = 0.0;
        for (int n = 0; n < n_sites; ++n)
            for (int m = 0; m < n_sites; ++m) {
                pair_dev = std::max(pair_dev,
                                    max_abs(Eigen::MatrixXcd(lower[n] * lower[m] +
                                                             lower[m] * lower[n])));
                Eigen::MatrixXcd cross = lower[n].adjoint() * lower[m] +
                                         lower[m] * lower[n].adjoint();
                if (n == m) cross -= identity;
                cross_dev = std::max(cross_dev, max_abs(cross));
            }
        *out_pair_dev = pair_dev;
        *out_cross_dev = cross_dev;
    });
}

zs_status zs_potential_constant(int32_t n_sites, double value, double* out) {
    if (out == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out is NULL");
    return guarded([&] { copy_out(constant_potential(n_sites, value), out); });
}

zs_status zs_potential_cosine(int32_t n_sites, double amplitude, int32_t wavenumber,
                              double* out) {
    if (out == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out is NULL");
    return guarded([&] { copy_out(cosine_potential(n_sites, amplitude, wavenumber), out); });
}

zs_status zs_potential_random(int32_t n_sites, double width, uint64_t seed, double* out) {
    if (out == nullptr) return fail(ZS_ERR_NULL_ARGUMENT, "out is NULL");
    return guarded([&] { copy_out(random_potential(n_sites, width, seed), out); });
}

}  // extern "C"
