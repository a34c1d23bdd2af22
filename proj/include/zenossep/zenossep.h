/*
 * zenossep C API: measurement-driven lattice fermion dynamics behind a plain
 * C ABI.
 *
 * Conventions
 *   - Configurations are occupation words: bit n-1 holds the occupation of
 *     site n, and the word doubles as the index into the 2^N configuration
 *     basis.
 *   - Matrices are passed as dense row-major double buffers of size dim*dim,
 *     dim = 2^n_sites; probability vectors as length-dim buffers indexed by
 *     occupation word.
 *   - Every function returns ZS_OK on success.  On failure the output
 *     buffers are unspecified and zs_last_error() describes the problem for
 *     the calling thread.
 */

#ifndef ZENOSSEP_H
#define ZENOSSEP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zs_status {
    ZS_OK = 0,
    ZS_ERR_NULL_ARGUMENT = 1,
    ZS_ERR_INVALID_ARGUMENT = 2,
    ZS_ERR_NUMERIC = 3
} zs_status;

const char* zs_status_name(zs_status status);
const char* zs_last_error(void);
const char* zs_version(void);

/* A lattice system: periodic chain Hamiltonian (hopping -1/2, on-site
 * potential, nearest-neighbour coupling) plus its cached spectral data. */
typedef struct zs_system zs_system;

/* `potential` must have n_sites entries; NULL means zero potential. */
zs_status zs_system_create(int32_t n_sites, const double* potential, double coupling,
                           zs_system** out_system);
void zs_system_destroy(zs_system* system);
int32_t zs_system_sites(const zs_system* system);
int64_t zs_system_dim(const zs_system* system);

/* Hamiltonian matrix; the imaginary part is identically zero for this model
 * and `out_imag` may be NULL. */
zs_status zs_hamiltonian(const zs_system* system, double* out_real, double* out_imag);

/* Measurement transition matrix U_t: entry (x,y) = |<x|e^{-itH}|y>|^2,
 * row-major with row x, column y. */
zs_status zs_transition_matrix(const zs_system* system, double t, double* out_matrix);

/* Emergent generator X, entry (x,y) = -1/2 <y|[H,[H,P_x]]|y>. */
zs_status zs_generator(const zs_system* system, double* out_matrix);

/* Exclusion-process generator written directly: exchange rate 1/4 per active
 * periodic bond.  Requires n_sites >= 3. */
zs_status zs_ssep_generator(int32_t n_sites, double* out_matrix);

/* Distribution after measurements every `interval` up to `total_time`,
 * starting from configuration weights q0. */
zs_status zs_repeated_measurement(const zs_system* system, double interval,
                                  double total_time, const double* q0, double* out);

/* Probability that `repetitions` equally spaced measurements up to
 * `total_time` all return `initial_config`. */
zs_status zs_zeno_survival(const zs_system* system, double total_time,
                           int32_t repetitions, uint32_t initial_config,
                           double* out_probability);

/* One outcome trajectory; out_configs must hold steps+1 words, entry 0 is
 * the initial configuration. */
zs_status zs_sample_trajectory(const zs_system* system, double interval, int64_t steps,
                               uint32_t initial_config, uint64_t seed,
                               uint32_t* out_configs);

/* Site densities of the measurement-free evolution of |initial_config> at
 * one time; out_profile holds n_sites entries. */
zs_status zs_free_density(const zs_system* system, uint32_t initial_config, double time,
                          double* out_profile);

/* For each M: distance in total variation between (U_{1/M})^[tau M^2] q0 and
 * e^{tau X} q0, plus the step count and the wall seconds spent.  out_steps
 * and out_seconds may be NULL. */
zs_status zs_zeno_scan(const zs_system* system, double tau, const double* q0,
                       const int32_t* m_values, int32_t m_count, double* out_distances,
                       int64_t* out_steps, double* out_seconds);

/* Errors ||(U_t - I)/t^2 - X||_max for each t. */
zs_status zs_finite_difference(const zs_system* system, const double* t_values,
                               int32_t t_count, double* out_errors);

/* Exclusion-process master equation: e^{tau X_ssep} q0 on n_sites >= 3. */
zs_status zs_master_evolve(int32_t n_sites, const double* q0, double tau, double* out);

/* Site occupation probabilities of a configuration distribution. */
zs_status zs_density_profile(int32_t n_sites, const double* q, double* out_profile);

/* Discrete heat flow d rho/d tau = 1/4 (ring Laplacian) rho. */
zs_status zs_heat_reference(int32_t n_sites, const double* profile, double tau,
                            double* out_profile);

/* One exclusion-process realization observed at clock tau. */
zs_status zs_gillespie_final(int32_t n_sites, uint32_t initial_config, double tau,
                             uint64_t seed, uint32_t* out_config, double* out_clock);

/* Empirical distribution over `samples` realizations.  Realization k runs on
 * the seed zs_derive_seed(seed, k). */
zs_status zs_gillespie_histogram(int32_t n_sites, uint32_t initial_config, double tau,
                                 int64_t samples, uint64_t seed, double* out_distribution);

/* Per-stream seed derivation used by the batched samplers; feeding the
 * result back into zs_gillespie_final reproduces one realization of a
 * batch. */
uint64_t zs_derive_seed(uint64_t base_seed, uint64_t stream);

/* Perturbed Euler-product check: for each K, error
 * ||(I + X/K + Y_K)^K - e^X||_2 with Y_K a seeded random matrix of spectral
 * norm scale * K^-exponent.  Requires exponent > 1. */
zs_status zs_semigroup_limit_check(const double* x_matrix, int32_t dim, double scale,
                                   double exponent, const int64_t* k_values,
                                   int32_t k_count, uint64_t seed, double* out_errors);

/* Random dense matrix rescaled to the given spectral norm (helper for the
 * semigroup check drivers). */
zs_status zs_random_matrix(int32_t dim, double norm, uint64_t seed, double* out_matrix);

/* Max deviations of the anticommutation relations at n_sites:
 * out_pair_dev  = max over n,m of ||{a_n, a_m}||_max,
 * out_cross_dev = max over n,m of ||{a_n^*, a_m} - delta_nm I||_max. */
zs_status zs_car_check(int32_t n_sites, double* out_pair_dev, double* out_cross_dev);

/* Named potential families. */
zs_status zs_potential_constant(int32_t n_sites, double value, double* out);
zs_status zs_potential_cosine(int32_t n_sites, double amplitude, int32_t wavenumber,
                              double* out);
zs_status zs_potential_random(int32_t n_sites, double width, uint64_t seed, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ZENOSSEP_H */
