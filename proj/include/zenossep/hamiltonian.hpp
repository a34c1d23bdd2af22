#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "zenossep/fock.hpp"

namespace zenossep {

/// Periodic-chain Hamiltonian parameters: hopping is fixed at -1/2 per
/// directed bond, `potential` holds the on-site term v(n), `coupling` the
/// nearest-neighbour interaction strength.  Site N+1 is identified with
/// site 1.
struct HamiltonianSpec {
    int n_sites = 0;
    Eigen::VectorXd potential;  // length n_sites
    double coupling = 0.0;
};

void validate(const HamiltonianSpec& spec);

/// H = sum_n [ -1/2 (a_n^* a_{n+1} + a_{n+1}^* a_n) + v(n) a_n^* a_n
///             + coupling * a_n^* a_n a_{n+1}^* a_{n+1} ], periodic.
/// Assembled by applying the fermion steps to every basis word; at N = 2 the
/// single bond is doubled because the wrap term repeats it.
Eigen::MatrixXcd build_hamiltonian(const HamiltonianSpec& spec);

Eigen::VectorXd constant_potential(int n_sites, double value);
/// v(n) = amplitude * cos(2 pi wavenumber n / N).
Eigen::VectorXd cosine_potential(int n_sites, double amplitude, int wavenumber);
/// Entries drawn uniformly in [-width, width]; reproducible under seed.
Eigen::VectorXd random_potential(int n_sites, double width, std::uint64_t seed);

/// Site densities <x0| e^{itH} A_n^1 e^{-itH} |x0> for each requested time.
/// Row k of the result is the length-N profile at times[k].
Eigen::MatrixXd free_density_evolution(const HamiltonianSpec& spec, const Configuration& x0,
                                       std::span<const double> times);

}  // namespace zenossep
