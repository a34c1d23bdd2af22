#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace zenossep {

// Hard cap on lattice size: a dense 2^N x 2^N complex matrix at N = 16 is
// already ~64 GiB.  Practical experiments run at N <= 10.
inline constexpr int kMaxSites = 16;

/// Occupation pattern of the N-site chain.  Bit n-1 of `bits` holds the
/// occupation x_n of site n, so the Fock-basis index of a configuration is
/// its occupation word read as an integer.
struct Configuration {
    std::uint32_t bits = 0;
    int n_sites = 0;

    constexpr bool operator==(const Configuration&) const = default;
};

/// Throws std::invalid_argument unless 1 <= n_sites <= kMaxSites and only the
/// low n_sites bits are set.
void validate(const Configuration& config);

/// 2^n_sites, after range-checking n_sites.
std::size_t fock_dimension(int n_sites);

inline std::size_t basis_index(const Configuration& config) { return config.bits; }

inline int particle_count(const Configuration& config) {
    return std::popcount(config.bits);
}

/// "site 1 leftmost": character k of the string is the occupation of site k+1.
std::string to_string(const Configuration& config);
Configuration config_from_string(std::string_view text);

/// Result of applying a single creation/annihilation operator to a basis
/// vector: the new occupation word and the Jordan-Wigner parity sign.
struct FermionStep {
    std::uint32_t bits;
    int sign;  // +1 or -1
};

/// Parity sign (-1)^(number of occupied sites before `site`), sites 1-based.
inline int jordan_wigner_sign(std::uint32_t bits, int site) {
    const std::uint32_t below = bits & ((1u << (site - 1)) - 1u);
    return (std::popcount(below) & 1) ? -1 : 1;
}

/// a_site |bits> ; empty when the site is unoccupied.
inline std::optional<FermionStep> apply_annihilator(std::uint32_t bits, int site) {
    const std::uint32_t mask = 1u << (site - 1);
    if (!(bits & mask)) return std::nullopt;
    return FermionStep{bits & ~mask, jordan_wigner_sign(bits, site)};
}

/// a_site^* |bits> ; empty when the site is already occupied.
inline std::optional<FermionStep> apply_creator(std::uint32_t bits, int site) {
    const std::uint32_t mask = 1u << (site - 1);
    if (bits & mask) return std::nullopt;
    return FermionStep{bits | mask, jordan_wigner_sign(bits, site)};
}

/// Annihilation operator a_n as a dense matrix on the 2^N Fock space.
/// The ordered-product convention above fixes all signs; the CAR tests
/// certify it.
Eigen::MatrixXcd annihilator(int site, int n_sites);

/// Creation operator a_n^* = annihilator(n)^dagger.
Eigen::MatrixXcd creator(int site, int n_sites);

/// Number operator A_n^1 = a_n^* a_n: diagonal entry (x,x) is x_n.
Eigen::MatrixXcd number_operator(int site, int n_sites);

/// Occupation projector A_n^b: number_operator for b = 1, its complement
/// a_n a_n^* for b = 0.
Eigen::MatrixXcd occupation_projector(int site, int occupied, int n_sites);

/// Rank-1 projector P_x = prod_n A_n^{x_n} onto the basis vector of x.
Eigen::MatrixXcd config_projector(const Configuration& config);

}  // namespace zenossep
