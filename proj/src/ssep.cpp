#include "zenossep/ssep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "zenossep/linalg.hpp"
#include "zenossep/rng.hpp"
#include "zenossep/zeno_limit.hpp"

namespace zenossep {

Eigen::VectorXd master_evolve(const Eigen::MatrixXd& generator, const Eigen::VectorXd& q0,
                              double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("master_evolve: tau must be >= 0");
    validate_distribution(q0);
    if (generator.rows() != q0.size())
        throw std::invalid_argument("master_evolve: dimension mismatch");
    return clamp_distribution(generator_exponential(generator, tau) * q0);
}

namespace {

struct BondScan {
    std::array<int, kMaxSites> active{};  // indices of active bonds
    int count = 0;
};

BondScan scan_active_bonds(std::uint32_t word, int n_sites) {
    BondScan scan;
    for (int bond = 0; bond < n_sites; ++bond) {
        const int next = (bond + 1) % n_sites;
        const bool here = word & (1u << bond);
        const bool there = word & (1u << next);
        if (here != there) scan.active[scan.count++] = bond;
    }
    return scan;
}

GillespieRun run_gillespie(int n_sites, const Configuration& x0, double tau,
                           std::uint64_t seed) {
    validate(x0);
    if (x0.n_sites != n_sites)
        throw std::invalid_argument("gillespie: configuration size mismatch");
    if (n_sites < 3) throw std::invalid_argument("gillespie: n_sites must be >= 3");
    if (!(tau >= 0.0)) throw std::invalid_argument("gillespie: tau must be >= 0");

    GillespieRun run;
    run.bond_events.assign(static_cast<std::size_t>(n_sites), 0);
    auto engine = make_engine(seed);
    std::uint32_t word = x0.bits;
    double clock = 0.0;
    for (;;) {
        const BondScan scan = scan_active_bonds(word, n_sites);
        if (scan.count == 0) break;  // exclusion freezes the configuration
        const double total_rate = 0.25 * scan.count;
        const double wait = exponential(engine, total_rate);
        if (clock + wait > tau) break;
        clock += wait;
        const int bond = scan.active[uniform_index(engine, static_cast<std::size_t>(scan.count))];
        const int next = (bond + 1) % n_sites;
        word ^= (1u << bond) | (1u << next);
        ++run.bond_events[static_cast<std::size_t>(bond)];
    }
    run.state = {word, tau};
    return run;
}

}  // namespace

SsepState gillespie_sample(int n_sites, const Configuration& x0, double tau,
                           std::uint64_t seed) {
    return run_gillespie(n_sites, x0, tau, seed).state;
}

GillespieRun gillespie_sample_with_counts(int n_sites, const Configuration& x0, double tau,
                                          std::uint64_t seed) {
    return run_gillespie(n_sites, x0, tau, seed);
}

Eigen::VectorXd gillespie_histogram(int n_sites, const Configuration& x0, double tau,
                                    std::int64_t samples, std::uint64_t seed) {
    if (samples <= 0) throw std::invalid_argument("gillespie_histogram: samples must be > 0");
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t chunk = (samples + workers - 1) / workers;

    std::vector<std::future<Eigen::VectorXd>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min<std::int64_t>(samples, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            Eigen::VectorXd counts = Eigen::VectorXd::Zero(dim);
            for (std::int64_t k = begin; k < end; ++k) {
                const auto state = gillespie_sample(n_sites, x0, tau,
                                                    derive_seed(seed, static_cast<std::uint64_t>(k)));
                counts(static_cast<Eigen::Index>(state.config)) += 1.0;
            }
            return counts;
        }));
    }

    Eigen::VectorXd counts = Eigen::VectorXd::Zero(dim);
    for (auto& future : futures) counts += future.get();
    return counts / static_cast<double>(samples);
}

Eigen::VectorXd density_profile(int n_sites, const Eigen::VectorXd& distribution) {
    validate_distribution(distribution);
    if (distribution.size() != static_cast<Eigen::Index>(fock_dimension(n_sites)))
        throw std::invalid_argument("density_profile: dimension mismatch");
    Eigen::VectorXd profile = Eigen::VectorXd::Zero(n_sites);
    for (std::uint32_t word = 0; word < static_cast<std::uint32_t>(distribution.size()); ++word)
        for (int site = 0; site < n_sites; ++site)
            if (word & (1u << site)) profile(site) += distribution(word);
    return profile;
}

Eigen::VectorXd heat_equation_reference(const Eigen::VectorXd& profile, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("heat reference: tau must be >= 0");
    const auto n = profile.size();
    if (n < 1) throw std::invalid_argument("heat reference: empty profile");
    for (Eigen::Index k = 0; k < n; ++k)
        if (!(profile(k) >= -1e-12 && profile(k) <= 1.0 + 1e-12))
            throw std::invalid_argument("heat reference: densities must lie in [0, 1]");

    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        laplacian(k, k) = -2.0;
        laplacian(k, (k + 1) % n) += 1.0;
        laplacian(k, (k + n - 1) % n) += 1.0;
    }
    return symmetric_exponential(laplacian, 0.25 * tau) * profile;
}

double ring_displacement_variance(const Eigen::VectorXd& profile, int center) {
    const auto n = profile.size();
    if (center < 1 || center > n)
        throw std::invalid_argument("ring variance: center site out of range");
    const double mass = profile.sum();
    if (!(mass > 0.0)) throw std::invalid_argument("ring variance: empty profile");
    double variance = 0.0;
    for (Eigen::Index site = 0; site < n; ++site) {
        double displacement = static_cast<double>(site - (center - 1));
        if (displacement > n / 2.0) displacement -= static_cast<double>(n);
        if (displacement <= -(n / 2.0)) displacement += static_cast<double>(n);
        variance += profile(site) * displacement * displacement;
    }
    return variance / mass;
}

}  // namespace zenossep
