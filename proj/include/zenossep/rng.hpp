#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zenossep {

/// splitmix64 step; used to derive independent stream seeds so that results
/// do not depend on how work is split across threads.
inline std::uint64_t splitmix64(std::uint64_t state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base + 0x632be59bd9b4e019ULL * (stream + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64{splitmix64(seed)};
}

/// Uniform double in [0, 1).  Hand-rolled from the raw 64-bit draw so the
/// stream is identical across standard-library implementations.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Uniform double in [low, high).
inline double uniform_in(std::mt19937_64& engine, double low, double high) {
    return low + (high - low) * uniform01(engine);
}

/// Exponential waiting time with the given rate.
inline double exponential(std::mt19937_64& engine, double rate) {
    double u = uniform01(engine);
    if (u >= 1.0) u = std::nextafter(1.0, 0.0);
    return -std::log1p(-u) / rate;
}

/// Uniform index in [0, count).
inline std::size_t uniform_index(std::mt19937_64& engine, std::size_t count) {
    auto index = static_cast<std::size_t>(uniform01(engine) * static_cast<double>(count));
    return index < count ? index : count - 1;
}

}  // namespace zenossep
