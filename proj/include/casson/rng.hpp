#pragma once

// Deterministic random primitives. mt19937_64 is bit-stable across
// standard libraries but the std distributions are not, so the
// uniform/normal transforms are spelled out here.

#include <cmath>
#include <cstdint>
#include <random>

namespace casson {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable seed for a subtask identified by a few indices.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept {
    return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double gauss() {
        double u1 = double((eng_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        double u2 = double(eng_() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(eng_() % std::uint64_t(hi - lo + 1));
    }

    std::size_t index(std::size_t n) { return std::size_t(eng_() % std::uint64_t(n)); }

private:
    std::mt19937_64 eng_;
};

} // namespace casson
