#pragma once

// Deterministic 64-bit PRNG (splitmix64) for seeded test points. Not for
// statistics beyond sampling geometry; the sequence is part of the output
// contract, so the constants are frozen here.

#include <cmath>
#include <cstdint>

#include "kw/quat.hpp"

namespace kw {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (one value per call; no caching so the
    // stream stays position-independent).
    double normal() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    }

    Quaternion gaussian_quaternion() {
        return {normal(), normal(), normal(), normal()};
    }

    Quaternion unit_quaternion() {
        Quaternion q = gaussian_quaternion();
        while (q.norm() < 1e-6) q = gaussian_quaternion();
        return q * (1.0 / q.norm());
    }
};

}  // namespace kw
