#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace hyperik {

/// Seeded random stream used by every optimizer run.
///
/// mt19937_64 produces the same integer sequence on every conforming
/// implementation, and all floating-point draws below are fixed arithmetic
/// on that sequence (std::uniform_real_distribution and friends are
/// implementation-defined, so they are not used). A run therefore replays
/// bit-exactly from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1): top 53 bits of the engine output.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        double u1 = uniform01();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform index in [0, n). Modulo bias is below n / 2^64.
    std::size_t index(std::size_t n) {
        if (n == 0) return 0;
        return static_cast<std::size_t>(engine_() % n);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hyperik
