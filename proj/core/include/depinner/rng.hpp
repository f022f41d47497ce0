// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "depinner/constants.hpp"

namespace depinner {

/// Seeded generator behind every synthetic-data path. std::mt19937_64 is
/// fully specified by the standard and the uniform/gaussian transforms are
/// spelled out below, so a given seed yields the same stream on every
/// platform and in every release. Golden files depend on this.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1): top 53 bits of the raw 64-bit draw.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Box-Muller, cosine branch only; one fresh pair of draws per call.
    double gaussian(double mean = 0.0, double sigma = 1.0) {
        double u1 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = uniform01();
        return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64-style mixer for deriving independent per-run seeds from a
/// campaign seed and a run index.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace depinner
