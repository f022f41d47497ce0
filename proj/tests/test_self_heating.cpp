// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "depinner/constants.hpp"
#include "depinner/rng.hpp"
#include "depinner/self_heating.hpp"

using namespace depinner;

namespace {

/// Quadrature oracle: midpoint shell integration of delta T(r) = P/(4 pi k r)
/// over the averaging ball, independent of the closed form under test.
double shell_average_rise(double p, const HeatParams& h, int n_shells) {
    const double dr = h.r_max / n_shells;
    double integral = 0.0;
    for (int i = 0; i < n_shells; ++i) {
        const double r = (i + 0.5) * dr;
        const double dt = p / (4.0 * kPi * h.k * r);
        integral += dt * 4.0 * kPi * r * r * dr;
    }
    const double volume = 4.0 / 3.0 * kPi * h.r_max * h.r_max * h.r_max;
    return h.semi_infinite_factor * integral / volume;
}

}  // namespace

TEST_CASE("heating power anchors") {
    CHECK(heating_power(1.0, 5000.0) == 1.0e-4);
    CHECK(heating_power(0.0, 5000.0) == 0.0);
    CHECK(heating_power(2.0, 10000.0) == doctest::Approx(2.0e-4).epsilon(1e-15));
    CHECK_THROWS_AS(heating_power(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(heating_power(-1.0, 100.0), std::invalid_argument);
}

TEST_CASE("mean rise lands near 8 K for the reference junction") {
    const HeatParams h;  // 30 W/(m K), 100 nm, factor 2
    const double rise = mean_temperature_rise(1.0e-4, h);
    CHECK(rise > 7.5);
    CHECK(rise < 8.5);
    CHECK(mean_temperature_rise(0.0, h) == 0.0);
}

TEST_CASE("closed form agrees with the shell-quadrature oracle") {
    const HeatParams h;
    for (const double p : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
        const double oracle = shell_average_rise(p, h, 100000);
        CHECK(mean_temperature_rise(p, h) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("rise scales linearly in P and inversely in k and r_max") {
    const HeatParams h{30.0, 100e-9, 2.0};
    const double base = mean_temperature_rise(2e-4, h);
    CHECK(mean_temperature_rise(4e-4, h) == doctest::Approx(2.0 * base).epsilon(1e-15));
    CHECK(mean_temperature_rise(2e-4, HeatParams{60.0, 100e-9, 2.0}) ==
          doctest::Approx(0.5 * base).epsilon(1e-15));
    CHECK(mean_temperature_rise(2e-4, HeatParams{30.0, 200e-9, 2.0}) ==
          doctest::Approx(0.5 * base).epsilon(1e-15));
}

TEST_CASE("effective temperature composition") {
    const HeatParams h;
    const double t_eff = effective_temperature(358.15, 1.0, 5000.0, h);
    CHECK(t_eff == doctest::Approx(366.108).epsilon(1e-4));
    CHECK(effective_temperature(300.0, 0.0, 5000.0, h) == 300.0);

    const double rise1 = effective_temperature(300.0, 1.0, 5000.0, h) - 300.0;
    const double rise2 = effective_temperature(300.0, 2.0, 5000.0, h) - 300.0;
    CHECK(rise2 == doctest::Approx(4.0 * rise1).epsilon(1e-12));
}

TEST_CASE("effective temperature never drops below ambient") {
    SeededRng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const HeatParams h{rng.uniform(1.0, 100.0), rng.uniform(10e-9, 500e-9),
                           rng.uniform(1.0, 2.0)};
        const double t0 = rng.uniform(250.0, 600.0);
        const double v = rng.uniform(0.0, 2.0);
        const double r = rng.uniform(1e3, 1e5);
        CHECK(effective_temperature(t0, v, r, h) >= t0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(mean_temperature_rise(1e-4, HeatParams{0.0, 1e-7, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mean_temperature_rise(1e-4, HeatParams{30.0, 0.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mean_temperature_rise(1e-4, HeatParams{30.0, 1e-7, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(effective_temperature(0.0, 1.0, 5000.0, HeatParams{}),
                    std::invalid_argument);
}
