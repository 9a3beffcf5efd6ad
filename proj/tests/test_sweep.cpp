#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "patchlab/sweep.hpp"

using Catch::Approx;
using namespace patchlab;

TEST_CASE("model calibration against a bandwidth target", "[sweep]") {
    const ResonatorModel m = calibrate_model(10e9, 0.0354, 50.0, 50.0);
    REQUIRE(m.q_total == Approx(19.97).margin(0.3));

    // Inverse relation at s = 2: B = 1/(Q*sqrt(2)).
    const ResonatorModel q10 = calibrate_model(10e9, 1.0 / (10.0 * std::sqrt(2.0)), 50.0, 50.0);
    REQUIRE(q10.q_total == Approx(10.0).epsilon(1e-12));

    REQUIRE_THROWS_AS(calibrate_model(10e9, 1e-7, 50.0, 50.0), std::domain_error);
    REQUIRE_THROWS_AS(calibrate_model(10e9, 0.0, 50.0, 50.0), std::invalid_argument);
    REQUIRE_THROWS_AS(calibrate_model(10e9, 0.6, 50.0, 50.0), std::invalid_argument);
}

TEST_CASE("surrogate impedance behaviour", "[sweep]") {
    const ResonatorModel m = calibrate_model(10e9, 0.0354, 65.0, 50.0);
    REQUIRE(impedance_at(m, m.f0) == std::complex<double>(65.0, 0.0));
    REQUIRE(std::abs(impedance_at(m, m.f0 * 1e-6)) < 65.0 / 1e5);
    REQUIRE(std::abs(impedance_at(m, m.f0 * 1e6)) < 65.0 / 1e5);
    REQUIRE_THROWS_AS(impedance_at(m, 0.0), std::invalid_argument);
}

TEST_CASE("detuning is symmetric in frequency ratio", "[sweep][property]") {
    const ResonatorModel m = calibrate_model(10e9, 0.05, 50.0, 50.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> k_dist(1.0001, 8.0);
    for (int i = 0; i < 1000; ++i) {
        const double k = k_dist(rng);
        REQUIRE(std::abs(impedance_at(m, m.f0 * k)) ==
                Approx(std::abs(impedance_at(m, m.f0 / k))).epsilon(1e-12));
    }
}

TEST_CASE("frequency sweep grid and match values", "[sweep]") {
    const ResonatorModel m = calibrate_model(10e9, 0.0354, 50.0, 50.0);

    const auto two = frequency_sweep(m, 9e9, 11e9, 2);
    REQUIRE(two.size() == 2);
    REQUIRE(two.front().f == 9e9);
    REQUIRE(two.back().f == 11e9);

    // 201-point grid over [9, 11] GHz contains f0 at index 100.
    const auto pts = frequency_sweep(m, 9e9, 11e9, 201);
    REQUIRE(pts[100].f == Approx(10e9).epsilon(1e-12));
    REQUIRE(pts[100].vswr == Approx(1.0).epsilon(1e-9));
    REQUIRE(pts[100].s11_db == Approx(-kReturnLossCapDb).epsilon(1e-12));

    for (const SweepPoint& p : pts) {
        REQUIRE(p.vswr >= 1.0);
        REQUIRE(p.s11_db <= 0.0);
    }
    // VSWR grows monotonically away from resonance on each side.
    for (int i = 1; i <= 100; ++i) {
        REQUIRE(pts[i].vswr <= pts[i - 1].vswr);
        REQUIRE(pts[100 + i].vswr >= pts[100 + i - 1].vswr);
    }

    REQUIRE_THROWS_AS(frequency_sweep(m, 9e9, 11e9, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(frequency_sweep(m, 11e9, 9e9, 201), std::invalid_argument);
}

TEST_CASE("band extraction closes the calibration loop", "[sweep]") {
    const double b = 0.0354;
    const ResonatorModel m = calibrate_model(10e9, b, 50.0, 50.0);
    const BandReport band = extract_band(m, BandCriterion::vswr2);
    REQUIRE(band.f_low < m.f0);
    REQUIRE(band.f_high > m.f0);
    REQUIRE(band.fractional == Approx(b).epsilon(0.02));
    REQUIRE(band.bandwidth == Approx(band.f_high - band.f_low).epsilon(1e-15));
}

TEST_CASE("the -10 dB band nests strictly inside the VSWR 2 band", "[sweep][property]") {
    for (double b : {0.005, 0.02, 0.0354, 0.1, 0.2}) {
        const ResonatorModel m = calibrate_model(10e9, b, 50.0, 50.0);
        const BandReport vswr_band = extract_band(m, BandCriterion::vswr2);
        const BandReport rl_band = extract_band(m, BandCriterion::s11_minus10db);
        REQUIRE(rl_band.f_low > vswr_band.f_low);
        REQUIRE(rl_band.f_high < vswr_band.f_high);
        REQUIRE(rl_band.fractional < vswr_band.fractional);
    }
}

TEST_CASE("band extraction fails when never matched", "[sweep]") {
    const ResonatorModel m = calibrate_model(10e9, 0.0354, 150.0, 50.0);  // VSWR(f0) = 3
    REQUIRE_THROWS_AS(extract_band(m, BandCriterion::vswr2), std::domain_error);
}

TEST_CASE("bisection edges agree with a dense sweep", "[sweep][oracle]") {
    const ResonatorModel m = calibrate_model(10e9, 0.06, 50.0, 50.0);
    const BandReport band = extract_band(m, BandCriterion::vswr2);

    const double f_start = 9e9, f_stop = 11e9;
    const auto pts = frequency_sweep(m, f_start, f_stop, 10'001);
    const double cell = (f_stop - f_start) / 10'000.0;
    double lo_cross = 0.0, hi_cross = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const bool was = pts[i - 1].vswr <= 2.0;
        const bool is = pts[i].vswr <= 2.0;
        if (!was && is) lo_cross = pts[i].f;
        if (was && !is) hi_cross = pts[i - 1].f;
    }
    REQUIRE(std::abs(band.f_low - lo_cross) <= cell);
    REQUIRE(std::abs(band.f_high - hi_cross) <= cell);
}

TEST_CASE("sweep points satisfy the match-metric identities", "[sweep][property]") {
    const ResonatorModel m = calibrate_model(10e9, 0.08, 60.0, 50.0);
    for (const SweepPoint& p : frequency_sweep(m, 8e9, 12e9, 501)) {
        const MatchMetrics mm = match_metrics(impedance_at(m, p.f), m.z0);
        REQUIRE(p.vswr == mm.vswr);
        REQUIRE(p.s11_db == -mm.return_loss_db);
    }
}
