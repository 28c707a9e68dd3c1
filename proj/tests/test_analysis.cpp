#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "masseur/analysis.hpp"
#include "masseur/errors.hpp"

using namespace masseur;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ForceTrace tone_trace(double rate, double seconds, double offset, double amp, double freq,
                      double amp2 = 0.0, double freq2 = 0.0) {
    ForceTrace t;
    t.sample_rate = rate;
    const int n = static_cast<int>(seconds * rate);
    for (int i = 0; i < n; ++i) {
        const double ti = i / rate;
        const double v = offset + amp * std::sin(kTwoPi * freq * ti) +
                         amp2 * std::sin(kTwoPi * freq2 * ti);
        t.samples.push_back({ti, v, 0.0});
        t.poses.push_back({});
    }
    return t;
}

// Brute-force two-pass moments with long double accumulation, independent
// of the analysis implementation.
struct BruteMoments {
    double mean, std, skew, kurt;
};

BruteMoments brute_moments(const std::vector<double>& x) {
    long double sum = 0.0L;
    for (double v : x) sum += v;
    const long double mean = sum / x.size();
    long double m2 = 0.0L, m3 = 0.0L, m4 = 0.0L;
    for (double v : x) {
        const long double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= x.size();
    m3 /= x.size();
    m4 /= x.size();
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(m2)),
            static_cast<double>(m3 / (m2 * std::sqrt(m2))),
            static_cast<double>(m4 / (m2 * m2) - 3.0L)};
}

}  // namespace

TEST_CASE("constant trace: extremes collapse, skew/kurt absent") {
    ForceTrace t;
    t.sample_rate = 100.0;
    for (int i = 0; i < 100; ++i) {
        t.samples.push_back({i / 100.0, 5.0, 0.0});
        t.poses.push_back({});
    }
    const TraceStats s = trace_stats(t);
    CHECK(s.max == 5.0);
    CHECK(s.min == 5.0);
    CHECK(s.mean == 5.0);
    CHECK(s.std == 0.0);
    CHECK(!s.skew.has_value());
    CHECK(!s.kurt.has_value());
    CHECK(!s.freq.has_value());
}

TEST_CASE("sine moments over whole periods are analytic") {
    const ForceTrace t = tone_trace(100.0, 10.0, 10.0, 3.0, 1.0);
    const TraceStats s = trace_stats(t);
    CHECK(s.mean == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(s.std == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-6));
    REQUIRE(s.skew.has_value());
    CHECK(std::abs(*s.skew) < 1e-9);
    REQUIRE(s.kurt.has_value());
    CHECK(*s.kurt == doctest::Approx(-1.5).epsilon(0.01));
    REQUIRE(s.freq.has_value());
    CHECK(*s.freq == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("sparse spike train is right-skewed and heavy-tailed") {
    ForceTrace t;
    t.sample_rate = 100.0;
    std::vector<double> x;
    for (int i = 0; i < 2000; ++i) {
        const double v = (i % 100) < 5 ? 50.0 : 0.0;  // 5% duty bursts
        t.samples.push_back({i / 100.0, v, 0.0});
        t.poses.push_back({});
        x.push_back(v);
    }
    const TraceStats s = trace_stats(t);
    const BruteMoments oracle = brute_moments(x);
    REQUIRE(s.skew.has_value());
    REQUIRE(s.kurt.has_value());
    CHECK(*s.skew > 2.0);
    CHECK(*s.kurt > 5.0);
    CHECK(*s.skew == doctest::Approx(oracle.skew).epsilon(1e-9));
    CHECK(*s.kurt == doctest::Approx(oracle.kurt).epsilon(1e-9));
}

TEST_CASE("moments match the brute-force oracle on random traces") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> force(0.0, 80.0);
    for (int trial = 0; trial < 5; ++trial) {
        ForceTrace t;
        t.sample_rate = 500.0;
        std::vector<double> x;
        for (int i = 0; i < 10000; ++i) {
            const double v = force(rng);
            t.samples.push_back({i / 500.0, v, 0.0});
            t.poses.push_back({});
            x.push_back(v);
        }
        const TraceStats s = trace_stats(t);
        const BruteMoments oracle = brute_moments(x);
        CHECK(s.mean == doctest::Approx(oracle.mean).epsilon(1e-9));
        CHECK(s.std == doctest::Approx(oracle.std).epsilon(1e-9));
        CHECK(*s.skew == doctest::Approx(oracle.skew).epsilon(1e-7));
        CHECK(*s.kurt == doctest::Approx(oracle.kurt).epsilon(1e-9));
    }
}

TEST_CASE("shift changes location stats only; scale leaves shape alone") {
    const ForceTrace base = tone_trace(200.0, 8.0, 20.0, 4.0, 1.5, 1.0, 3.25);
    const TraceStats s0 = trace_stats(base);

    ForceTrace shifted = base;
    for (auto& smp : shifted.samples) smp.fz += 7.0;
    const TraceStats s1 = trace_stats(shifted);
    CHECK(s1.max == doctest::Approx(s0.max + 7.0).epsilon(1e-9));
    CHECK(s1.min == doctest::Approx(s0.min + 7.0).epsilon(1e-9));
    CHECK(s1.mean == doctest::Approx(s0.mean + 7.0).epsilon(1e-9));
    CHECK(s1.std == doctest::Approx(s0.std).epsilon(1e-9));
    CHECK(*s1.skew == doctest::Approx(*s0.skew).epsilon(1e-6));
    CHECK(*s1.kurt == doctest::Approx(*s0.kurt).epsilon(1e-6));
    CHECK(*s1.freq == doctest::Approx(*s0.freq).epsilon(1e-9));

    ForceTrace scaled = base;
    for (auto& smp : scaled.samples) smp.fz *= 2.5;
    const TraceStats s2 = trace_stats(scaled);
    CHECK(s2.max == doctest::Approx(2.5 * s0.max).epsilon(1e-9));
    CHECK(s2.min == doctest::Approx(2.5 * s0.min).epsilon(1e-9));
    CHECK(s2.mean == doctest::Approx(2.5 * s0.mean).epsilon(1e-9));
    CHECK(s2.std == doctest::Approx(2.5 * s0.std).epsilon(1e-9));
    CHECK(*s2.skew == doctest::Approx(*s0.skew).epsilon(1e-6));
    CHECK(*s2.kurt == doctest::Approx(*s0.kurt).epsilon(1e-6));
    CHECK(*s2.freq == doctest::Approx(*s0.freq).epsilon(1e-9));
}

TEST_CASE("dominant frequency recovers the expert beat rate tone") {
    const ForceTrace t = tone_trace(100.0, 20.0, 0.0, 1.0, 2.79);
    CHECK(dominant_frequency(t) == doctest::Approx(2.79).epsilon(0.05 / 2.79));
}

TEST_CASE("largest peak wins in a two-tone mix") {
    const ForceTrace t = tone_trace(500.0, 10.0, 0.0, 1.0, 7.33, 0.3, 1.0);
    CHECK(std::abs(dominant_frequency(t) - 7.33) < 0.1);
}

TEST_CASE("DC-only signal has no dominant frequency") {
    ForceTrace t;
    t.sample_rate = 100.0;
    for (int i = 0; i < 64; ++i) {
        t.samples.push_back({i / 100.0, 3.0, 0.0});
        t.poses.push_back({});
    }
    CHECK_THROWS_AS(dominant_frequency(t), ZeroVariance);
}

TEST_CASE("tone recovery within the window resolution floor") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> freq(0.3, 20.0);
    std::uniform_real_distribution<double> win(4.0, 12.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double f0 = freq(rng);
        const double w = win(rng);
        const ForceTrace t = tone_trace(200.0, w, 5.0, 2.0, f0);
        CHECK(std::abs(dominant_frequency(t) - f0) <= 1.0 / w);
    }
}

TEST_CASE("too few samples is an error") {
    ForceTrace t;
    t.sample_rate = 100.0;
    for (int i = 0; i < 8; ++i) {
        t.samples.push_back({i / 100.0, 1.0 * i, 0.0});
        t.poses.push_back({});
    }
    CHECK_THROWS_AS(trace_stats(t), TooFewSamples);
    CHECK_THROWS_AS(dominant_frequency(t), TooFewSamples);
    CHECK_THROWS_AS(trace_stats(tone_trace(100.0, 10.0, 0.0, 1.0, 1.0), Window{9.99, 9.999}),
                    TooFewSamples);
}

TEST_CASE("spectrum export places the dominant row at the tone") {
    const ForceTrace t = tone_trace(100.0, 10.0, 0.0, 1.0, 2.0);
    const auto path = std::filesystem::temp_directory_path() / "masseur_spectrum_test.csv";
    export_spectrum(t, std::nullopt, path);

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "freq_hz,magnitude");
    double best_f = 0.0, best_m = -1.0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double f = std::stod(line.substr(0, comma));
        const double m = std::stod(line.substr(comma + 1));
        if (f > 0.05 && m > best_m) {
            best_m = m;
            best_f = f;
        }
    }
    CHECK(best_f == doctest::Approx(2.0).epsilon(0.05));
    std::filesystem::remove(path);
}

TEST_CASE("reference rows compare to themselves with zero deltas") {
    for (auto tech : {Technique::Beat, Technique::Press, Technique::Push, Technique::Vibrate}) {
        for (auto src : {ReferenceSource::Expert, ReferenceSource::Robot}) {
            const ComparisonReport r = compare_to_reference(reference_stats(tech, src), tech, src);
            CHECK(r.all_pass);
            for (const auto& [name, fc] : r.fields) {
                REQUIRE(fc.delta.has_value());
                CHECK(*fc.delta == 0.0);
            }
        }
    }
}

TEST_CASE("robot press mean delta vs expert reference") {
    const ComparisonReport r = compare_to_reference(
        reference_stats(Technique::Press, ReferenceSource::Robot), Technique::Press,
        ReferenceSource::Expert);
    CHECK(*r.fields.at("mean").delta == doctest::Approx(31.72 - 15.64).epsilon(1e-12));
}

TEST_CASE("robot beat vs expert flags the frequency field") {
    const ComparisonReport r = compare_to_reference(
        reference_stats(Technique::Beat, ReferenceSource::Robot), Technique::Beat,
        ReferenceSource::Expert);
    CHECK(!r.fields.at("freq").pass);  // 1.00 vs 2.79 Hz
    CHECK(!r.all_pass);
}

TEST_CASE("zero tolerance flags every nonzero delta") {
    Tolerances tol;
    tol.rel_envelope = 0.0;
    tol.abs_freq = 0.0;
    const ComparisonReport r = compare_to_reference(
        reference_stats(Technique::Vibrate, ReferenceSource::Robot), Technique::Vibrate,
        ReferenceSource::Expert, tol);
    CHECK(!r.fields.at("max").pass);
    CHECK(!r.fields.at("mean").pass);
    CHECK(!r.fields.at("freq").pass);
}

TEST_CASE("comparison deltas are antisymmetric") {
    const TraceStats& expert = reference_stats(Technique::Push, ReferenceSource::Expert);
    const TraceStats& robot = reference_stats(Technique::Push, ReferenceSource::Robot);
    const ComparisonReport a =
        compare_to_reference(robot, Technique::Push, ReferenceSource::Expert);
    const ComparisonReport b =
        compare_to_reference(expert, Technique::Push, ReferenceSource::Robot);
    for (const auto& [name, fc] : a.fields)
        CHECK(*fc.delta == doctest::Approx(-*b.fields.at(name).delta).epsilon(1e-12));
}

TEST_CASE("unknown technique name is rejected") {
    CHECK_THROWS_AS(technique_from_name("knead"), ConfigError);
}
