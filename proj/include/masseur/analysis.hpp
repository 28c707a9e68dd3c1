#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "masseur/core_types.hpp"

namespace masseur {

// Time window [t0, t1) over a trace, seconds.
struct Window {
    double t0 = 0.0;
    double t1 = 0.0;
};

// The seven-number characterization of a force trace. skew/kurt are absent
// for zero-variance input, freq additionally when there is no AC content.
struct TraceStats {
    double max = 0.0;
    double min = 0.0;
    double mean = 0.0;
    double std = 0.0;                // population sigma
    std::optional<double> skew;      // Fisher-Pearson g1
    std::optional<double> kurt;      // excess kurtosis g2
    std::optional<double> freq;      // dominant spectral peak, Hz
};

TraceStats trace_stats(const ForceTrace& trace, std::optional<Window> window = {});

// Mean-removed, Hann-windowed magnitude spectrum, zero-padded to the next
// power of two. Bins cover [0, rate/2].
struct SpectrumPoint {
    double freq_hz = 0.0;
    double magnitude = 0.0;
};
std::vector<SpectrumPoint> magnitude_spectrum(std::span<const double> samples,
                                              double sample_rate);

// Largest-magnitude bin above 0.05 Hz, refined by parabolic interpolation.
// Throws ZeroVariance when the signal has no AC content, TooFewSamples
// below 16 samples.
double dominant_frequency(std::span<const double> samples, double sample_rate);
double dominant_frequency(const ForceTrace& trace, std::optional<Window> window = {});

// CSV `freq_hz,magnitude` of the spectrum dominant_frequency inspects.
void export_spectrum(const ForceTrace& trace, std::optional<Window> window,
                     const std::filesystem::path& path);

enum class Technique { Beat, Press, Push, Vibrate };
enum class ReferenceSource { Expert, Robot };

// Throws ConfigError on an unknown name.
Technique technique_from_name(const std::string& name);
std::string technique_name(Technique t);

// Embedded expert/robot characterization constants.
const TraceStats& reference_stats(Technique technique, ReferenceSource source);

struct Tolerances {
    double rel_envelope = 0.15;  // max/min/mean, relative (absolute when ref = 0)
    double abs_freq = 0.15;      // Hz
    // skew/kurt are checked for sign agreement only; std is reported untoleranced
};

struct FieldCheck {
    std::optional<double> value;
    std::optional<double> ref;
    std::optional<double> delta;       // value - ref
    std::optional<double> rel_delta;   // delta / ref when ref != 0
    bool pass = true;
};

struct ComparisonReport {
    Technique technique = Technique::Beat;
    ReferenceSource reference = ReferenceSource::Expert;
    std::map<std::string, FieldCheck> fields;
    bool all_pass = true;
};

ComparisonReport compare_to_reference(const TraceStats& stats, Technique technique,
                                      ReferenceSource source, const Tolerances& tol = {});

}  // namespace masseur
