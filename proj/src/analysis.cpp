#include "masseur/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "masseur/errors.hpp"

namespace masseur {

namespace {

constexpr double kDcExclusionHz = 0.05;  // press fundamental sits at 0.14-0.19 Hz

std::vector<double> window_samples(const ForceTrace& trace, std::optional<Window> window) {
    std::vector<double> out;
    out.reserve(trace.samples.size());
    for (const auto& s : trace.samples) {
        if (window && (s.t < window->t0 || s.t >= window->t1)) continue;
        out.push_back(s.fz);
    }
    return out;
}

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct Moments {
    double max, min, mean, std;
    std::optional<double> skew, kurt;
};

Moments moments(const std::vector<double>& x) {
    const auto n = static_cast<double>(x.size());
    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());

    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    Moments out{*mx, *mn, mean, std::sqrt(m2), {}, {}};
    if (m2 > 0.0) {
        out.skew = m3 / (m2 * std::sqrt(m2));
        out.kurt = m4 / (m2 * m2) - 3.0;
    }
    return out;
}

}  // namespace

std::vector<SpectrumPoint> magnitude_spectrum(std::span<const double> samples,
                                              double sample_rate) {
    const std::size_t n = samples.size();
    if (n < 16) throw TooFewSamples("need at least 16 samples, got " + std::to_string(n));

    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);

    const std::size_t nfft = next_pow2(n);
    std::vector<std::complex<double>> buf(nfft, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double hann =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1)));
        buf[i] = (samples[i] - mean) * hann;
    }
    fft(buf);

    std::vector<SpectrumPoint> spectrum(nfft / 2 + 1);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        spectrum[i].freq_hz = static_cast<double>(i) * sample_rate / static_cast<double>(nfft);
        spectrum[i].magnitude = std::abs(buf[i]);
    }
    return spectrum;
}

double dominant_frequency(std::span<const double> samples, double sample_rate) {
    const auto spectrum = magnitude_spectrum(samples, sample_rate);

    std::size_t peak = 0;
    double peak_mag = 0.0;
    for (std::size_t i = 1; i + 1 < spectrum.size(); ++i) {
        if (spectrum[i].freq_hz <= kDcExclusionHz) continue;
        if (spectrum[i].magnitude > peak_mag) {
            peak_mag = spectrum[i].magnitude;
            peak = i;
        }
    }
    if (peak == 0 || peak_mag <= 1e-12 * static_cast<double>(samples.size()))
        throw ZeroVariance("no AC content above " + std::to_string(kDcExclusionHz) + " Hz");

    // Parabolic refinement across the peak's neighbors.
    const double ym = spectrum[peak - 1].magnitude;
    const double y0 = spectrum[peak].magnitude;
    const double yp = spectrum[peak + 1].magnitude;
    const double denom = ym - 2.0 * y0 + yp;
    double shift = 0.0;
    if (denom != 0.0) shift = std::clamp(0.5 * (ym - yp) / denom, -0.5, 0.5);

    const double bin_width = spectrum[1].freq_hz - spectrum[0].freq_hz;
    return spectrum[peak].freq_hz + shift * bin_width;
}

double dominant_frequency(const ForceTrace& trace, std::optional<Window> window) {
    const auto x = window_samples(trace, window);
    return dominant_frequency(x, trace.sample_rate);
}

TraceStats trace_stats(const ForceTrace& trace, std::optional<Window> window) {
    const auto x = window_samples(trace, window);
    if (x.size() < 16)
        throw TooFewSamples("need at least 16 samples in window, got " +
                            std::to_string(x.size()));

    const Moments m = moments(x);
    TraceStats stats;
    stats.max = m.max;
    stats.min = m.min;
    stats.mean = m.mean;
    stats.std = m.std;
    stats.skew = m.skew;
    stats.kurt = m.kurt;
    if (m.std > 0.0) {
        try {
            stats.freq = dominant_frequency(x, trace.sample_rate);
        } catch (const ZeroVariance&) {
            // variance present but nothing above the DC guard; leave freq absent
        }
    }
    return stats;
}

void export_spectrum(const ForceTrace& trace, std::optional<Window> window,
                     const std::filesystem::path& path) {
    const auto x = window_samples(trace, window);
    const auto spectrum = magnitude_spectrum(x, trace.sample_rate);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "freq_hz,magnitude\n";
    char buf[64];
    for (const auto& p : spectrum) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", p.freq_hz, p.magnitude);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Technique technique_from_name(const std::string& name) {
    if (name == "beat") return Technique::Beat;
    if (name == "press") return Technique::Press;
    if (name == "push") return Technique::Push;
    if (name == "vibrate") return Technique::Vibrate;
    throw ConfigError("unknown technique '" + name + "'");
}

std::string technique_name(Technique t) {
    switch (t) {
        case Technique::Beat: return "beat";
        case Technique::Press: return "press";
        case Technique::Push: return "push";
        case Technique::Vibrate: return "vibrate";
    }
    return "?";
}

const TraceStats& reference_stats(Technique technique, ReferenceSource source) {
    //                              max     min    mean    std    skew   kurt   freq
    static const TraceStats expert[4] = {
        {79.67, 0.00, 64.90, 12.17, -4.19, 21.78, 2.79},  // beat
        {42.59, 8.20, 15.64, 6.67, -0.62, -1.07, 0.14},   // press
        {81.65, 0.00, 28.94, 9.02, 0.11, -0.16, 0.36},    // push
        {25.74, 14.39, 20.07, 2.80, -0.13, -0.04, 7.49},  // vibrate
    };
    static const TraceStats robot[4] = {
        {76.67, 0.00, 8.45, 18.02, 1.99, 2.73, 1.00},     // beat
        {43.22, 8.50, 31.72, 13.92, -0.78, -1.24, 0.19},  // press
        {82.83, 0.00, 27.51, 27.78, 0.34, -1.26, 0.88},   // push
        {26.96, 12.69, 19.16, 4.18, 0.09, -1.52, 7.33},   // vibrate
    };
    const auto idx = static_cast<std::size_t>(technique);
    return source == ReferenceSource::Expert ? expert[idx] : robot[idx];
}

namespace {

FieldCheck check_field(std::optional<double> value, std::optional<double> ref,
                       std::optional<double> rel_tol, std::optional<double> abs_tol,
                       bool sign_only, bool toleranced) {
    FieldCheck fc;
    fc.value = value;
    fc.ref = ref;
    if (value && ref) {
        fc.delta = *value - *ref;
        if (*ref != 0.0) fc.rel_delta = *fc.delta / *ref;
    }
    if (!toleranced) return fc;
    if (!value || !ref) {
        fc.pass = false;
        return fc;
    }
    if (sign_only) {
        fc.pass = (*value >= 0.0) == (*ref >= 0.0);
    } else if (rel_tol && *ref != 0.0) {
        fc.pass = std::abs(*fc.delta) <= *rel_tol * std::abs(*ref);
    } else if (rel_tol) {
        // reference is zero: relative tolerance degenerates to exact-on-delta;
        // treat tol as absolute against the value scale of 1 N
        fc.pass = std::abs(*fc.delta) <= *rel_tol;
    } else if (abs_tol) {
        fc.pass = std::abs(*fc.delta) <= *abs_tol;
    }
    return fc;
}

}  // namespace

ComparisonReport compare_to_reference(const TraceStats& stats, Technique technique,
                                      ReferenceSource source, const Tolerances& tol) {
    const TraceStats& ref = reference_stats(technique, source);
    ComparisonReport report;
    report.technique = technique;
    report.reference = source;

    report.fields["max"] = check_field(stats.max, ref.max, tol.rel_envelope, {}, false, true);
    report.fields["min"] = check_field(stats.min, ref.min, tol.rel_envelope, {}, false, true);
    report.fields["mean"] = check_field(stats.mean, ref.mean, tol.rel_envelope, {}, false, true);
    report.fields["std"] = check_field(stats.std, ref.std, {}, {}, false, false);
    report.fields["skew"] = check_field(stats.skew, ref.skew, {}, {}, true, true);
    report.fields["kurt"] = check_field(stats.kurt, ref.kurt, {}, {}, true, true);
    report.fields["freq"] = check_field(stats.freq, ref.freq, {}, tol.abs_freq, false, true);

    for (const auto& [name, fc] : report.fields)
        if (!fc.pass) report.all_pass = false;
    return report;
}

}  // namespace masseur
