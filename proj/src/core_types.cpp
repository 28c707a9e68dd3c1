#include "masseur/core_types.hpp"

#include <cmath>
#include <cstddef>

namespace masseur {

std::optional<std::string> validate_trace(const ForceTrace& trace) {
    if (!(trace.sample_rate > 0.0) || !std::isfinite(trace.sample_rate))
        return "sample_rate must be positive and finite";
    if (trace.samples.size() < 2)
        return "trace must hold at least 2 samples, has " + std::to_string(trace.samples.size());
    if (trace.samples.size() != trace.poses.size())
        return "samples/poses length mismatch: " + std::to_string(trace.samples.size()) + " vs " +
               std::to_string(trace.poses.size());

    const double dt = 1.0 / trace.sample_rate;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const auto& s = trace.samples[i];
        if (!std::isfinite(s.t) || !std::isfinite(s.fz) || !std::isfinite(s.fy))
            return "non-finite sample at index " + std::to_string(i);
        if (s.t < 0.0)
            return "negative t at index " + std::to_string(i);
        if (s.fz < 0.0)
            return "negative fz at index " + std::to_string(i);
        const auto& p = trace.poses[i];
        for (double v : {p.x, p.y, p.z, p.rx, p.ry, p.rz})
            if (!std::isfinite(v)) return "non-finite pose at index " + std::to_string(i);
        for (double deg : {p.rx, p.ry, p.rz})
            if (deg < -360.0 || deg > 360.0)
                return "rotation out of [-360, 360] at index " + std::to_string(i);
        if (i > 0) {
            const double prev = trace.samples[i - 1].t;
            if (s.t <= prev)
                return "non-increasing t at index " + std::to_string(i);
            if (std::abs(s.t - prev - dt) >= 1e-9)
                return "non-uniform spacing at index " + std::to_string(i);
        }
    }
    return std::nullopt;
}

}  // namespace masseur
