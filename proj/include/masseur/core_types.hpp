#pragma once

#include <optional>
#include <string>
#include <vector>

namespace masseur {

// World-frame pose. Positions in meters, rotations in degrees about the
// world X/Y/Z axes (extrinsic). The massage approach axis is -Z: the tip
// moves toward the tissue as z decreases.
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;
};

// One tick of recorded contact force. fz is the normal force (>= 0,
// contact pushes and never pulls); fy stays 0 while the contact model
// omits friction.
struct ForceSample {
    double t = 0.0;   // seconds since trace start
    double fz = 0.0;  // N
    double fy = 0.0;  // N
};

// Uniformly sampled force recording plus the commanded pose at each tick.
struct ForceTrace {
    double sample_rate = 0.0;  // Hz
    std::vector<ForceSample> samples;
    std::vector<Pose> poses;
};

// Returns std::nullopt when every ForceTrace invariant holds, otherwise a
// description of the first violation and its index.
std::optional<std::string> validate_trace(const ForceTrace& trace);

}  // namespace masseur
