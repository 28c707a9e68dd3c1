#pragma once

#include <filesystem>
#include <iosfwd>

#include "masseur/core_types.hpp"

namespace masseur {

// Trace CSV: header `t,fz,fy,x,y,z,rx,ry,rz`, one sample per line,
// `.` decimal point, LF line endings. Values round-trip within 1e-9.
void write_trace_csv(const ForceTrace& trace, std::ostream& out);
void write_trace_csv(const ForceTrace& trace, const std::filesystem::path& path);

// Throws ParseError with a 1-based line number on malformed input.
// sample_rate is recovered from the first two timestamps.
ForceTrace read_trace_csv(std::istream& in);
ForceTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace masseur
