#include "masseur/trace_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "masseur/errors.hpp"

namespace masseur {

namespace {

constexpr const char* kHeader = "t,fz,fy,x,y,z,rx,ry,rz";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_field(const std::string& field, std::size_t line) {
    if (field.empty()) throw ParseError(line, "empty field");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE)
        throw ParseError(line, "bad number '" + field + "'");
    return v;
}

}  // namespace

void write_trace_csv(const ForceTrace& trace, std::ostream& out) {
    if (trace.samples.empty()) throw EmptyTrace("cannot export an empty trace");
    out << kHeader << '\n';
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const auto& s = trace.samples[i];
        const auto& p = trace.poses.at(i);
        out << fmt(s.t) << ',' << fmt(s.fz) << ',' << fmt(s.fy) << ',' << fmt(p.x) << ','
            << fmt(p.y) << ',' << fmt(p.z) << ',' << fmt(p.rx) << ',' << fmt(p.ry) << ','
            << fmt(p.rz) << '\n';
    }
}

void write_trace_csv(const ForceTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_trace_csv(trace, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

ForceTrace read_trace_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) throw ParseError(1, "expected header '" + std::string(kHeader) + "'");

    ForceTrace trace;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 9)
            throw ParseError(lineno, "expected 9 fields, got " + std::to_string(fields.size()));

        double v[9];
        for (int i = 0; i < 9; ++i) v[i] = parse_field(fields[i], lineno);
        trace.samples.push_back({v[0], v[1], v[2]});
        trace.poses.push_back({v[3], v[4], v[5], v[6], v[7], v[8]});
    }
    if (trace.samples.size() < 2) throw ParseError(lineno, "trace needs at least 2 samples");
    trace.sample_rate = 1.0 / (trace.samples[1].t - trace.samples[0].t);
    return trace;
}

ForceTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_trace_csv(in);
}

}  // namespace masseur
