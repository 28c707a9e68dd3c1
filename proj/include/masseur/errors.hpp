#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace masseur {

// NaN/inf reached the controller; upstream simulation is unstable.
struct NonFiniteInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnstableSimulation : std::runtime_error {
    std::uint64_t tick;
    UnstableSimulation(std::uint64_t tick_, const std::string& what_)
        : std::runtime_error(what_), tick(tick_) {}
};

struct ZeroVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed trace CSV; line is 1-based.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Invalid run config; message names section.key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace masseur
