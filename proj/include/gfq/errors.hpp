#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfq {

// Invalid input: violated standing assumption, malformed weight, index out of
// range, incompatible bases. CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// An exact mathematical cross-check failed inside a computation whose result
// depends on it. Unreachable unless an invariant is broken; CLI maps this to
// exit code 1.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (sector dimension cap). Carries the
// offending dimension so callers can report it. CLI maps this to exit code 3.
struct cap_exceeded : std::runtime_error {
    cap_exceeded(const std::string& what, std::uint64_t dim)
        : std::runtime_error(what), dimension(dim) {}
    std::uint64_t dimension;
};

}  // namespace gfq
