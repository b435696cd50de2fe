#pragma once

namespace gfq {

// Code version reported in provenance blocks.
inline constexpr const char* code_version = "0.1.0";

// Version of the mathematical conventions (mode order, sign rules, basis
// orderings, casimir normalizations). Cached artifacts carry this token and
// are invalidated when it changes.
inline constexpr const char* conventions_version = "1";

}  // namespace gfq
