#pragma once

#include <string>

#include <json.hpp>

#include "gfq/algebra_spec.hpp"
#include "gfq/check.hpp"
#include "gfq/rational.hpp"

namespace gfq {

using Json = nlohmann::ordered_json;

// Exact scalar encoding: integral values that fit a 64-bit int become json
// integers, everything else becomes a "p/q" (or big decimal) string. Floats
// never appear.
Json rational_json(const Rational& r);

// weights render as their canonical "eps...|delta..." string
Json weight_json(const Weight& w, const AlgebraSpec& spec);

Json checks_json(const CheckList& checks);

// The one output record every command emits: {config, results, checks,
// provenance}. Text output is derived from the same record, so both carry
// identical content.
struct Report {
    Json config = Json::object();
    Json results = Json::array();
    CheckList checks;

    Json to_json() const;
    std::string json_text() const;  // 2-space indented, newline-terminated
    std::string text() const;
};

}  // namespace gfq
