#include "gfq/report.hpp"

#include <limits>
#include <sstream>

#include "gfq/version.hpp"

namespace gfq {

Json rational_json(const Rational& r) {
    if (is_integer(r)) {
        const Integer num = numerator(r);
        static const Integer lo = std::numeric_limits<std::int64_t>::min();
        static const Integer hi = std::numeric_limits<std::int64_t>::max();
        if (num >= lo && num <= hi)
            return Json(num.convert_to<std::int64_t>());
    }
    return Json(rational_str(r));
}

Json weight_json(const Weight& w, const AlgebraSpec& spec) {
    if (w.basis == WeightBasis::OSP) return Json(osp_weight_str(w, spec));
    std::ostringstream os;
    for (size_t i = 0; i < w.coords.size(); ++i) {
        if (i) os << ",";
        os << rational_str(w.coords[i]);
    }
    return Json(os.str());
}

Json checks_json(const CheckList& checks) {
    Json arr = Json::array();
    for (const auto& c : checks.items) {
        Json item = Json::object();
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        arr.push_back(std::move(item));
    }
    return arr;
}

Json Report::to_json() const {
    Json out = Json::object();
    out["config"] = config;
    out["results"] = results;
    out["checks"] = checks_json(checks);
    Json prov = Json::object();
    prov["code_version"] = code_version;
    prov["conventions_version"] = conventions_version;
    out["provenance"] = prov;
    return out;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

namespace {

void render_value(std::ostream& os, const Json& v) {
    if (v.is_string())
        os << v.get<std::string>();
    else
        os << v.dump();
}

}  // namespace

std::string Report::text() const {
    std::ostringstream os;
    os << "config:";
    for (const auto& [k, v] : config.items()) {
        os << " " << k << "=";
        render_value(os, v);
    }
    os << "\n";
    for (const auto& row : results) {
        os << "  ";
        if (row.is_object() && row.contains("kind")) {
            os << row["kind"].get<std::string>() << ":";
            for (const auto& [k, v] : row.items()) {
                if (k == "kind") continue;
                os << " " << k << "=";
                render_value(os, v);
            }
        } else {
            os << row.dump();
        }
        os << "\n";
    }
    int passed = 0;
    for (const auto& c : checks.items) {
        os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        if (c.pass) ++passed;
    }
    os << "checks passed: " << passed << "/" << checks.items.size() << "\n";
    return os.str();
}

}  // namespace gfq
