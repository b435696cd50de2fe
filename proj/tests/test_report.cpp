#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfq/report.hpp"
#include "gfq/version.hpp"

using namespace gfq;

namespace {

bool float_free(const Json& j) {
    if (j.is_number_float()) return false;
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (!float_free(v)) return false;
    return true;
}

Report sample_report() {
    const auto spec = make_spec(2, 4);
    Report rep;
    rep.config = Json{{"m", 2}, {"n", 4}, {"spins", 2}};
    Json row;
    row["eigenvalue"] = rational_json(Rational(-19));
    row["qbar"] = rational_json(Rational(7, 2));
    row["weight"] = weight_json(lambda_ab(LabelPair{2, 1}, spec), spec);
    rep.results.push_back(row);
    rep.checks.add("sample-pass", true, "detail text");
    rep.checks.add("sample-degenerate", true);
    return rep;
}

}  // namespace

TEST_CASE("exact scalars render as integers or quotient strings") {
    CHECK(rational_json(Rational(5)) == Json(5));
    CHECK(rational_json(Rational(0)) == Json(0));
    CHECK(rational_json(Rational(-7)) == Json(-7));
    CHECK(rational_json(Rational(3, 2)) == Json("3/2"));
    CHECK(rational_json(Rational(-1, 3)) == Json("-1/3"));
    // reduced before rendering
    CHECK(rational_json(Rational(4, 2)) == Json(2));
    // beyond 64-bit integer range still exact, as a string
    const Rational big("123456789012345678901234567890");
    const auto j = rational_json(big);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("weights render as their canonical strings") {
    const auto spec = make_spec(2, 4);
    CHECK(weight_json(lambda_ab(LabelPair{1, 0}, spec), spec) == Json("0|1,1"));
    CHECK(weight_json(Weight::zero_osp(spec), spec) == Json("0|0,0"));
    const auto spec14 = make_spec(1, 4);
    CHECK(weight_json(lambda_ab(LabelPair{0, 2}, spec14), spec14) == Json("|2,0"));
}

TEST_CASE("check lists serialize name, verdict and detail") {
    CheckList checks;
    checks.add("first", true, "ok");
    checks.add("second", false, "broken");
    const auto j = checks_json(checks);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["name"] == "first");
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["detail"] == "ok");
    CHECK(j[1]["pass"] == false);
}

TEST_CASE("reports carry provenance and no floating point anywhere") {
    const auto rep = sample_report();
    const auto j = rep.to_json();
    CHECK(j["provenance"]["code_version"] == code_version);
    CHECK(j["provenance"]["conventions_version"] == conventions_version);
    CHECK(float_free(j));
    // the fractional value went out as a string, not a double
    CHECK(j["results"][0]["qbar"] == Json("7/2"));
}

TEST_CASE("identical content serializes byte-identically") {
    const auto a = sample_report().json_text();
    const auto b = sample_report().json_text();
    CHECK(a == b);
    REQUIRE(!a.empty());
    CHECK(a.back() == '\n');
    // json text parses back to the same document
    CHECK(Json::parse(a) == sample_report().to_json());
}

TEST_CASE("text rendering derives from the same record") {
    const auto rep = sample_report();
    const auto text = rep.text();
    CHECK(text.find("sample-pass") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    CheckList bad;
    bad.add("broken-one", false, "");
    Report rep2;
    rep2.checks = bad;
    CHECK(rep2.text().find("FAIL") != std::string::npos);
}
