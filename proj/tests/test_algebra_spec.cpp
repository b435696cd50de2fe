#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfq/algebra_spec.hpp"

using namespace gfq;

TEST_CASE("spec validation rejects bad shapes") {
    CHECK_THROWS_AS(make_spec(2, 3), validation_error);
    CHECK_THROWS_AS(make_spec(2, 2), validation_error);
    CHECK_THROWS_AS(make_spec(0, 4), validation_error);
    CHECK_THROWS_AS(make_spec(5, 4), validation_error);
    CHECK_NOTHROW(make_spec(1, 4));
    CHECK_NOTHROW(make_spec(8, 8));
}

TEST_CASE("conjugation pairs indices within each statistics block") {
    const auto spec = make_spec(3, 4);
    CHECK(spec.bar(1) == 3);
    CHECK(spec.bar(2) == 2);
    CHECK(spec.bar(3) == 1);
    CHECK(spec.bar(4) == 7);  // first bosonic orbital pairs with the last
    CHECK(spec.bar(5) == 6);
    for (int a = 1; a <= spec.dim_gl(); ++a) CHECK(spec.bar(spec.bar(a)) == a);
}

TEST_CASE("metric signs are +1 fermionic, alternating bosonic") {
    const auto spec = make_spec(2, 4);
    CHECK(spec.xi(1) == 1);
    CHECK(spec.xi(2) == 1);
    CHECK(spec.xi(3) == -1);
    CHECK(spec.xi(4) == 1);
    CHECK(spec.xi(5) == -1);
    CHECK(spec.xi(6) == 1);
}

TEST_CASE("metric is antisymmetric on the bosonic block, symmetric on the fermionic") {
    for (auto [m, n] : {std::pair{2, 4}, {3, 4}, {4, 6}}) {
        const auto spec = make_spec(m, n);
        for (int a = 1; a <= spec.dim_gl(); ++a)
            for (int b = 1; b <= spec.dim_gl(); ++b) {
                const int sign = spec.parity(b) ? -1 : 1;
                CHECK(spec.metric_lower(a, b) == sign * spec.metric_lower(b, a));
            }
    }
}

TEST_CASE("upper and lower metric are inverse") {
    const auto spec = make_spec(3, 6);
    for (int a = 1; a <= spec.dim_gl(); ++a)
        for (int b = 1; b <= spec.dim_gl(); ++b) {
            int acc = 0;
            for (int c = 1; c <= spec.dim_gl(); ++c)
                acc += spec.metric_upper(a, c) * spec.metric_lower(c, b);
            CHECK(acc == (a == b ? 1 : 0));
        }
}

TEST_CASE("weyl vector closed form at small shapes") {
    CHECK(rho(make_spec(2, 4)) == Weight::osp({0, 1, 0}));
    CHECK(rho(make_spec(4, 4)) == Weight::osp({1, 0, 0, -1}));
    CHECK(rho(make_spec(1, 4)) == Weight::osp({Rational(3, 2), Rational(1, 2)}));
}

TEST_CASE("weyl vector equals the half graded sum of positive roots") {
    for (int n = 4; n <= 8; n += 2)
        for (int m = 1; m <= n; ++m) {
            const auto spec = make_spec(m, n);
            const auto rs = positive_roots(spec);
            Weight acc = Weight::zero_osp(spec);
            for (const auto& r : rs.even) acc = acc + r;
            for (const auto& r : rs.odd) acc = acc - r;
            CHECK(rho(spec) == acc * Rational(1, 2));
        }
}

TEST_CASE("root counts match the closed formulas") {
    for (auto [m, n] : {std::pair{1, 4}, {2, 4}, {3, 4}, {4, 4}, {5, 6}, {8, 8}}) {
        const auto spec = make_spec(m, n);
        const auto rs = positive_roots(spec);
        const int h = spec.h(), k = spec.k();
        // o(m): h(h-1) long + (odd m ? h short : 0); sp(n): k^2
        const int even = h * (h - 1) + (m % 2 ? h : 0) + k * k;
        // odd roots delta_mu (+/- eps_i | bare): k * m
        CHECK(int(rs.even.size()) == even);
        CHECK(int(rs.odd.size()) == k * m);
    }
}

TEST_CASE("invariant form is definite-split on the two coordinate families") {
    const auto spec = make_spec(4, 6);
    const int h = spec.h(), k = spec.k();
    for (int i = 0; i < h + k; ++i)
        for (int j = 0; j < h + k; ++j) {
            Weight x = Weight::zero_osp(spec), y = Weight::zero_osp(spec);
            x.coords[size_t(i)] = 1;
            y.coords[size_t(j)] = 1;
            const Rational expect = i != j ? 0 : (i < h ? 1 : -1);
            CHECK(weight_form(x, y, spec) == expect);
        }
}

TEST_CASE("casimir eigenvalue closed form matches the bilinear form") {
    for (auto [m, n] : {std::pair{2, 4}, {4, 4}, {1, 4}}) {
        const auto spec = make_spec(m, n);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                const LabelPair p{a, b};
                const Weight lam = lambda_ab(p, spec);
                CHECK(casimir_eigenvalue_labels(p, spec) == casimir_eigenvalue_osp(lam, spec));
            }
    }
}

TEST_CASE("casimir eigenvalue oracle values") {
    CHECK(casimir_eigenvalue_labels({1, 1}, make_spec(2, 4)) == -9);
    CHECK(casimir_eigenvalue_labels({1, 0}, make_spec(4, 4)) == 0);
    CHECK(casimir_eigenvalue_labels({0, 1}, make_spec(2, 4)) == -3);
    CHECK(casimir_eigenvalue_labels({2, 1}, make_spec(2, 4)) == -19);
    CHECK(casimir_eigenvalue_labels({0, 0}, make_spec(2, 4)) == 0);
}

TEST_CASE("gap closed forms agree across the whole scan domain") {
    for (auto [m, n] : {std::pair{2, 4}, {4, 4}}) {
        const auto spec = make_spec(m, n);
        for (int a = 0; 2 * a <= 4; ++a)
            for (int b = 0; 2 * a + b <= 4; ++b) {
                const LabelPair p{a, b};
                for (const auto& w : scan_candidates(p, spec)) {
                    const auto [g1, g2] = casimir_gap_forms(w, p, spec);
                    CHECK(g1 == g2);
                    CHECK(casimir_gap(w, p, spec) == g1);
                }
            }
    }
}

TEST_CASE("gap oracle: one-boson candidate above the (1,1) block") {
    // candidate eps-part empty, delta-part (1,0) sits 6 above the base
    const auto spec = make_spec(2, 4);
    CHECK(casimir_gap(ScanWeight{0, 0, 1, 0}, LabelPair{1, 1}, spec) == 6);
}

TEST_CASE("gap vanishes exactly at the base label") {
    const auto spec = make_spec(2, 4);
    for (int a = 0; 2 * a <= 4; ++a)
        for (int b = 0; 2 * a + b <= 4; ++b) {
            const LabelPair p{a, b};
            const Weight base = lambda_ab(p, spec);
            for (const auto& w : scan_candidates(p, spec)) {
                const bool at_base = scan_weight_to_osp(w, spec) == base;
                const Rational g = casimir_gap(w, p, spec);
                CHECK(g >= 0);
                CHECK((g == 0) == at_base);
            }
        }
}

TEST_CASE("degenerate shape allows a second gap zero only at the null weight") {
    const auto spec = make_spec(4, 4);
    for (int a = 0; 2 * a <= 4; ++a)
        for (int b = 0; 2 * a + b <= 4; ++b) {
            const LabelPair p{a, b};
            const Weight base = lambda_ab(p, spec);
            const Weight null = Weight::zero_osp(spec);
            for (const auto& w : scan_candidates(p, spec)) {
                const Weight lam = scan_weight_to_osp(w, spec);
                const Rational g = casimir_gap(w, p, spec);
                CHECK(g >= 0);
                if (g == 0) {
                    const bool allowed =
                        lam == base || (a == 1 && b == 0 && lam == null);
                    CHECK(allowed);
                }
            }
        }
}

TEST_CASE("two-column highest weight covers the three column-overflow shapes") {
    const auto spec = make_spec(2, 4);
    CHECK(gl_highest_weight({1, 0}, spec) == Weight::gl({2, 0, 0, 0, 0, 0}));
    CHECK(gl_highest_weight({1, 1}, spec) == Weight::gl({2, 1, 0, 0, 0, 0}));
    CHECK(gl_highest_weight({1, 2}, spec) == Weight::gl({2, 1, 1, 0, 0, 0}));
    CHECK(gl_highest_weight({0, 3}, spec) == Weight::gl({1, 1, 1, 0, 0, 0}));
    CHECK(gl_highest_weight({2, 2}, spec) == Weight::gl({2, 2, 2, 0, 0, 0}));
    CHECK(gl_highest_weight({3, 0}, spec) == Weight::gl({2, 2, 1, 1, 0, 0}));
    CHECK(gl_highest_weight({4, 1}, spec) == Weight::gl({2, 2, 3, 2, 0, 0}));
}

TEST_CASE("predicted branching lists one component per pair count") {
    const auto spec = make_spec(2, 4);
    const auto pred = predict_branching({2, 1}, spec);
    REQUIRE(pred.components.size() == 3);
    CHECK_FALSE(pred.exceptional);
    for (int c = 0; c <= 2; ++c) {
        CHECK(pred.components[size_t(c)].c == c);
        CHECK(pred.components[size_t(c)].weight == lambda_ab({c, 1}, spec));
        CHECK(pred.components[size_t(c)].irreducible);
    }
}

TEST_CASE("predicted branching flags the degenerate spin-singlet chain") {
    const auto spec = make_spec(4, 4);
    const auto pred = predict_branching({1, 0}, spec);
    REQUIRE(pred.components.size() == 2);
    CHECK(pred.exceptional);
    CHECK(pred.components[0].absorbed);
    CHECK(pred.components[1].exceptional);
    CHECK_FALSE(pred.components[1].irreducible);
    REQUIRE(pred.composition_factors.size() == 2);
    CHECK(pred.composition_factors[0].first == lambda_ab({1, 0}, spec));
    CHECK(pred.composition_factors[0].second == 1);
    CHECK(pred.composition_factors[1].first == Weight::zero_osp(spec));
    CHECK(pred.composition_factors[1].second == 2);
}

TEST_CASE("spin-carrying blocks stay generic even at m = n") {
    const auto spec = make_spec(4, 4);
    CHECK_FALSE(predict_branching({1, 1}, spec).exceptional);
    CHECK_FALSE(predict_branching({0, 0}, spec).exceptional);
    CHECK_FALSE(predict_branching({0, 2}, spec).exceptional);
}

TEST_CASE("weight strings round-trip through the parser") {
    const auto spec = make_spec(2, 4);
    for (const auto& w : {Weight::osp({0, 2, 1}), Weight::osp({1, 0, 0}),
                          Weight::osp({Rational(1, 2), Rational(3, 2), 0})}) {
        CHECK(parse_osp_weight(osp_weight_str(w, spec), spec) == w);
    }
}

TEST_CASE("parser accepts mirrored full-length coordinates") {
    const auto spec = make_spec(2, 4);
    CHECK(parse_osp_weight("0,0|2,1", spec) == Weight::osp({0, 2, 1}));
    CHECK(parse_osp_weight("1,-1|2,1", spec) == Weight::osp({1, 2, 1}));
    CHECK(parse_osp_weight("0|2,1", spec) == Weight::osp({0, 2, 1}));
    // full-length delta side must mirror with a sign as well
    CHECK(parse_osp_weight("0|2,1,-1,-2", spec) == Weight::osp({0, 2, 1}));
    CHECK_THROWS_AS(parse_osp_weight("1,1|2,1", spec), validation_error);
    CHECK_THROWS_AS(parse_osp_weight("0|2,1,1,2", spec), validation_error);
    CHECK_THROWS_AS(parse_osp_weight("0|2", spec), validation_error);
    CHECK_THROWS_AS(parse_osp_weight("junk", spec), validation_error);
}

TEST_CASE("odd middle coordinate must vanish in the full form") {
    const auto spec = make_spec(3, 4);  // h = 1: full eps form is (x, y, -x)
    CHECK(parse_osp_weight("1,0,-1|0,0", spec) == Weight::osp({1, 0, 0}));
    CHECK_THROWS_AS(parse_osp_weight("1,2,-1|0,0", spec), validation_error);
}

TEST_CASE("scan candidates respect the two-column shape constraints") {
    const auto spec = make_spec(2, 4);
    for (int a = 0; 2 * a <= 4; ++a)
        for (int b = 0; 2 * a + b <= 4; ++b) {
            const auto cands = scan_candidates({a, b}, spec);
            CHECK(!cands.empty());
            for (const auto& w : cands) {
                CHECK(w.c >= 0);
                CHECK(w.d >= 0);
                CHECK(w.c + w.d <= spec.h());
                CHECK(w.e >= w.f);
                CHECK(w.f >= 0);
            }
            // candidates are deduplicated and sorted
            for (size_t i = 1; i < cands.size(); ++i) CHECK(cands[i - 1] < cands[i]);
        }
}
