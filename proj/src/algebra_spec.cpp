#include "gfq/algebra_spec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gfq {

AlgebraSpec AlgebraSpec::make(int m, int n) {
    if (n % 2 != 0) throw validation_error("n must be even (n = 2k), got n=" + std::to_string(n));
    if (n <= 2) throw validation_error("n must exceed 2, got n=" + std::to_string(n));
    if (m < 1) throw validation_error("m must be at least 1, got m=" + std::to_string(m));
    if (m > n) throw validation_error("m must not exceed n, got m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n));
    return AlgebraSpec{m, n};
}

AlgebraSpec make_spec(int m, int n) { return AlgebraSpec::make(m, n); }

bool Weight::operator<(const Weight& o) const {
    if (basis != o.basis) throw validation_error("comparing weights in different bases");
    return std::lexicographical_compare(coords.begin(), coords.end(),
                                        o.coords.begin(), o.coords.end());
}

static void check_same_shape(const Weight& x, const Weight& y) {
    if (x.basis != y.basis || x.coords.size() != y.coords.size())
        throw validation_error("weight arithmetic on mismatched bases");
}

Weight Weight::operator+(const Weight& o) const {
    check_same_shape(*this, o);
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    check_same_shape(*this, o);
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::operator*(const Rational& s) const {
    Weight r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
}

std::string Weight::str() const {
    // flat coordinate list; the eps/delta split needs the algebra and is
    // rendered by osp_weight_str
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

static Weight osp_unit(const AlgebraSpec& spec, int pos) {
    Weight w = Weight::zero_osp(spec);
    w.coords[pos] = 1;
    return w;
}

RootSystem positive_roots(const AlgebraSpec& spec) {
    const int h = spec.h(), k = spec.k();
    RootSystem rs;
    // o(m): eps_i - eps_j and eps_i + eps_j for i < j <= h; short roots eps_i
    // when m is odd.
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            rs.even.push_back(osp_unit(spec, i - 1) - osp_unit(spec, j - 1));
            rs.even.push_back(osp_unit(spec, i - 1) + osp_unit(spec, j - 1));
        }
    if (spec.m_odd())
        for (int i = 1; i <= h; ++i) rs.even.push_back(osp_unit(spec, i - 1));
    // sp(n): delta_mu - delta_nu, delta_mu + delta_nu (mu < nu), 2 delta_mu.
    for (int mu = 1; mu <= k; ++mu)
        for (int nu = mu + 1; nu <= k; ++nu) {
            rs.even.push_back(osp_unit(spec, h + mu - 1) - osp_unit(spec, h + nu - 1));
            rs.even.push_back(osp_unit(spec, h + mu - 1) + osp_unit(spec, h + nu - 1));
        }
    for (int mu = 1; mu <= k; ++mu)
        rs.even.push_back(osp_unit(spec, h + mu - 1) * Rational(2));
    // odd roots: delta_mu + eps_i over all orbitals i = 1..m, with
    // eps_{bar i} = -eps_i and a zero eps for the middle orbital of odd m.
    for (int mu = 1; mu <= k; ++mu)
        for (int i = 1; i <= spec.m; ++i) {
            Weight w = osp_unit(spec, h + mu - 1);
            if (i <= h)
                w = w + osp_unit(spec, i - 1);
            else if (spec.bar(i) <= h)
                w = w - osp_unit(spec, spec.bar(i) - 1);
            // middle orbital (odd m): eps contribution vanishes
            rs.odd.push_back(w);
        }
    return rs;
}

Weight rho(const AlgebraSpec& spec) {
    const int h = spec.h(), k = spec.k();
    Weight w = Weight::zero_osp(spec);
    for (int i = 1; i <= h; ++i) w.coords[i - 1] = Rational(spec.m - 2 * i, 2);
    for (int mu = 1; mu <= k; ++mu)
        w.coords[h + mu - 1] = Rational(spec.n - spec.m + 2 - 2 * mu, 2);
    return w;
}

Rational weight_form(const Weight& x, const Weight& y, const AlgebraSpec& spec) {
    if (x.basis != WeightBasis::OSP || y.basis != WeightBasis::OSP)
        throw validation_error("weight_form is defined on OSP-basis weights");
    const size_t len = size_t(spec.h() + spec.k());
    if (x.coords.size() != len || y.coords.size() != len)
        throw validation_error("weight length does not match the algebra rank");
    Rational acc = 0;
    for (int i = 0; i < spec.h(); ++i) acc += x.coords[i] * y.coords[i];
    for (int mu = 0; mu < spec.k(); ++mu)
        acc -= x.coords[spec.h() + mu] * y.coords[spec.h() + mu];
    return acc;
}

Rational casimir_eigenvalue_osp(const Weight& lambda, const AlgebraSpec& spec) {
    return weight_form(lambda, lambda + rho(spec) * Rational(2), spec);
}

Weight lambda_ab(const LabelPair& p, const AlgebraSpec& spec) {
    if (p.a < 0 || p.b < 0) throw validation_error("block labels must be non-negative");
    if (spec.k() < 2) throw validation_error("delta rank below 2 cannot hold lambda_{a,b}");
    Weight w = Weight::zero_osp(spec);
    w.coords[spec.h() + 0] = p.a + p.b;
    w.coords[spec.h() + 1] = p.a;
    return w;
}

Rational casimir_eigenvalue_labels(const LabelPair& p, const AlgebraSpec& spec) {
    const Rational ab = p.a + p.b, a = p.a, nm = spec.n - spec.m;
    return -ab * (ab + nm) - a * (a + nm - 2);
}

Weight scan_weight_to_osp(const ScanWeight& w, const AlgebraSpec& spec) {
    const int h = spec.h();
    if (w.c + w.d > h) throw validation_error("eps-part (2_c,1_d,0..) needs c+d <= h");
    if (w.e < w.f || w.f < 0) throw validation_error("delta-part needs e >= f >= 0");
    Weight out = Weight::zero_osp(spec);
    for (int i = 0; i < w.c; ++i) out.coords[i] = 2;
    for (int i = w.c; i < w.c + w.d; ++i) out.coords[i] = 1;
    out.coords[h + 0] = w.e;
    out.coords[h + 1] = w.f;
    return out;
}

std::pair<Rational, Rational> casimir_gap_forms(const ScanWeight& w, const LabelPair& p,
                                                const AlgebraSpec& spec) {
    const Rational c = w.c, d = w.d, e = w.e, f = w.f;
    const Rational a = p.a, b = p.b, m = spec.m, n = spec.n;
    const Rational common = d * (m - d) + 2 * c * (2 * a + b - 2 * c - d) +
                            (a + b - c - e) * (a + b - c + e + n - m);
    const Rational form1 = 2 * c * n + common + (a - c - f) * (a - c + f + n - m - 2);
    const Rational form2 = (2 * c * (n + 1) + 2 * f - 2 * a) + common +
                           (a - c - f) * (a - c + f + n - m);
    return {form1, form2};
}

Rational casimir_gap(const ScanWeight& w, const LabelPair& p, const AlgebraSpec& spec) {
    auto [f1, f2] = casimir_gap_forms(w, p, spec);
    if (f1 != f2)
        throw std::logic_error("the two closed gap forms disagree at c=" + std::to_string(w.c) +
                               " d=" + std::to_string(w.d) + " e=" + std::to_string(w.e) +
                               " f=" + std::to_string(w.f));
    return f1;
}

std::vector<ScanWeight> scan_candidates(const LabelPair& p, const AlgebraSpec& spec) {
    if (p.a < 0 || p.b < 0) throw validation_error("block labels must be non-negative");
    const int N = p.particle_number(), m = spec.m, h = spec.h();
    std::set<ScanWeight> out;
    // upper components (a',b',c',d'): two-column gl(m) part (2_a',1_b',0..)
    // with a'+b' <= m, two-column gl(n) part (c',d',0..) with c' >= d' >= 0,
    // particle count 2a'+b'+c'+d' = N, and the spin triangle on
    // (b, b', c'-d').
    for (int ap = 0; 2 * ap <= N; ++ap)
        for (int bp = 0; bp + ap <= m && 2 * ap + bp <= N; ++bp)
            for (int dp = 0; 2 * ap + bp + 2 * dp <= N; ++dp) {
                const int cp = N - 2 * ap - bp - dp;
                if (cp < dp) continue;
                const int s1 = cp - dp;  // twice the second spin
                if (p.b > bp + s1 || bp > p.b + s1 || s1 > p.b + bp) continue;
                // contraction: c <= a', d fixed by b' and the free rows
                for (int c = 0; c <= ap; ++c) {
                    const int d = std::min(bp, m - 2 * c - bp);
                    if (d < 0 || c + d > h) continue;
                    for (int f = 0; f <= dp; ++f) {
                        const int e = f + s1;
                        out.insert(ScanWeight{c, d, e, f});
                    }
                }
            }
    return {out.begin(), out.end()};
}

Weight gl_highest_weight(const LabelPair& p, const AlgebraSpec& spec) {
    if (p.a < 0 || p.b < 0) throw validation_error("block labels must be non-negative");
    const int m = spec.m, n = spec.n, a = p.a, b = p.b;
    std::vector<Rational> c(size_t(m + n), Rational(0));
    if (a + b <= m) {
        for (int i = 0; i < a; ++i) c[i] = 2;
        for (int i = a; i < a + b; ++i) c[i] = 1;
    } else if (a <= m) {
        for (int i = 0; i < a; ++i) c[i] = 2;
        for (int i = a; i < m; ++i) c[i] = 1;
        c[m] = a + b - m;
    } else {
        for (int i = 0; i < m; ++i) c[i] = 2;
        c[m] = a + b - m;
        c[m + 1] = a - m;
    }
    return Weight::gl(std::move(c));
}

std::string osp_weight_str(const Weight& w, const AlgebraSpec& spec) {
    if (w.basis != WeightBasis::OSP ||
        w.coords.size() != size_t(spec.h() + spec.k()))
        throw validation_error("osp_weight_str needs an OSP weight of matching rank");
    std::ostringstream os;
    for (int i = 0; i < spec.h(); ++i) {
        if (i) os << ",";
        os << w.coords[i].str();
    }
    os << "|";
    for (int mu = 0; mu < spec.k(); ++mu) {
        if (mu) os << ",";
        os << w.coords[spec.h() + mu].str();
    }
    return os.str();
}

static std::vector<Rational> parse_coord_list(const std::string& part) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream is(part);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

Weight parse_osp_weight(const std::string& text, const AlgebraSpec& spec) {
    const auto bar_pos = text.find('|');
    if (bar_pos == std::string::npos)
        throw validation_error("weight syntax is 'eps|delta', e.g. '0,0|2,1'");
    auto eps = parse_coord_list(text.substr(0, bar_pos));
    auto del = parse_coord_list(text.substr(bar_pos + 1));
    // each part may come in either the reduced length (h resp. k) or the full
    // orbital length (m resp. n) whose upper half mirrors the lower with a
    // sign; the full form is folded after a consistency check
    auto fold = [](std::vector<Rational>& part, size_t reduced, size_t full,
                   const char* label) {
        if (part.size() == reduced) return;
        if (part.size() != full)
            throw validation_error(std::string(label) + " part has " +
                                   std::to_string(part.size()) +
                                   " coordinates, expected " + std::to_string(reduced) +
                                   " (or the mirrored length " + std::to_string(full) +
                                   ")");
        for (size_t i = 0; i < full / 2; ++i)
            if (part[i] != -part[full - 1 - i])
                throw validation_error(std::string(label) +
                                       " part of full length must mirror with a sign");
        if (full % 2 == 1 && part[full / 2] != 0)
            throw validation_error(std::string(label) +
                                   " part of full length needs a zero middle entry");
        part.resize(reduced);
    };
    fold(eps, size_t(spec.h()), size_t(spec.m), "eps");
    fold(del, size_t(spec.k()), size_t(spec.n), "delta");
    eps.insert(eps.end(), del.begin(), del.end());
    return Weight::osp(std::move(eps));
}

BranchingPrediction predict_branching(const LabelPair& p, const AlgebraSpec& spec) {
    if (p.a < 0 || p.b < 0) throw validation_error("block labels must be non-negative");
    BranchingPrediction pred;
    pred.labels = p;
    pred.exceptional = (spec.m == spec.n && p.b == 0 && p.a >= 1);
    for (int c = 0; c <= p.a; ++c) {
        BranchingComponent comp;
        comp.c = c;
        comp.weight = lambda_ab(LabelPair{c, p.b}, spec);
        if (pred.exceptional && c == 1) {
            comp.irreducible = false;
            comp.exceptional = true;
        }
        if (pred.exceptional && c == 0) {
            comp.irreducible = false;
            comp.absorbed = true;
        }
        pred.components.push_back(std::move(comp));
    }
    if (pred.exceptional) {
        pred.composition_factors.emplace_back(lambda_ab(LabelPair{1, 0}, spec), 1);
        pred.composition_factors.emplace_back(Weight::zero_osp(spec), 2);
    }
    return pred;
}

}  // namespace gfq
