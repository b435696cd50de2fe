#include "gfq/verify.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gfq/linalg.hpp"

namespace gfq {

namespace {

int sign_pow(int e) { return e % 2 ? -1 : 1; }

std::string sector_tag(const OperatorAlgebra& ops, int N) {
    std::ostringstream os;
    os << "N=" << N << " dim=" << ops.sector(N)->dim();
    return os.str();
}

std::string counted(long cases, const OperatorAlgebra& ops, int N) {
    std::ostringstream os;
    os << cases << " cases, " << sector_tag(ops, N);
    return os.str();
}

std::string failure_at(std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "first failure at (";
    bool first = true;
    for (int v : idx) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

CheckList check_mode_relations(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto layout = ops.ctx().layout();
    const int M = layout.mode_count();
    auto p = [&](int x) { return layout.fermionic(x) ? 0 : 1; };

    // brackets are anticommutators except between two bosonic modes
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int x = 0; x < M && ok; ++x)
            for (int y = x; y < M && ok; ++y) {
                SparseOperator lhs =
                    ops.create_op(x, N + 1)
                        .compose(ops.create_op(y, N))
                        .add(ops.create_op(y, N + 1)
                                 .compose(ops.create_op(x, N))
                                 .scale(sign_pow(p(x) * p(y))));
                ++cnt;
                if (!lhs.is_zero()) {
                    ok = false;
                    det = failure_at({x, y});
                }
            }
        out.add("ladder-create-create", ok, ok ? counted(cnt, ops, N) : det);
    }
    if (N >= 2) {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int x = 0; x < M && ok; ++x)
            for (int y = x; y < M && ok; ++y) {
                SparseOperator lhs =
                    ops.annihilate_op(x, N - 1)
                        .compose(ops.annihilate_op(y, N))
                        .add(ops.annihilate_op(y, N - 1)
                                 .compose(ops.annihilate_op(x, N))
                                 .scale(sign_pow(p(x) * p(y))));
                ++cnt;
                if (!lhs.is_zero()) {
                    ok = false;
                    det = failure_at({x, y});
                }
            }
        out.add("ladder-annihilate-annihilate", ok, ok ? counted(cnt, ops, N) : det);
    }
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        const SparseOperator id = SparseOperator::identity(ops.sector(N));
        for (int x = 0; x < M && ok; ++x)
            for (int y = 0; y < M && ok; ++y) {
                SparseOperator lhs =
                    ops.annihilate_op(x, N + 1).compose(ops.create_op(y, N));
                if (N >= 1)
                    lhs = lhs.add(ops.create_op(y, N - 1)
                                      .compose(ops.annihilate_op(x, N))
                                      .scale(sign_pow(p(x) * p(y))));
                const bool good = (x == y) ? lhs.equals(id) : lhs.is_zero();
                ++cnt;
                if (!good) {
                    ok = false;
                    det = failure_at({x, y});
                }
            }
        out.add("ladder-annihilate-create", ok, ok ? counted(cnt, ops, N) : det);
    }
    return out;
}

CheckList check_gl_relations(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    bool ok = true;
    std::string det;
    long cnt = 0;
    for (int a = 1; a <= d && ok; ++a)
        for (int b = 1; b <= d && ok; ++b)
            for (int c = 1; c <= d && ok; ++c)
                for (int e = 1; e <= d && ok; ++e) {
                    // graded antisymmetry of both sides covers the swapped pair
                    if (std::make_pair(a, b) > std::make_pair(c, e)) continue;
                    const auto& A = ops.E(a, b, N);
                    const auto& B = ops.E(c, e, N);
                    SparseOperator rhs(A.domain(), A.codomain(), std::nullopt);
                    if (b == c) rhs = rhs.add(ops.E(a, e, N));
                    const int s = sign_pow((spec.parity(a) + spec.parity(b)) *
                                           (spec.parity(c) + spec.parity(e)));
                    if (e == a) rhs = rhs.sub(ops.E(c, b, N).scale(s));
                    ++cnt;
                    if (!graded_commutator(A, B).equals(rhs)) {
                        ok = false;
                        det = failure_at({a, b, c, e});
                    }
                }
    out.add("single-index-closure", ok, ok ? counted(cnt, ops, N) : det);
    return out;
}

CheckList check_gl_action_on_modes(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const auto layout = ops.ctx().layout();
    const int d = spec.dim_gl();
    const int spins = ops.ctx().spins();
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                const int pe = (spec.parity(a) + spec.parity(b)) % 2;
                for (int c = 1; c <= d && ok; ++c)
                    for (int g = 0; g < spins && ok; ++g) {
                        const int s = sign_pow(pe * spec.parity(c));
                        SparseOperator lhs =
                            ops.E(a, b, N + 1)
                                .compose(ops.create_op(layout.mode(c, g), N))
                                .sub(ops.create_op(layout.mode(c, g), N)
                                         .compose(ops.E(a, b, N))
                                         .scale(s));
                        SparseOperator rhs(ops.sector(N), ops.sector(N + 1),
                                           std::nullopt);
                        if (b == c) rhs = rhs.add(ops.create_op(layout.mode(a, g), N));
                        ++cnt;
                        if (!lhs.equals(rhs)) {
                            ok = false;
                            det = failure_at({a, b, c, g});
                        }
                    }
            }
        out.add("action-on-creators", ok, ok ? counted(cnt, ops, N) : det);
    }
    if (N >= 1) {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                const int pe = (spec.parity(a) + spec.parity(b)) % 2;
                for (int c = 1; c <= d && ok; ++c)
                    for (int g = 0; g < spins && ok; ++g) {
                        const int s = sign_pow(pe * spec.parity(c));
                        SparseOperator lhs =
                            ops.E(a, b, N - 1)
                                .compose(ops.annihilate_op(layout.mode(c, g), N))
                                .sub(ops.annihilate_op(layout.mode(c, g), N)
                                         .compose(ops.E(a, b, N))
                                         .scale(s));
                        SparseOperator rhs(ops.sector(N), ops.sector(N - 1),
                                           std::nullopt);
                        if (a == c)
                            rhs = rhs.sub(
                                ops.annihilate_op(layout.mode(b, g), N).scale(s));
                        ++cnt;
                        if (!lhs.equals(rhs)) {
                            ok = false;
                            det = failure_at({a, b, c, g});
                        }
                    }
            }
        out.add("action-on-annihilators", ok, ok ? counted(cnt, ops, N) : det);
    }
    return out;
}

CheckList check_osp_closure(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    bool ok = true;
    std::string det;
    long cnt = 0;
    for (int a = 1; a <= d && ok; ++a)
        for (int b = 1; b <= d && ok; ++b)
            for (int c = 1; c <= d && ok; ++c)
                for (int e = 1; e <= d && ok; ++e) {
                    if (std::make_pair(a, b) > std::make_pair(c, e)) continue;
                    const auto& A = ops.sigma_lower(a, b, N);
                    const auto& B = ops.sigma_lower(c, e, N);
                    const int s = sign_pow((spec.parity(a) + spec.parity(b)) *
                                           (spec.parity(c) + spec.parity(e)));
                    const int t = sign_pow(spec.parity(c) * spec.parity(e));
                    SparseOperator rhs(A.domain(), A.codomain(), std::nullopt);
                    const Rational gcb = spec.metric_lower(c, b);
                    const Rational gae = spec.metric_lower(a, e);
                    const Rational geb = spec.metric_lower(e, b);
                    const Rational gac = spec.metric_lower(a, c);
                    if (gcb != 0) rhs = rhs.add(ops.sigma_lower(a, e, N).scale(gcb));
                    if (gae != 0)
                        rhs = rhs.sub(ops.sigma_lower(c, b, N).scale(gae * s));
                    if (geb != 0)
                        rhs = rhs.sub(ops.sigma_lower(a, c, N).scale(geb * t));
                    if (gac != 0)
                        rhs = rhs.add(ops.sigma_lower(e, b, N).scale(gac * t * s));
                    ++cnt;
                    if (!graded_commutator(A, B).equals(rhs)) {
                        ok = false;
                        det = failure_at({a, b, c, e});
                    }
                }
    out.add("orthosymplectic-closure", ok, ok ? counted(cnt, ops, N) : det);
    return out;
}

CheckList check_sigma_structure(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    auto pr = [&](int a) { return spec.parity(a); };

    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = a; b <= d && ok; ++b) {
                SparseOperator lhs = ops.sigma_lower(a, b, N).add(
                    ops.sigma_lower(b, a, N).scale(sign_pow(pr(a) * pr(b))));
                ++cnt;
                if (!lhs.is_zero()) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("graded-antisymmetry", ok, ok ? counted(cnt, ops, N) : det);
    }
    if (N >= 1) {
        // The uncorrected variant must violate graded antisymmetry somewhere.
        // Sector 0 is excluded: every quadratic generator vanishes there, so
        // nothing is visible.
        bool violated = false;
        for (int a = 1; a <= d && !violated; ++a)
            for (int b = a; b <= d && !violated; ++b) {
                SparseOperator lhs = ops.sigma_lower(a, b, N, true).add(
                    ops.sigma_lower(b, a, N, true).scale(sign_pow(pr(a) * pr(b))));
                if (!lhs.is_zero()) violated = true;
            }
        out.add("uncorrected-variant-breaks-antisymmetry", violated,
                violated ? sector_tag(ops, N) : "no violation found");
    }
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                const Rational coeff = Rational(-sign_pow(pr(a) * (pr(a) + pr(b)))) *
                                       spec.xi(a) * spec.xi(b);
                SparseOperator rhs =
                    ops.sigma(spec.bar(b), spec.bar(a), N).scale(coeff);
                ++cnt;
                if (!ops.sigma(a, b, N).equals(rhs)) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("mixed-index-reflection", ok, ok ? counted(cnt, ops, N) : det);
    }
    {
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a) {
            SparseOperator rhs =
                ops.E(a, a, N).sub(ops.E(spec.bar(a), spec.bar(a), N));
            if (!ops.sigma(a, a, N).equals(rhs)) {
                ok = false;
                det = failure_at({a});
            }
        }
        out.add("cartan-differences", ok, ok ? counted(d, ops, N) : det);
    }
    if (spec.m_odd()) {
        const int mid = spec.h() + 1;
        out.add("middle-cartan-vanishes", ops.sigma(mid, mid, N).is_zero(),
                sector_tag(ops, N));
    }
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                SparseOperator lhs = ops.sigma_lower(a, b, N).add(ops.T_lower(a, b, N));
                SparseOperator rhs =
                    ops.E(spec.bar(a), b, N).scale(spec.xi(a) * Rational(2));
                ++cnt;
                if (!lhs.equals(rhs)) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("sigma-plus-pair-splits-E", ok, ok ? counted(cnt, ops, N) : det);
    }
    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = a; b <= d && ok; ++b) {
                SparseOperator lhs = ops.T_lower(a, b, N).sub(
                    ops.T_lower(b, a, N).scale(sign_pow(pr(a) * pr(b))));
                ++cnt;
                if (!lhs.is_zero()) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("pair-graded-symmetry", ok, ok ? counted(cnt, ops, N) : det);
    }
    {
        // bosonic diagonal block matches the embedded gl(k) combination
        bool ok = true;
        std::string det;
        long cnt = 0;
        const int m = spec.m;
        for (int mu = 1; mu <= spec.k() && ok; ++mu)
            for (int nu = 1; nu <= spec.k() && ok; ++nu) {
                SparseOperator rhs = ops.E(m + mu, m + nu, N).sub(
                    ops.E(spec.bar(m + nu), spec.bar(m + mu), N)
                        .scale(sign_pow(mu + nu)));
                ++cnt;
                if (!ops.sigma(m + mu, m + nu, N).equals(rhs)) {
                    ok = false;
                    det = failure_at({mu, nu});
                }
            }
        out.add("bosonic-block-embedding", ok, ok ? counted(cnt, ops, N) : det);
    }
    return out;
}

CheckList check_doubled_relations(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    const int spins = ops.ctx().spins();

    struct DIdx {
        int a, al, b, be, par;
    };
    std::vector<DIdx> gens;
    for (int a = 1; a <= d; ++a)
        for (int al = 0; al < spins; ++al)
            for (int b = 1; b <= d; ++b)
                for (int be = 0; be < spins; ++be)
                    gens.push_back({a, al, b, be, (spec.parity(a) + spec.parity(b)) % 2});

    {
        bool ok = true;
        std::string det;
        long cnt = 0;
        for (size_t i = 0; i < gens.size() && ok; ++i)
            for (size_t j = i; j < gens.size() && ok; ++j) {
                const auto& x = gens[i];
                const auto& y = gens[j];
                const auto& A = ops.E2(x.a, x.al, x.b, x.be, N);
                const auto& B = ops.E2(y.a, y.al, y.b, y.be, N);
                SparseOperator rhs(A.domain(), A.codomain(), std::nullopt);
                if (x.b == y.a && x.be == y.al)
                    rhs = rhs.add(ops.E2(x.a, x.al, y.b, y.be, N));
                if (y.b == x.a && y.be == x.al)
                    rhs = rhs.sub(
                        ops.E2(y.a, y.al, x.b, x.be, N).scale(sign_pow(x.par * y.par)));
                ++cnt;
                if (!graded_commutator(A, B).equals(rhs)) {
                    ok = false;
                    det = failure_at({x.a, x.al, x.b, x.be, y.a, y.al, y.b, y.be});
                }
            }
        out.add("doubled-index-closure", ok, ok ? counted(cnt, ops, N) : det);
    }
    {
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                SparseOperator acc(ops.sector(N), ops.sector(N), std::nullopt);
                for (int al = 0; al < spins; ++al)
                    acc = acc.add(ops.E2(a, al, b, al, N));
                if (!acc.equals(ops.E(a, b, N))) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("spin-sum-recovers-single-index", ok,
                ok ? counted(long(d) * d, ops, N) : det);
    }
    if (spins == 2) {
        SparseOperator sp(ops.sector(N), ops.sector(N), std::nullopt);
        SparseOperator sm(ops.sector(N), ops.sector(N), std::nullopt);
        SparseOperator sz(ops.sector(N), ops.sector(N), std::nullopt);
        for (int a = 1; a <= d; ++a) {
            sp = sp.add(ops.E2(a, 0, a, 1, N));
            sm = sm.add(ops.E2(a, 1, a, 0, N));
            sz = sz.add(ops.E2(a, 0, a, 0, N).sub(ops.E2(a, 1, a, 1, N)));
        }
        const bool ok = sp.equals(ops.Splus(N)) && sm.equals(ops.Sminus(N)) &&
                        sz.scale(Rational(1, 2)).equals(ops.S0(N));
        out.add("spin-ladders-from-doubled-index", ok, sector_tag(ops, N));
    }
    return out;
}

namespace {

// particle-number-shifting generator: get(M) yields its matrix out of sector
// M, or null where the sector below bottoms out (a zero map).
struct Shifted {
    int dN = 0;
    std::function<const SparseOperator*(int)> get;
};

// [X, Y] as a map sector(N) -> sector(N + dX + dY); caller ensures the target
// sector index is non-negative. Everything passed here is even, so the
// bracket is the plain commutator.
SparseOperator even_bracket(OperatorAlgebra& ops, const Shifted& X, const Shifted& Y,
                            int N) {
    std::optional<SparseOperator> xy, yx;
    if (N + Y.dN >= 0) {
        const SparseOperator* y = Y.get(N);
        const SparseOperator* x = X.get(N + Y.dN);
        if (x && y) xy = x->compose(*y);
    }
    if (N + X.dN >= 0) {
        const SparseOperator* x = X.get(N);
        const SparseOperator* y = Y.get(N + X.dN);
        if (x && y) yx = y->compose(*x);
    }
    if (xy && yx) return xy->sub(*yx);
    if (xy) return *xy;
    if (yx) return yx->scale(-1);
    return SparseOperator(ops.sector(N), ops.sector(N + X.dN + Y.dN), 0);
}

// whether sector M can be materialized under the context's dimension cap;
// negative M counts as fitting (it is the zero space).
bool sector_fits(const OperatorAlgebra& ops, int M) {
    if (M < 0) return true;
    return sector_dimension(ops.spec(), ops.ctx().spins(), M) <= ops.ctx().dim_cap();
}

struct Sl2 {
    std::string name;
    Shifted up, dn, z;
};

Sl2 quasi_family(OperatorAlgebra& ops, int part, std::string name) {
    Sl2 f;
    f.name = std::move(name);
    f.up = {+2, [&ops, part](int M) -> const SparseOperator* {
                return M >= 0 ? &ops.Qplus(M, part) : nullptr;
            }};
    f.dn = {-2, [&ops, part](int M) -> const SparseOperator* {
                return M >= 2 ? &ops.Qminus(M, part) : nullptr;
            }};
    f.z = {0, [&ops, part](int M) -> const SparseOperator* {
               return M >= 0 ? &ops.Q0(M, part) : nullptr;
           }};
    return f;
}

Sl2 spin_family(OperatorAlgebra& ops, int part, std::string name) {
    Sl2 f;
    f.name = std::move(name);
    f.up = {0, [&ops, part](int M) -> const SparseOperator* {
                return M >= 0 ? &ops.Splus(M, part) : nullptr;
            }};
    f.dn = {0, [&ops, part](int M) -> const SparseOperator* {
                return M >= 0 ? &ops.Sminus(M, part) : nullptr;
            }};
    f.z = {0, [&ops, part](int M) -> const SparseOperator* {
               return M >= 0 ? &ops.S0(M, part) : nullptr;
           }};
    return f;
}

bool sl2_closes(OperatorAlgebra& ops, const Sl2& f, int N) {
    bool ok = even_bracket(ops, f.up, f.dn, N).equals(f.z.get(N)->scale(2));
    ok = ok && even_bracket(ops, f.z, f.up, N).equals(*f.up.get(N));
    if (N + f.dn.dN >= 0 && f.dn.get(N))
        ok = ok && even_bracket(ops, f.z, f.dn, N).equals(f.dn.get(N)->scale(-1));
    return ok;
}

}  // namespace

CheckList check_spin_quasispin(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();

    std::vector<Sl2> fams;
    fams.push_back(quasi_family(ops, 0, "quasi-spin-up-half"));
    fams.push_back(quasi_family(ops, 1, "quasi-spin-down-half"));
    fams.push_back(spin_family(ops, 0, "spin-up-half"));
    fams.push_back(spin_family(ops, 1, "spin-down-half"));
    const Sl2 qtot = quasi_family(ops, 2, "quasi-spin");
    const Sl2 stot = spin_family(ops, 2, "spin");

    {
        bool ok = sl2_closes(ops, qtot, N) && sl2_closes(ops, stot, N);
        for (const auto& f : fams) ok = ok && sl2_closes(ops, f, N);
        out.add("sl2-closure", ok, sector_tag(ops, N));
    }
    {
        // the total family is the sum of its two part-splits
        const bool ok = qtot.up.get(N)->equals(
                            fams[0].up.get(N)->add(*fams[1].up.get(N))) &&
                        qtot.z.get(N)->equals(fams[0].z.get(N)->add(*fams[1].z.get(N))) &&
                        (N < 2 || qtot.dn.get(N)->equals(
                                      fams[0].dn.get(N)->add(*fams[1].dn.get(N)))) &&
                        stot.up.get(N)->equals(
                            fams[2].up.get(N)->add(*fams[3].up.get(N))) &&
                        stot.dn.get(N)->equals(
                            fams[2].dn.get(N)->add(*fams[3].dn.get(N))) &&
                        stot.z.get(N)->equals(fams[2].z.get(N)->add(*fams[3].z.get(N)));
        out.add("part-splits-sum", ok, sector_tag(ops, N));
    }
    {
        bool ok = true;
        bool skipped = false;
        std::string det;
        for (size_t i = 0; i < fams.size() && ok; ++i)
            for (size_t j = i + 1; j < fams.size() && ok; ++j) {
                const Shifted* gi[3] = {&fams[i].up, &fams[i].dn, &fams[i].z};
                const Shifted* gj[3] = {&fams[j].up, &fams[j].dn, &fams[j].z};
                for (int u = 0; u < 3 && ok; ++u)
                    for (int v = 0; v < 3 && ok; ++v) {
                        const int du = gi[u]->dN, dv = gj[v]->dN;
                        if (N + du + dv < 0) continue;
                        // a raising/raising bracket lands two sectors above the
                        // family's own range; skip pairs whose target outgrows
                        // the cap instead of failing the whole sector
                        if (!sector_fits(ops, N + du) || !sector_fits(ops, N + dv) ||
                            !sector_fits(ops, N + du + dv)) {
                            skipped = true;
                            continue;
                        }
                        if (!even_bracket(ops, *gi[u], *gj[v], N).is_zero()) {
                            ok = false;
                            det = fams[i].name + " vs " + fams[j].name;
                        }
                    }
            }
        out.add("split-families-pairwise-commute", ok,
                ok ? sector_tag(ops, N) + (skipped ? ", raising pairs beyond cap skipped" : "")
                   : det);
    }
    {
        // spin generators centralize every single-index generator
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                const auto& Eab = ops.E(a, b, N);
                if (!graded_commutator(ops.Splus(N), Eab).is_zero() ||
                    !graded_commutator(ops.Sminus(N), Eab).is_zero() ||
                    !graded_commutator(ops.S0(N), Eab).is_zero()) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("spin-centralizes-orbital-generators", ok,
                ok ? counted(long(d) * d, ops, N) : det);
    }
    {
        // quasi-spin generators centralize the orthosymplectic generators
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                Shifted sig{0, [&ops, a, b](int M) -> const SparseOperator* {
                                return M >= 0 ? &ops.sigma(a, b, M) : nullptr;
                            }};
                if (!even_bracket(ops, qtot.up, sig, N).is_zero() ||
                    !even_bracket(ops, qtot.z, sig, N).is_zero() ||
                    (N >= 2 && !even_bracket(ops, qtot.dn, sig, N).is_zero())) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("quasi-spin-centralizes-osp", ok, ok ? counted(long(d) * d, ops, N) : det);
    }
    {
        // both closed forms of the squared quasi-spin agree
        const auto& q0 = ops.Q0(N);
        const SparseOperator id = SparseOperator::identity(ops.sector(N));
        SparseOperator other = q0.compose(q0.sub(id));
        if (N >= 2) other = other.add(ops.Qplus(N - 2).compose(ops.Qminus(N)));
        out.add("quasi-spin-square-forms", ops.Qsquared(N).equals(other),
                sector_tag(ops, N));
    }
    return out;
}

CheckList check_casimir_identity(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    const auto basis = ops.sector(N);
    {
        const auto& Ng = ops.Nhat(N);
        SparseOperator rhs =
            Ng.scale(spec.m - spec.n + 2)
                .sub(Ng.compose(Ng).scale(Rational(1, 2)))
                .sub(SparseOperator::identity(basis).scale(
                    Rational((spec.n - spec.m) * (spec.n - spec.m - 2), 2)))
                .add(ops.Qsquared(N).scale(2));
        SparseOperator lhs = ops.casimir_gl(N).sub(ops.casimir_osp(N));
        out.add("casimir-difference-closed-form", lhs.equals(rhs), sector_tag(ops, N));
    }
    {
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                if (!graded_commutator(ops.casimir_gl(N), ops.E(a, b, N)).is_zero()) {
                    ok = false;
                    det = failure_at({a, b});
                }
                if (ok && !graded_commutator(ops.casimir_osp(N), ops.sigma(a, b, N))
                               .is_zero()) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("casimirs-commute-with-generators", ok,
                ok ? counted(2L * d * d, ops, N) : det);
    }
    if (N == 0)
        out.add("osp-casimir-kills-vacuum", ops.casimir_osp(0).is_zero(), "N=0");
    return out;
}

CheckList check_adjoints(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();
    const int spins = ops.ctx().spins();
    {
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int b = 1; b <= d && ok; ++b) {
                const int s = sign_pow(spec.parity(a) * (spec.parity(a) + spec.parity(b)));
                if (!ops.adjoint(ops.E(a, b, N)).equals(ops.E(b, a, N).scale(s))) {
                    ok = false;
                    det = failure_at({a, b});
                }
                if (ok &&
                    !ops.adjoint(ops.sigma(a, b, N)).equals(ops.sigma(b, a, N).scale(s))) {
                    ok = false;
                    det = failure_at({a, b});
                }
            }
        out.add("single-index-adjoints", ok, ok ? counted(2L * d * d, ops, N) : det);
    }
    if (spins == 2) {
        bool ok = true;
        std::string det;
        for (int a = 1; a <= d && ok; ++a)
            for (int al = 0; al < spins && ok; ++al)
                for (int b = 1; b <= d && ok; ++b)
                    for (int be = 0; be < spins && ok; ++be) {
                        const int s = sign_pow(spec.parity(a) *
                                               (spec.parity(a) + spec.parity(b)));
                        if (!ops.adjoint(ops.E2(a, al, b, be, N))
                                 .equals(ops.E2(b, be, a, al, N).scale(s))) {
                            ok = false;
                            det = failure_at({a, al, b, be});
                        }
                    }
        out.add("doubled-index-adjoints", ok,
                ok ? counted(long(d) * spins * d * spins, ops, N) : det);

        bool qok = ops.adjoint(ops.Qplus(N)).equals(ops.Qminus(N + 2)) &&
                   ops.adjoint(ops.Q0(N)).equals(ops.Q0(N)) &&
                   ops.adjoint(ops.Splus(N)).equals(ops.Sminus(N)) &&
                   ops.adjoint(ops.S0(N)).equals(ops.S0(N));
        if (N >= 2)
            qok = qok && ops.adjoint(ops.Qminus(N)).equals(ops.Qplus(N - 2));
        out.add("sl2-adjoints", qok, sector_tag(ops, N));
    }
    return out;
}

CheckList check_pair_span(OperatorAlgebra& ops, int N) {
    CheckList out;
    const auto& spec = ops.spec();
    const int d = spec.dim_gl();

    std::vector<int> slots = {1, 2, spec.m, spec.m + 1, spec.m + 2, d};
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
    slots.erase(std::remove_if(slots.begin(), slots.end(),
                               [&](int a) { return a < 1 || a > d; }),
                slots.end());

    std::vector<std::pair<int, int>> tslots;
    for (int a : slots)
        for (int b : slots)
            if (a <= b) tslots.emplace_back(a, b);

    std::vector<SparseOperator> comms;
    for (size_t i = 0; i < tslots.size(); ++i)
        for (size_t j = i; j < tslots.size(); ++j) {
            const auto& A = ops.T_lower(tslots[i].first, tslots[i].second, N);
            const auto& B = ops.T_lower(tslots[j].first, tslots[j].second, N);
            comms.push_back(graded_commutator(A, B));
        }

    // index the union of matrix supports, then solve membership in the span
    // of the sigma matrices over those coordinates
    std::map<std::pair<int, int>, int> slot_of;
    auto note = [&](const SparseOperator& A) {
        for (const auto& [r, c, v] : A.sorted_triples()) {
            (void)v;
            slot_of.emplace(std::make_pair(r, c), 0);
        }
    };
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) note(ops.sigma_lower(a, b, N));
    for (const auto& A : comms) note(A);
    int next = 0;
    for (auto& kv : slot_of) kv.second = next++;

    auto flatten = [&](const SparseOperator& A) {
        Vec v(static_cast<size_t>(next));
        for (const auto& [r, c, val] : A.sorted_triples())
            v[size_t(slot_of.at(std::make_pair(r, c)))] = val;
        return v;
    };

    std::vector<Vec> sig;
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            const auto& S = ops.sigma_lower(a, b, N);
            if (!S.is_zero()) sig.push_back(flatten(S));
        }
    const Subspace span = Subspace::span(next, sig);

    bool ok = true;
    std::string det;
    for (size_t i = 0; i < comms.size() && ok; ++i)
        if (!span.contains(flatten(comms[i]))) {
            ok = false;
            det = "commutator " + std::to_string(i) + " escapes the sigma span";
        }
    out.add("pair-commutators-in-sigma-span", ok,
            ok ? counted(long(comms.size()), ops, N) : det);
    return out;
}

CheckList relation_suite(OperatorAlgebra& ops, int N) {
    CheckList out;
    out.extend(check_mode_relations(ops, N));
    out.extend(check_gl_relations(ops, N));
    out.extend(check_gl_action_on_modes(ops, N));
    out.extend(check_osp_closure(ops, N));
    out.extend(check_sigma_structure(ops, N));
    if (ops.ctx().spins() == 2) {
        out.extend(check_doubled_relations(ops, N));
        out.extend(check_spin_quasispin(ops, N));
        out.extend(check_casimir_identity(ops, N));
    }
    out.extend(check_adjoints(ops, N));
    return out;
}

CheckList check_rho_roots(const AlgebraSpec& spec) {
    CheckList out;
    const RootSystem roots = positive_roots(spec);
    Weight acc = Weight::zero_osp(spec);
    for (const auto& r : roots.even) acc = acc + r;
    for (const auto& r : roots.odd) acc = acc - r;
    acc = acc * Rational(1, 2);
    std::ostringstream os;
    os << "m=" << spec.m << " n=" << spec.n << ": " << acc.str();
    out.add("weyl-vector-half-graded-root-sum", acc == rho(spec), os.str());
    return out;
}

}  // namespace gfq
