#include "gfq/operators.hpp"

#include <array>
#include <functional>

namespace gfq {

BasisPtr FockContext::sector(int N) const {
    if (N < 0) throw validation_error("particle number must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sectors_.find(N);
    if (it != sectors_.end()) return it->second;
    auto basis = enumerate_sector(spec_, spins_, N, dim_cap_);
    sectors_.emplace(N, basis);
    return basis;
}

const SparseOperator& OperatorAlgebra::memoized(const std::string& name, std::array<int, 5> key,
                                         const std::function<SparseOperator()>& build) const {
    const auto full_key = std::make_tuple(name, key[0], key[1], key[2], key[3], key[4]);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(full_key);
        if (it != memo_.end()) return it->second;
    }
    SparseOperator op = build();
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(full_key, std::move(op)).first->second;
}

void OperatorAlgebra::require_two_spin(const char* what) const {
    if (ctx_->spins() != 2)
        throw validation_error(std::string(what) + " needs the 2-spin realization");
}

SparseOperator OperatorAlgebra::from_terms(const std::vector<LadderTerm>& terms, int N, int dN,
                                           std::optional<int> parity) const {
    const auto dom = sector(N);
    const auto cod = sector(N + dN);
    const auto layout = ctx_->layout();
    SparseOperator out(dom, cod, parity);
    for (int j = 0; j < dom->dim(); ++j) {
        for (const auto& term : terms) {
            FockState cur = dom->states[size_t(j)];
            Rational coeff = term.coeff;
            bool dead = false;
            for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
                auto r = it->first ? create(layout, cur, it->second)
                                   : annihilate(layout, cur, it->second);
                if (!r) {
                    dead = true;
                    break;
                }
                coeff *= r->coeff;
                cur = std::move(r->state);
            }
            if (dead || coeff == 0) continue;
            const int row = cod->find(cur);
            if (row < 0) throw std::logic_error("ladder image escaped the target sector");
            out.add_entry(row, j, coeff);
        }
    }
    return out;
}

const SparseOperator& OperatorAlgebra::E(int a, int b, int N) const {
    const auto& spec = ctx_->spec();
    const int par = (spec.parity(a) + spec.parity(b)) % 2;
    return memoized("E", {a, b, N, 0, 0}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms;
        for (int al = 0; al < ctx_->spins(); ++al)
            terms.push_back({1, {{true, layout.mode(a, al)}, {false, layout.mode(b, al)}}});
        return from_terms(terms, N, 0, par);
    });
}

const SparseOperator& OperatorAlgebra::E2(int a, int alpha, int b, int beta, int N) const {
    require_two_spin("the doubled-index generator");
    const auto& spec = ctx_->spec();
    const int par = (spec.parity(a) + spec.parity(b)) % 2;
    return memoized("E2", {a, alpha, b, beta, N}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms{
            {1, {{true, layout.mode(a, alpha)}, {false, layout.mode(b, beta)}}}};
        return from_terms(terms, N, 0, par);
    });
}

const SparseOperator& OperatorAlgebra::sigma_lower(int a, int b, int N, bool literal) const {
    const auto& spec = ctx_->spec();
    return memoized("sigL", {a, b, N, literal ? 1 : 0, 0}, [&] {
        const int sign = (spec.parity(a) * spec.parity(b)) % 2 ? -1 : 1;
        // sigma_{ab} = g_{ac} E^c_b - (-1)^{[a][b]} g_{bc} E^c_a; only c = bar a
        // (resp. bar b) survives. The literal variant repeats g_{ac} E^c_a in
        // the second term.
        const SparseOperator first = E(spec.bar(a), b, N).scale(spec.xi(a));
        const SparseOperator second =
            literal ? E(spec.bar(a), a, N).scale(spec.xi(a)) : E(spec.bar(b), a, N).scale(spec.xi(b));
        return first.sub(second.scale(sign));
    });
}

const SparseOperator& OperatorAlgebra::sigma(int a, int b, int N) const {
    const auto& spec = ctx_->spec();
    // sigma^a_b = g^{ac} sigma_{cb} with c = bar a
    return memoized("sigma", {a, b, N, 0, 0},
                    [&] { return sigma_lower(spec.bar(a), b, N).scale(spec.xi(spec.bar(a))); });
}

const SparseOperator& OperatorAlgebra::T_lower(int a, int b, int N) const {
    const auto& spec = ctx_->spec();
    return memoized("T", {a, b, N, 0, 0}, [&] {
        const int sign = (spec.parity(a) * spec.parity(b)) % 2 ? -1 : 1;
        // T_{ab} = g_{ac} E^c_b + (-1)^{[a][b]} g_{bc} E^c_a
        return E(spec.bar(a), b, N)
            .scale(spec.xi(a))
            .add(E(spec.bar(b), a, N).scale(Rational(sign) * spec.xi(b)));
    });
}

const SparseOperator& OperatorAlgebra::Nhat(int N) const {
    return memoized("N", {N, 0, 0, 0, 0}, [&] { return Nhat_ferm(N).add(Nhat_bos(N)); });
}

const SparseOperator& OperatorAlgebra::Nhat_ferm(int N) const {
    return memoized("Nf", {N, 0, 0, 0, 0}, [&] {
        const auto basis = sector(N);
        const auto layout = ctx_->layout();
        std::vector<Rational> d(size_t(basis->dim()));
        for (int i = 0; i < basis->dim(); ++i) {
            int t = 0;
            for (int mode = 0; mode < layout.mode_count(); ++mode)
                if (layout.fermionic(mode)) t += basis->states[size_t(i)].occ[size_t(mode)];
            d[size_t(i)] = t;
        }
        return SparseOperator::diagonal(basis, d, 0);
    });
}

const SparseOperator& OperatorAlgebra::Nhat_bos(int N) const {
    return memoized("Nb", {N, 0, 0, 0, 0}, [&] {
        const auto basis = sector(N);
        const auto layout = ctx_->layout();
        std::vector<Rational> d(size_t(basis->dim()));
        for (int i = 0; i < basis->dim(); ++i) {
            int t = 0;
            for (int mode = 0; mode < layout.mode_count(); ++mode)
                if (!layout.fermionic(mode)) t += basis->states[size_t(i)].occ[size_t(mode)];
            d[size_t(i)] = t;
        }
        return SparseOperator::diagonal(basis, d, 0);
    });
}

static void check_part(int part) {
    if (part < 0 || part > 2) throw validation_error("part must be 0, 1 or 2");
}

const SparseOperator& OperatorAlgebra::Qplus(int N, int part) const {
    require_two_spin("quasi-spin");
    check_part(part);
    const auto& spec = ctx_->spec();
    return memoized("Qp", {N, part, 0, 0, 0}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms;
        for (int d = 1; d <= spec.dim_gl(); ++d) {
            if (part == 0 && spec.parity(d) != 0) continue;
            if (part == 1 && spec.parity(d) != 1) continue;
            terms.push_back({Rational(spec.xi(d)),
                             {{true, layout.mode(d, 0)}, {true, layout.mode(spec.bar(d), 1)}}});
        }
        return from_terms(terms, N, 2, 0);
    });
}

const SparseOperator& OperatorAlgebra::Qminus(int N, int part) const {
    require_two_spin("quasi-spin");
    check_part(part);
    if (N < 2) throw validation_error("quasi-spin lowering needs N >= 2");
    const auto& spec = ctx_->spec();
    return memoized("Qm", {N, part, 0, 0, 0}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms;
        for (int d = 1; d <= spec.dim_gl(); ++d) {
            if (part == 0 && spec.parity(d) != 0) continue;
            if (part == 1 && spec.parity(d) != 1) continue;
            terms.push_back({Rational(spec.xi(d)),
                             {{false, layout.mode(d, 1)}, {false, layout.mode(spec.bar(d), 0)}}});
        }
        return from_terms(terms, N, -2, 0);
    });
}

const SparseOperator& OperatorAlgebra::Q0(int N, int part) const {
    require_two_spin("quasi-spin");
    check_part(part);
    const auto& spec = ctx_->spec();
    // Q0 = (Nhat - m + n)/2, split as (Nf - m)/2 and (Nb + n)/2
    return memoized("Q0", {N, part, 0, 0, 0}, [&] {
        const auto basis = sector(N);
        SparseOperator num =
            part == 0 ? Nhat_ferm(N) : part == 1 ? Nhat_bos(N) : Nhat(N);
        const int shift = part == 0 ? -spec.m : part == 1 ? spec.n : spec.n - spec.m;
        return num.add(SparseOperator::identity(basis).scale(shift)).scale(Rational(1, 2));
    });
}

const SparseOperator& OperatorAlgebra::Splus(int N, int part) const {
    require_two_spin("spin");
    check_part(part);
    const auto& spec = ctx_->spec();
    return memoized("Sp", {N, part, 0, 0, 0}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms;
        for (int a = 1; a <= spec.dim_gl(); ++a) {
            if (part == 0 && spec.parity(a) != 0) continue;
            if (part == 1 && spec.parity(a) != 1) continue;
            terms.push_back({1, {{true, layout.mode(a, 0)}, {false, layout.mode(a, 1)}}});
        }
        return from_terms(terms, N, 0, 0);
    });
}

const SparseOperator& OperatorAlgebra::Sminus(int N, int part) const {
    require_two_spin("spin");
    check_part(part);
    const auto& spec = ctx_->spec();
    return memoized("Sm", {N, part, 0, 0, 0}, [&] {
        const auto layout = ctx_->layout();
        std::vector<LadderTerm> terms;
        for (int a = 1; a <= spec.dim_gl(); ++a) {
            if (part == 0 && spec.parity(a) != 0) continue;
            if (part == 1 && spec.parity(a) != 1) continue;
            terms.push_back({1, {{true, layout.mode(a, 1)}, {false, layout.mode(a, 0)}}});
        }
        return from_terms(terms, N, 0, 0);
    });
}

const SparseOperator& OperatorAlgebra::S0(int N, int part) const {
    require_two_spin("spin");
    check_part(part);
    const auto& spec = ctx_->spec();
    return memoized("S0", {N, part, 0, 0, 0}, [&] {
        const auto basis = sector(N);
        const auto layout = ctx_->layout();
        std::vector<Rational> d(size_t(basis->dim()));
        for (int i = 0; i < basis->dim(); ++i) {
            int up = 0, down = 0;
            for (int a = 1; a <= spec.dim_gl(); ++a) {
                if (part == 0 && spec.parity(a) != 0) continue;
                if (part == 1 && spec.parity(a) != 1) continue;
                up += basis->states[size_t(i)].occ[size_t(layout.mode(a, 0))];
                down += basis->states[size_t(i)].occ[size_t(layout.mode(a, 1))];
            }
            d[size_t(i)] = Rational(up - down, 2);
        }
        return SparseOperator::diagonal(basis, d, 0);
    });
}

const SparseOperator& OperatorAlgebra::create_op(int mode, int N) const {
    return memoized("cr", {mode, N, 0, 0, 0},
                    [&] { return from_terms({{1, {{true, mode}}}}, N, 1,
                                            ctx_->layout().fermionic(mode) ? 0 : 1); });
}

const SparseOperator& OperatorAlgebra::annihilate_op(int mode, int N) const {
    if (N < 1) throw validation_error("annihilation needs N >= 1");
    return memoized("an", {mode, N, 0, 0, 0},
                    [&] { return from_terms({{1, {{false, mode}}}}, N, -1,
                                            ctx_->layout().fermionic(mode) ? 0 : 1); });
}

const SparseOperator& OperatorAlgebra::casimir_gl(int N) const {
    const auto& spec = ctx_->spec();
    return memoized("Cgl", {N, 0, 0, 0, 0}, [&] {
        SparseOperator acc(sector(N), sector(N), 0);
        for (int a = 1; a <= spec.dim_gl(); ++a)
            for (int b = 1; b <= spec.dim_gl(); ++b) {
                const int sgn = spec.parity(b) ? -1 : 1;
                acc = acc.add(E(a, b, N).compose(E(b, a, N)).scale(sgn));
            }
        acc.set_parity(0);
        return acc;
    });
}

const SparseOperator& OperatorAlgebra::casimir_osp(int N) const {
    const auto& spec = ctx_->spec();
    return memoized("Cosp", {N, 0, 0, 0, 0}, [&] {
        SparseOperator acc(sector(N), sector(N), 0);
        for (int a = 1; a <= spec.dim_gl(); ++a)
            for (int b = 1; b <= spec.dim_gl(); ++b) {
                const int sgn = spec.parity(b) ? -1 : 1;
                acc = acc.add(sigma(a, b, N).compose(sigma(b, a, N)).scale(sgn));
            }
        acc = acc.scale(Rational(1, 2));
        acc.set_parity(0);
        return acc;
    });
}

const SparseOperator& OperatorAlgebra::Qsquared(int N) const {
    require_two_spin("quasi-spin");
    return memoized("Q2", {N, 0, 0, 0, 0}, [&] {
        const auto q0 = Q0(N);
        const auto basis = sector(N);
        SparseOperator out =
            q0.compose(q0.add(SparseOperator::identity(basis)));
        return out.add(Qminus(N + 2).compose(Qplus(N)));
    });
}

std::vector<Rational> OperatorAlgebra::gram(int N) const {
    const auto basis = sector(N);
    const auto layout = ctx_->layout();
    std::vector<Rational> d(size_t(basis->dim()));
    for (int i = 0; i < basis->dim(); ++i) d[size_t(i)] = gram_diagonal(layout, basis->states[size_t(i)]);
    return d;
}

const SparseOperator& OperatorAlgebra::gram_op(int N) const {
    return memoized("G", {N, 0, 0, 0, 0},
                    [&] { return SparseOperator::diagonal(sector(N), gram(N), 0); });
}

const SparseOperator& OperatorAlgebra::parity_op(int N) const {
    return memoized("P", {N, 0, 0, 0, 0}, [&] {
        const auto basis = sector(N);
        const auto layout = ctx_->layout();
        std::vector<Rational> d(size_t(basis->dim()));
        for (int i = 0; i < basis->dim(); ++i)
            d[size_t(i)] = state_parity(layout, basis->states[size_t(i)]) ? -1 : 1;
        return SparseOperator::diagonal(basis, d, 0);
    });
}

SparseOperator OperatorAlgebra::adjoint(const SparseOperator& A) const {
    if (!A.parity()) throw validation_error("adjoint needs a declared parity");
    const int Ndom = A.domain()->N, Ncod = A.codomain()->N;
    // X = G_dom^{-1} A^T G_cod P_cod^p : codomain -> domain
    SparseOperator X = A.transpose();
    const auto gdom = gram(Ndom);
    const auto gcod = gram(Ncod);
    const auto layout = ctx_->layout();
    SparseOperator out(A.codomain(), A.domain(), A.parity());
    const bool odd = (*A.parity() % 2) != 0;
    for (int c = 0; c < X.cols(); ++c) {
        Rational colscale = gcod[size_t(c)];
        if (odd && state_parity(layout, A.codomain()->states[size_t(c)])) colscale = -colscale;
        for (const auto& [r, v] : X.column(c))
            out.add_entry(r, c, v * colscale / gdom[size_t(r)]);
    }
    return out;
}

}  // namespace gfq
