#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "gfq/sparse.hpp"

namespace gfq {

// Memoizing home for the sector bases of one (algebra, spins) pair.
class FockContext {
  public:
    FockContext(AlgebraSpec spec, int spins, std::uint64_t dim_cap = default_dim_cap)
        : spec_(spec), spins_(spins), dim_cap_(dim_cap) {
        if (spins != 1 && spins != 2) throw validation_error("spins must be 1 or 2");
    }

    const AlgebraSpec& spec() const { return spec_; }
    int spins() const { return spins_; }
    std::uint64_t dim_cap() const { return dim_cap_; }
    ModeLayout layout() const { return ModeLayout{spec_, spins_}; }

    BasisPtr sector(int N) const;

  private:
    AlgebraSpec spec_;
    int spins_;
    std::uint64_t dim_cap_;
    mutable std::mutex mu_;
    mutable std::map<int, BasisPtr> sectors_;
};

// One ladder monomial: factors applied right-to-left, each (create?, mode).
struct LadderTerm {
    Rational coeff = 1;
    std::vector<std::pair<bool, int>> factors;
};

// Builds all the generator matrices on the graded-fermion sectors. Every
// build is memoized; concurrent first builds are serialized per context.
class OperatorAlgebra {
  public:
    explicit OperatorAlgebra(std::shared_ptr<const FockContext> ctx) : ctx_(std::move(ctx)) {}

    const FockContext& ctx() const { return *ctx_; }
    const AlgebraSpec& spec() const { return ctx_->spec(); }
    BasisPtr sector(int N) const { return ctx_->sector(N); }

    // assemble sum of ladder monomials as a map sector(N) -> sector(N+dN)
    SparseOperator from_terms(const std::vector<LadderTerm>& terms, int N, int dN,
                              std::optional<int> parity) const;

    // gl generators E^a_b = sum_alpha c†_{a alpha} c_{b alpha}
    const SparseOperator& E(int a, int b, int N) const;
    // doubled-index generators E^{a alpha}_{b beta} = c†_{a alpha} c_{b beta}
    const SparseOperator& E2(int a, int alpha, int b, int beta, int N) const;

    // orthosymplectic generators; sigma_lower is sigma_{ab}, sigma is the
    // mixed form sigma^a_b = g^{ac} sigma_{cb}. literal=true selects the
    // uncorrected sigma_{ab} variant (breaks graded antisymmetry; kept for
    // demonstration).
    const SparseOperator& sigma_lower(int a, int b, int N, bool literal = false) const;
    const SparseOperator& sigma(int a, int b, int N) const;

    // complement generators T_{ab} spanning the odd tensor piece of gl
    const SparseOperator& T_lower(int a, int b, int N) const;

    // number operators
    const SparseOperator& Nhat(int N) const;
    const SparseOperator& Nhat_ferm(int N) const;   // orbitals a <= m
    const SparseOperator& Nhat_bos(int N) const;    // orbitals a > m

    // quasi-spin sl(2): Qp raises particle number by 2, Qm lowers by 2.
    // part: 0 fermionic-side split, 1 bosonic-side split, 2 total.
    const SparseOperator& Qplus(int N, int part = 2) const;
    const SparseOperator& Qminus(int N, int part = 2) const;
    const SparseOperator& Q0(int N, int part = 2) const;

    // spin sl(2) on 2-spin sectors; same part convention
    const SparseOperator& Splus(int N, int part = 2) const;
    const SparseOperator& Sminus(int N, int part = 2) const;
    const SparseOperator& S0(int N, int part = 2) const;

    // single ladder operators as cross-sector maps
    const SparseOperator& create_op(int mode, int N) const;      // N -> N+1
    const SparseOperator& annihilate_op(int mode, int N) const;  // N -> N-1

    // quadratic casimirs
    const SparseOperator& casimir_gl(int N) const;
    const SparseOperator& casimir_osp(int N) const;

    // Q^2 = Q0(Q0+1) + Qm Qp as a square operator on sector N
    const SparseOperator& Qsquared(int N) const;

    // diagonal of the invariant form, and the grading involution
    std::vector<Rational> gram(int N) const;
    const SparseOperator& gram_op(int N) const;
    const SparseOperator& parity_op(int N) const;

    // form-adjoint: the unique X with <v, A w> = (-1)^{[v] pA} <X v, w>.
    // Equals G_dom^{-1} A^T G_cod P_cod^{pA}; requires declared parity.
    SparseOperator adjoint(const SparseOperator& A) const;

  private:
    std::shared_ptr<const FockContext> ctx_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<std::string, int, int, int, int, int>, SparseOperator> memo_;

    const SparseOperator& memoized(const std::string& name, std::array<int, 5> key,
                            const std::function<SparseOperator()>& build) const;
    void require_two_spin(const char* what) const;
};

}  // namespace gfq
