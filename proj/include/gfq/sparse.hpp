#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gfq/fock.hpp"

namespace gfq {

using BasisPtr = std::shared_ptr<const SectorBasis>;

// Column-major exact-rational sparse matrix between two named sector bases.
// domain/codomain identity is checked on composition and addition; operators
// that change particle number are rectangular maps between different sectors.
class SparseOperator {
  public:
    SparseOperator() = default;
    SparseOperator(BasisPtr domain, BasisPtr codomain, std::optional<int> parity = std::nullopt)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity),
          cols_(domain_ ? size_t(domain_->dim()) : 0) {}

    static SparseOperator identity(const BasisPtr& basis);
    static SparseOperator diagonal(const BasisPtr& basis, const std::vector<Rational>& d,
                                   std::optional<int> parity = 0);

    const BasisPtr& domain() const { return domain_; }
    const BasisPtr& codomain() const { return codomain_; }
    int rows() const { return codomain_->dim(); }
    int cols() const { return domain_->dim(); }
    bool square() const { return domain_ == codomain_; }
    std::optional<int> parity() const { return parity_; }
    void set_parity(std::optional<int> p) { parity_ = p; }

    // sorted (row, value) pairs of one column
    const std::vector<std::pair<int, Rational>>& column(int c) const { return cols_[size_t(c)]; }
    void add_entry(int row, int col, const Rational& v);
    Rational entry(int row, int col) const;
    size_t nnz() const;
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    SparseOperator compose(const SparseOperator& rhs) const;  // (*this) o rhs
    SparseOperator add(const SparseOperator& rhs) const;
    SparseOperator sub(const SparseOperator& rhs) const;
    SparseOperator scale(const Rational& s) const;
    SparseOperator transpose() const;
    bool equals(const SparseOperator& rhs) const;

    // canonical row-major triples for serialization and hashing
    std::vector<std::tuple<int, int, Rational>> sorted_triples() const;

  private:
    BasisPtr domain_, codomain_;
    std::optional<int> parity_;
    std::vector<std::vector<std::pair<int, Rational>>> cols_;
};

// [A,B] = AB - (-1)^{pA pB} BA; both operators must be square on the same
// basis and carry a declared parity.
SparseOperator graded_commutator(const SparseOperator& A, const SparseOperator& B);

// {A,B} = AB + (-1)^{pA pB} BA
SparseOperator graded_anticommutator(const SparseOperator& A, const SparseOperator& B);

}  // namespace gfq
