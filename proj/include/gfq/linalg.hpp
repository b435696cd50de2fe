#pragma once

#include <optional>
#include <vector>

#include "gfq/sparse.hpp"

namespace gfq {

using Vec = std::vector<Rational>;

// Dense row-major rational matrix for the small restricted problems (block
// actions, Gram restrictions). Everything sector-sized stays sparse.
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Rational(0)) {}
    Rational& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    const Rational& at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }

    static DenseMatrix identity(int n);
    DenseMatrix mul(const DenseMatrix& rhs) const;
    DenseMatrix add(const DenseMatrix& rhs) const;
    DenseMatrix sub(const DenseMatrix& rhs) const;
    DenseMatrix scale(const Rational& s) const;
    bool is_zero() const;
    int rank() const;
};

// Row space in reduced row echelon form; rows are unit at their pivot column
// and the pivot column is zero elsewhere. Canonical: two spans are equal iff
// their RREF rows agree.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span(int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // residual of v after elimination against the basis; zero iff v in span
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && rows_ == other.rows_ && pivots_ == other.pivots_;
    }

    // inserts v if independent; returns true when the dimension grew
    bool insert(const Vec& v);

    // coordinates of v in the RREF basis; nullopt when v is outside
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

  private:
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

// kernel of a dense matrix (solutions of M x = 0) as a Subspace of R^cols
Subspace dense_kernel(const DenseMatrix& M);

// RREF of a list of rows in place; returns pivot columns
std::vector<int> rref(std::vector<Vec>& rows);

// image of the operator on a subspace: span { A u : u basis of U }
Subspace image_subspace(const SparseOperator& A, const Subspace& U);

// kernel of A restricted to U, expressed in the ambient coordinates of U
Subspace kernel_on_subspace(const SparseOperator& A, const Subspace& U);

// kernel of A on its full domain
Subspace kernel(const SparseOperator& A);

// matrix of A restricted to an invariant subspace, in the RREF basis of U;
// nullopt when U is not invariant
std::optional<DenseMatrix> restrict_operator(const SparseOperator& A, const Subspace& U);

// Gram restriction B_ij = <u_i, u_j> for a diagonal form
DenseMatrix restrict_bilinear(const std::vector<Rational>& gram_diag, const Subspace& U);

// radical of a symmetric dense form: kernel of B
Subspace form_radical(const DenseMatrix& B);

}  // namespace gfq
