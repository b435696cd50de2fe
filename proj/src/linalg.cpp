#include "gfq/linalg.hpp"

#include <algorithm>

namespace gfq {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::mul(const DenseMatrix& rhs) const {
    if (cols != rhs.rows) throw validation_error("dense product shape mismatch");
    DenseMatrix out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int l = 0; l < cols; ++l) {
            const Rational& v = at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                const Rational& w = rhs.at(l, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

DenseMatrix DenseMatrix::add(const DenseMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw validation_error("dense sum shape mismatch");
    DenseMatrix out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += rhs.a[i];
    return out;
}

DenseMatrix DenseMatrix::sub(const DenseMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw validation_error("dense diff shape mismatch");
    DenseMatrix out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] -= rhs.a[i];
    return out;
}

DenseMatrix DenseMatrix::scale(const Rational& s) const {
    DenseMatrix out = *this;
    for (auto& v : out.a) v *= s;
    return out;
}

bool DenseMatrix::is_zero() const {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

int DenseMatrix::rank() const {
    std::vector<Vec> rws(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        rws[size_t(i)] = Vec(a.begin() + size_t(i) * size_t(cols),
                             a.begin() + size_t(i + 1) * size_t(cols));
    return int(rref(rws).size());
}

std::vector<int> rref(std::vector<Vec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Rational inv = Rational(1) / rows[rank][col];
        for (size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational f = rows[r][col];
            for (size_t j = col; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivots.push_back(int(col));
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) {
        if (int(v.size()) != ambient) throw validation_error("span vector length mismatch");
        s.insert(v);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (int(v.size()) != ambient_) throw validation_error("reduce length mismatch");
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = r[size_t(pivots_[i])];
        if (c == 0) continue;
        const Rational f = c;  // basis row has a unit pivot
        const Vec& row = rows_[i];
        for (int j = pivots_[i]; j < ambient_; ++j)
            if (row[size_t(j)] != 0) r[size_t(j)] -= f * row[size_t(j)];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
        if (r[size_t(j)] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    const Rational inv = Rational(1) / r[size_t(piv)];
    for (int j = piv; j < ambient_; ++j) r[size_t(j)] *= inv;
    // clear the new pivot column from existing rows to stay reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = rows_[i][size_t(piv)];
        if (f == 0) continue;
        for (int j = piv; j < ambient_; ++j) rows_[i][size_t(j)] -= f * r[size_t(j)];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec r = v;
    Vec coords(rows_.size(), Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = r[size_t(pivots_[i])];
        if (c == 0) continue;
        coords[i] = c;
        const Vec& row = rows_[i];
        for (int j = pivots_[i]; j < ambient_; ++j)
            if (row[size_t(j)] != 0) r[size_t(j)] -= c * row[size_t(j)];
    }
    for (const auto& x : r)
        if (x != 0) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw validation_error("subspace sum ambient mismatch");
    Subspace s = *this;
    for (const auto& row : other.rows_) s.insert(row);
    return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw validation_error("subspace intersection ambient mismatch");
    // Zassenhaus-free approach: solve sum_i x_i u_i = sum_j y_j v_j by RREF of
    // the stacked coefficient system over the union of supports.
    const int du = dim(), dv = other.dim();
    if (du == 0 || dv == 0) return Subspace(ambient_);
    // matrix with columns (u_1..u_du, -v_1..-v_dv); kernel gives the pairs
    DenseMatrix M(ambient_, du + dv);
    for (int j = 0; j < du; ++j)
        for (int i = 0; i < ambient_; ++i) M.at(i, j) = rows_[size_t(j)][size_t(i)];
    for (int j = 0; j < dv; ++j)
        for (int i = 0; i < ambient_; ++i) M.at(i, du + j) = -other.rows_[size_t(j)][size_t(i)];
    Subspace ker = dense_kernel(M);
    Subspace out(ambient_);
    for (const auto& x : ker.basis()) {
        Vec w(size_t(ambient_), Rational(0));
        for (int j = 0; j < du; ++j) {
            if (x[size_t(j)] == 0) continue;
            for (int i = 0; i < ambient_; ++i) w[size_t(i)] += x[size_t(j)] * rows_[size_t(j)][size_t(i)];
        }
        out.insert(w);
    }
    return out;
}

Subspace dense_kernel(const DenseMatrix& M) {
    std::vector<Vec> rws(size_t(M.rows));
    for (int i = 0; i < M.rows; ++i)
        rws[size_t(i)] = Vec(M.a.begin() + size_t(i) * size_t(M.cols),
                             M.a.begin() + size_t(i + 1) * size_t(M.cols));
    const auto pivots = rref(rws);
    std::vector<bool> is_pivot(size_t(M.cols), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    Subspace out(M.cols);
    for (int free = 0; free < M.cols; ++free) {
        if (is_pivot[size_t(free)]) continue;
        Vec v(size_t(M.cols), Rational(0));
        v[size_t(free)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[size_t(pivots[i])] = -rws[i][size_t(free)];
        out.insert(v);
    }
    return out;
}

Subspace image_subspace(const SparseOperator& A, const Subspace& U) {
    if (U.ambient() != A.cols()) throw validation_error("image ambient mismatch");
    Subspace out(A.rows());
    for (const auto& u : U.basis()) out.insert(A.apply(u));
    return out;
}

Subspace kernel_on_subspace(const SparseOperator& A, const Subspace& U) {
    if (U.ambient() != A.cols()) throw validation_error("kernel ambient mismatch");
    const int d = U.dim();
    if (d == 0) return Subspace(U.ambient());
    DenseMatrix M(A.rows(), d);
    for (int j = 0; j < d; ++j) {
        const Vec img = A.apply(U.basis()[size_t(j)]);
        for (int i = 0; i < A.rows(); ++i) M.at(i, j) = img[size_t(i)];
    }
    Subspace coef = dense_kernel(M);
    Subspace out(U.ambient());
    for (const auto& x : coef.basis()) {
        Vec w(size_t(U.ambient()), Rational(0));
        for (int j = 0; j < d; ++j) {
            if (x[size_t(j)] == 0) continue;
            for (int i = 0; i < U.ambient(); ++i)
                w[size_t(i)] += x[size_t(j)] * U.basis()[size_t(j)][size_t(i)];
        }
        out.insert(w);
    }
    return out;
}

Subspace kernel(const SparseOperator& A) {
    DenseMatrix M(A.rows(), A.cols());
    for (int c = 0; c < A.cols(); ++c)
        for (const auto& [r, v] : A.column(c)) M.at(r, c) = v;
    return dense_kernel(M);
}

std::optional<DenseMatrix> restrict_operator(const SparseOperator& A, const Subspace& U) {
    if (!A.square() || U.ambient() != A.cols())
        throw validation_error("operator restriction needs a square operator on the ambient");
    DenseMatrix M(U.dim(), U.dim());
    for (int j = 0; j < U.dim(); ++j) {
        const auto coords = U.coordinates(A.apply(U.basis()[size_t(j)]));
        if (!coords) return std::nullopt;
        for (int i = 0; i < U.dim(); ++i) M.at(i, j) = (*coords)[size_t(i)];
    }
    return M;
}

DenseMatrix restrict_bilinear(const std::vector<Rational>& gram_diag, const Subspace& U) {
    if (int(gram_diag.size()) != U.ambient())
        throw validation_error("gram diagonal length mismatch");
    const int d = U.dim();
    DenseMatrix B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Rational acc = 0;
            const Vec& u = U.basis()[size_t(i)];
            const Vec& v = U.basis()[size_t(j)];
            for (int t = 0; t < U.ambient(); ++t)
                if (u[size_t(t)] != 0 && v[size_t(t)] != 0)
                    acc += u[size_t(t)] * v[size_t(t)] * gram_diag[size_t(t)];
            B.at(i, j) = acc;
            B.at(j, i) = acc;
        }
    return B;
}

Subspace form_radical(const DenseMatrix& B) { return dense_kernel(B); }

}  // namespace gfq
