#include "gfq/sparse.hpp"

#include <algorithm>
#include <tuple>

namespace gfq {

SparseOperator SparseOperator::identity(const BasisPtr& basis) {
    SparseOperator op(basis, basis, 0);
    for (int i = 0; i < basis->dim(); ++i) op.add_entry(i, i, 1);
    return op;
}

SparseOperator SparseOperator::diagonal(const BasisPtr& basis, const std::vector<Rational>& d,
                                        std::optional<int> parity) {
    if (int(d.size()) != basis->dim()) throw validation_error("diagonal length mismatch");
    SparseOperator op(basis, basis, parity);
    for (int i = 0; i < basis->dim(); ++i)
        if (d[size_t(i)] != 0) op.add_entry(i, i, d[size_t(i)]);
    return op;
}

void SparseOperator::add_entry(int row, int col, const Rational& v) {
    if (v == 0) return;
    if (row < 0 || row >= rows() || col < 0 || col >= cols())
        throw validation_error("sparse entry outside the matrix");
    auto& c = cols_[size_t(col)];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& p, int r) { return p.first < r; });
    if (it != c.end() && it->first == row) {
        it->second += v;
        if (it->second == 0) c.erase(it);
    } else {
        c.insert(it, {row, v});
    }
}

Rational SparseOperator::entry(int row, int col) const {
    const auto& c = cols_[size_t(col)];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& p, int r) { return p.first < r; });
    return (it != c.end() && it->first == row) ? it->second : Rational(0);
}

size_t SparseOperator::nnz() const {
    size_t t = 0;
    for (const auto& c : cols_) t += c.size();
    return t;
}

bool SparseOperator::is_zero() const { return nnz() == 0; }

std::vector<Rational> SparseOperator::apply(const std::vector<Rational>& v) const {
    if (int(v.size()) != cols()) throw validation_error("vector length mismatch in apply");
    std::vector<Rational> out(size_t(rows()), Rational(0));
    for (int c = 0; c < cols(); ++c) {
        if (v[size_t(c)] == 0) continue;
        for (const auto& [r, val] : cols_[size_t(c)]) out[size_t(r)] += val * v[size_t(c)];
    }
    return out;
}

static std::optional<int> combined_parity(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return (*a + *b) % 2;
    return std::nullopt;
}

SparseOperator SparseOperator::compose(const SparseOperator& rhs) const {
    if (domain_ != rhs.codomain_)
        throw validation_error("operator composition over mismatched bases");
    SparseOperator out(rhs.domain_, codomain_, combined_parity(parity_, rhs.parity_));
    std::map<int, Rational> acc;
    for (int c = 0; c < rhs.cols(); ++c) {
        acc.clear();
        for (const auto& [mid, v1] : rhs.cols_[size_t(c)])
            for (const auto& [r, v2] : cols_[size_t(mid)]) acc[r] += v2 * v1;
        auto& outcol = out.cols_[size_t(c)];
        for (auto& [r, v] : acc)
            if (v != 0) outcol.emplace_back(r, std::move(v));
    }
    return out;
}

SparseOperator SparseOperator::add(const SparseOperator& rhs) const {
    if (domain_ != rhs.domain_ || codomain_ != rhs.codomain_)
        throw validation_error("operator addition over mismatched bases");
    std::optional<int> par;
    if (parity_ && rhs.parity_ && *parity_ == *rhs.parity_) par = parity_;
    SparseOperator out(domain_, codomain_, par);
    for (int c = 0; c < cols(); ++c) {
        const auto& x = cols_[size_t(c)];
        const auto& y = rhs.cols_[size_t(c)];
        auto& o = out.cols_[size_t(c)];
        size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                o.push_back(x[i++]);
            } else if (i == x.size() || y[j].first < x[i].first) {
                o.push_back(y[j++]);
            } else {
                Rational v = x[i].second + y[j].second;
                if (v != 0) o.emplace_back(x[i].first, std::move(v));
                ++i, ++j;
            }
        }
    }
    return out;
}

SparseOperator SparseOperator::sub(const SparseOperator& rhs) const {
    return add(rhs.scale(-1));
}

SparseOperator SparseOperator::scale(const Rational& s) const {
    SparseOperator out(domain_, codomain_, parity_);
    if (s == 0) return out;
    for (int c = 0; c < cols(); ++c) {
        auto& o = out.cols_[size_t(c)];
        o.reserve(cols_[size_t(c)].size());
        for (const auto& [r, v] : cols_[size_t(c)]) o.emplace_back(r, v * s);
    }
    return out;
}

SparseOperator SparseOperator::transpose() const {
    SparseOperator out(codomain_, domain_, parity_);
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, v] : cols_[size_t(c)]) out.cols_[size_t(r)].emplace_back(c, v);
    for (auto& col : out.cols_)
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool SparseOperator::equals(const SparseOperator& rhs) const {
    if (domain_ != rhs.domain_ || codomain_ != rhs.codomain_) return false;
    for (int c = 0; c < cols(); ++c)
        if (cols_[size_t(c)] != rhs.cols_[size_t(c)]) return false;
    return true;
}

std::vector<std::tuple<int, int, Rational>> SparseOperator::sorted_triples() const {
    std::vector<std::tuple<int, int, Rational>> out;
    out.reserve(nnz());
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, v] : cols_[size_t(c)]) out.emplace_back(r, c, v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    return out;
}

SparseOperator graded_commutator(const SparseOperator& A, const SparseOperator& B) {
    if (!A.square() || !B.square() || A.domain() != B.domain())
        throw validation_error("graded_commutator needs square operators on one basis");
    if (!A.parity() || !B.parity())
        throw validation_error("graded_commutator needs declared parities");
    const int sign = (*A.parity() * *B.parity()) % 2 ? -1 : 1;
    return A.compose(B).sub(B.compose(A).scale(sign));
}

SparseOperator graded_anticommutator(const SparseOperator& A, const SparseOperator& B) {
    if (!A.square() || !B.square() || A.domain() != B.domain())
        throw validation_error("graded_anticommutator needs square operators on one basis");
    if (!A.parity() || !B.parity())
        throw validation_error("graded_anticommutator needs declared parities");
    const int sign = (*A.parity() * *B.parity()) % 2 ? -1 : 1;
    return A.compose(B).add(B.compose(A).scale(sign));
}

}  // namespace gfq
