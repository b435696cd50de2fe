#include "gfq/fock.hpp"

#include <algorithm>
#include <sstream>

namespace gfq {

static std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    Integer acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc *= (n - r + i);
        acc /= i;
    }
    if (acc > Integer(UINT64_MAX)) throw cap_exceeded("sector dimension overflows", UINT64_MAX);
    return acc.convert_to<std::uint64_t>();
}

std::uint64_t sector_dimension(const AlgebraSpec& spec, int spins, int N) {
    if (spins != 1 && spins != 2) throw validation_error("spins must be 1 or 2");
    if (N < 0) throw validation_error("particle number must be non-negative");
    const std::uint64_t F = std::uint64_t(spec.m) * spins;
    const std::uint64_t B = std::uint64_t(spec.n) * spins;
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(F, N); ++j) {
        const std::uint64_t r = N - j;  // bosonic multiset count C(B+r-1, r)
        total += binom(F, j) * binom(B + r - 1, r);
    }
    return total;
}

std::shared_ptr<const SectorBasis> enumerate_sector(const AlgebraSpec& spec, int spins, int N,
                                                    std::uint64_t dim_cap) {
    const std::uint64_t dim = sector_dimension(spec, spins, N);
    if (dim > dim_cap)
        throw cap_exceeded("sector dimension " + std::to_string(dim) + " exceeds cap " +
                              std::to_string(dim_cap),
                          dim);
    auto basis = std::make_shared<SectorBasis>();
    basis->layout = ModeLayout{spec, spins};
    basis->N = N;
    const int M = basis->layout.mode_count();
    const int Fm = spec.m * spins;  // fermionic modes are 0..Fm-1
    FockState cur;
    cur.occ.assign(size_t(M), 0);
    // depth-first fill in mode order keeps states lexicographic
    auto rec = [&](auto&& self, int mode, int left) -> void {
        if (mode == M) {
            if (left == 0) basis->states.push_back(cur);
            return;
        }
        const int cap = (mode < Fm) ? std::min(left, 1) : left;
        for (int o = 0; o <= cap; ++o) {
            cur.occ[size_t(mode)] = std::int16_t(o);
            self(self, mode + 1, left - o);
        }
        cur.occ[size_t(mode)] = 0;
    };
    rec(rec, 0, N);
    std::sort(basis->states.begin(), basis->states.end(),
              [](const FockState& a, const FockState& b) { return a.occ < b.occ; });
    for (int i = 0; i < basis->dim(); ++i) basis->index.emplace(basis->states[size_t(i)], i);
    if (std::uint64_t(basis->dim()) != dim)
        throw std::logic_error("sector enumeration disagrees with the closed-form count");
    return basis;
}

// crossing sign for inserting/removing an operator at `mode`: every occupied
// fermionic mode that the operator passes over in the canonical monomial
// contributes -1 (fermionic modes all precede bosonic ones in global order;
// boson-boson crossings are free)
static int crossing_sign(const ModeLayout& layout, const FockState& s, int mode) {
    const int Fm = layout.spec.m * layout.spins;
    int count = 0;
    const int limit = layout.fermionic(mode) ? mode : Fm;
    for (int p = 0; p < limit; ++p) count += s.occ[size_t(p)];
    return (count % 2 == 0) ? 1 : -1;
}

std::optional<SignedState> create(const ModeLayout& layout, const FockState& s, int mode) {
    if (mode < 0 || mode >= layout.mode_count()) throw validation_error("mode out of range");
    SignedState out;
    out.state = s;
    if (layout.fermionic(mode)) {
        if (s.occ[size_t(mode)] != 0) return std::nullopt;
        out.state.occ[size_t(mode)] = 1;
        out.coeff = crossing_sign(layout, s, mode);
    } else {
        out.state.occ[size_t(mode)] += 1;
        out.coeff = crossing_sign(layout, s, mode);
    }
    return out;
}

std::optional<SignedState> annihilate(const ModeLayout& layout, const FockState& s, int mode) {
    if (mode < 0 || mode >= layout.mode_count()) throw validation_error("mode out of range");
    if (s.occ[size_t(mode)] == 0) return std::nullopt;
    SignedState out;
    out.state = s;
    out.state.occ[size_t(mode)] -= 1;
    out.coeff = crossing_sign(layout, s, mode);
    if (!layout.fermionic(mode)) out.coeff *= s.occ[size_t(mode)];
    return out;
}

Rational gram_diagonal(const ModeLayout& layout, const FockState& s) {
    const int Fm = layout.spec.m * layout.spins;
    long nB = 0;
    Rational val = 1;
    for (int p = Fm; p < layout.mode_count(); ++p) {
        const int o = s.occ[size_t(p)];
        nB += o;
        for (int i = 2; i <= o; ++i) val *= i;
    }
    if (((nB * (nB - 1) / 2) % 2) != 0) val = -val;
    return val;
}

int state_parity(const ModeLayout& layout, const FockState& s) {
    const int Fm = layout.spec.m * layout.spins;
    int nB = 0;
    for (int p = Fm; p < layout.mode_count(); ++p) nB += s.occ[size_t(p)];
    return nB % 2;
}

Weight gl_weight_of_state(const ModeLayout& layout, const FockState& s) {
    std::vector<Rational> w(size_t(layout.spec.dim_gl()), Rational(0));
    for (int mode = 0; mode < layout.mode_count(); ++mode)
        w[size_t(layout.orbital_of(mode) - 1)] += int(s.occ[size_t(mode)]);
    return Weight::gl(std::move(w));
}

Weight osp_weight_of_state(const ModeLayout& layout, const FockState& s) {
    const auto& spec = layout.spec;
    const Weight gl = gl_weight_of_state(layout, s);
    Weight w = Weight::zero_osp(spec);
    for (int i = 1; i <= spec.h(); ++i)
        w.coords[size_t(i - 1)] = gl.coords[size_t(i - 1)] - gl.coords[size_t(spec.bar(i) - 1)];
    for (int mu = 1; mu <= spec.k(); ++mu) {
        const int a = spec.m + mu;
        w.coords[size_t(spec.h() + mu - 1)] =
            gl.coords[size_t(a - 1)] - gl.coords[size_t(spec.bar(a) - 1)];
    }
    return w;
}

std::string state_str(const FockState& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.occ.size(); ++i) {
        if (i) os << " ";
        os << int(s.occ[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace gfq
