#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gfq/algebra_spec.hpp"
#include "gfq/errors.hpp"
#include "gfq/rational.hpp"

namespace gfq {

// Default cap on sector dimension; exceeding it raises cap_exceeded.
inline constexpr std::uint64_t default_dim_cap = 50000;

// Global mode order: orbital-major, spin-minor; fermionic orbitals (a <= m)
// come before bosonic ones because orbitals are numbered that way. For spins
// slots, spin index 0 is "+", 1 is "-".
struct ModeLayout {
    AlgebraSpec spec;
    int spins = 1;  // 1 or 2

    int mode_count() const { return spec.dim_gl() * spins; }
    int mode(int orbital, int spin) const {
        if (orbital < 1 || orbital > spec.dim_gl())
            throw validation_error("orbital out of range");
        if (spin < 0 || spin >= spins) throw validation_error("spin slot out of range");
        return (orbital - 1) * spins + spin;
    }
    int orbital_of(int mode) const { return mode / spins + 1; }
    int spin_of(int mode) const { return mode % spins; }
    bool fermionic(int mode) const { return orbital_of(mode) <= spec.m; }
};

// Occupation-monomial basis state: the unnormalized product of creation
// operators in global mode order applied to the vacuum. Fermionic entries are
// 0/1; bosonic entries are non-negative counts.
struct FockState {
    std::vector<std::int16_t> occ;

    int particle_number() const {
        int s = 0;
        for (auto o : occ) s += o;
        return s;
    }
    bool operator==(const FockState& o) const { return occ == o.occ; }
};

struct FockStateHash {
    size_t operator()(const FockState& s) const {
        size_t h = 1469598103934665603ull;
        for (auto v : s.occ) {
            h ^= size_t(std::uint16_t(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Closed-form sector dimension: sum_j C(F,j) * C(B+N-j-1, N-j) over fermionic
// occupancy j, F/B the fermionic/bosonic mode counts.
std::uint64_t sector_dimension(const AlgebraSpec& spec, int spins, int N);

struct SectorBasis {
    ModeLayout layout;
    int N = 0;
    std::vector<FockState> states;  // lexicographic in the occupation vector
    std::unordered_map<FockState, int, FockStateHash> index;

    int dim() const { return int(states.size()); }
    int find(const FockState& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }
};

// Enumerates the N-particle sector. Throws cap_exceeded (with the offending
// dimension) when the sector is larger than dim_cap.
std::shared_ptr<const SectorBasis> enumerate_sector(const AlgebraSpec& spec, int spins, int N,
                                                    std::uint64_t dim_cap = default_dim_cap);

// Result of applying a single ladder operator to a basis state: an integer
// coefficient and the image state, or nothing when the state is annihilated.
struct SignedState {
    std::int64_t coeff = 0;
    FockState state;
};

// c†_mode on a monomial: fermionic modes pick up (-1)^(occupied fermionic
// modes before this one); bosonic modes cross the whole fermionic block,
// giving (-1)^(total fermionic occupancy). Returns nothing when a fermionic
// mode is already filled.
std::optional<SignedState> create(const ModeLayout& layout, const FockState& s, int mode);

// c_mode on a monomial; same crossing signs, and a bosonic mode contributes
// its occupation (before removal) as a factor.
std::optional<SignedState> annihilate(const ModeLayout& layout, const FockState& s, int mode);

// Diagonal of the invariant form on the monomial basis:
// (-1)^(nB(nB-1)/2) * prod_q oq!  with nB the bosonic occupancy.
Rational gram_diagonal(const ModeLayout& layout, const FockState& s);

// grade of the state as a vector: bosonic occupancy mod 2
int state_parity(const ModeLayout& layout, const FockState& s);

// gl weight: occupation per orbital, summed over spin slots. length m+n.
Weight gl_weight_of_state(const ModeLayout& layout, const FockState& s);

// OSP weight: eps_i = occ(i) - occ(bar i) for i <= h, delta_mu likewise on
// the bosonic side. length h+k.
Weight osp_weight_of_state(const ModeLayout& layout, const FockState& s);

std::string state_str(const FockState& s);

}  // namespace gfq
