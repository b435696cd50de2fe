#pragma once

#include <map>
#include <vector>

#include "gfq/check.hpp"
#include "gfq/linalg.hpp"
#include "gfq/operators.hpp"

namespace gfq {

// per-orbital particle totals of a state; the diagonal gl weight as integers
std::vector<int> orbital_occupation(const ModeLayout& layout, const FockState& s);

// Spin-highest block of a 2-spin sector: Ker S+ intersected with the
// S0 = b/2 eigenspace. Row-reduced over weight classes, so every basis row
// is supported on states of a single diagonal gl weight.
Subspace spin_top_block(OperatorAlgebra& ops, int N, int b);

struct SpinBlock {
    LabelPair labels;
    int N = 0;
    Subspace space;
};

// all blocks of the sector, b running over N, N-2, ..., down to 0 or 1;
// the sector decomposes as the direct sum of block x spin-multiplet pieces
std::vector<SpinBlock> spin_isotypic_blocks(OperatorAlgebra& ops, int N);

// Ker Q- intersected with a weight-homogeneous subspace of sector N.
// For N < 2 the annihilator is empty and the whole space is returned.
Subspace kernel_qminus_on(OperatorAlgebra& ops, int N, const Subspace& block);

// generator families as memoized sector operators
std::vector<const SparseOperator*> gl_generators(OperatorAlgebra& ops, int N);
std::vector<const SparseOperator*> osp_generators(OperatorAlgebra& ops, int N);
// raising sets: E^a_b with a < b; sigma^a_b whose weight has positive height
std::vector<const SparseOperator*> gl_raising(OperatorAlgebra& ops, int N);
std::vector<const SparseOperator*> osp_raising(OperatorAlgebra& ops, int N);
std::vector<const SparseOperator*> osp_lowering(OperatorAlgebra& ops, int N);

// joint kernel of a list of operators restricted to U (ambient coordinates)
Subspace joint_kernel_on(const std::vector<const SparseOperator*>& gens, const Subspace& U);

// vectors of U killed by every raising operator
Subspace singular_vectors(const std::vector<const SparseOperator*>& raising, const Subspace& U);

// smallest subspace containing the seed and invariant under the generators
Subspace cyclic_span(const std::vector<const SparseOperator*>& gens, const Subspace& seed);

// joint eigenspace partition of U under diagonal operators; throws if an
// operator is not diagonal in the state basis or U is not invariant
std::map<std::vector<Rational>, Subspace> weight_spaces(
    const Subspace& U, const std::vector<const SparseOperator*>& cartan);

// partition of a weight-homogeneous subspace by state weight
std::map<Weight, Subspace> weight_spaces_graded(const SectorBasis& basis, const Subspace& U,
                                                WeightBasis kind);

// weight of a single RREF row (all support states agree by construction)
Weight row_weight(const SectorBasis& basis, const Vec& row, WeightBasis kind);

// states of the block with every particle in a bosonic orbital: the minimal
// Z-graded component, seed of the cyclic generation property
Subspace minimal_graded_component(OperatorAlgebra& ops, int N, const Subspace& block);

struct ComponentReport {
    int c = 0;
    Weight weight{WeightBasis::OSP, {}};
    int dim = 0;
    Rational qbar;     // quasi-spin minimal weight of the component
    Rational casimir;  // osp Casimir eigenvalue
    std::string status;  // "irreducible" | "exceptional-indecomposable" | "absorbed"
};

struct BranchingReport {
    int m = 0, n = 0, a = 0, b = 0, N = 0;
    int block_dim = 0;
    bool exceptional = false;
    std::vector<ComponentReport> components;
    CheckList checks;
};

// Full branching pipeline for the block (a,b): builds the chain of blocks
// (c,b) for c = 0..a, extracts each new component as Ker Q-, and verifies
// scalar Casimir action, orthogonal decomposition, Q+ injectivity and Q-
// surjectivity, the quasi-spin annihilating polynomial, and per-component
// irreducibility certificates. The m = n spin-singlet chain is verified
// against its predicted degeneracies instead of the generic expectations.
BranchingReport verify_branching(OperatorAlgebra& ops, const LabelPair& labels);

struct ExceptionalReport {
    int n = 0;
    int block_dim = 0;
    std::vector<int> chain_dims;  // descending, e.g. 32, 31, 1, 0
    std::vector<ComponentReport> factors;  // top factor first
    CheckList checks;
};

// Composition series of the m = n spin-singlet block (1,0) at N = 2:
// builds the maximal submodule as the cyclic span of the explicit highest
// weight vector, locates the trivial submodule, and certifies the length-3
// chain together with the nilpotent Casimir action.
ExceptionalReport exceptional_composition_series(OperatorAlgebra& ops);

}  // namespace gfq
