#pragma once

#include "gfq/check.hpp"
#include "gfq/operators.hpp"

namespace gfq {

// Exact matrix-identity suites over one Fock sector. Each identity family is
// summarized as one CheckResult; a failing family records the first offending
// index tuple in its detail. Cross-sector identities (ladder actions,
// quasi-spin brackets) build the neighbouring sectors they need; compositions
// that would pass below particle number zero are the zero map and drop out.

// ladder relations: creators/annihilators obey the graded oscillator algebra
CheckList check_mode_relations(OperatorAlgebra& ops, int N);

// [E^a_b, E^c_d] closure of the single-index generators
CheckList check_gl_relations(OperatorAlgebra& ops, int N);

// brackets of E^a_b with single creators and annihilators
CheckList check_gl_action_on_modes(OperatorAlgebra& ops, int N);

// four-term closure of the lower-index orthosymplectic generators
CheckList check_osp_closure(OperatorAlgebra& ops, int N);

// structural identities tying sigma, T, E and the metric together, the
// graded antisymmetry demonstration for the uncorrected variant, the Cartan
// differences, and (odd m) the vanishing middle generator
CheckList check_sigma_structure(OperatorAlgebra& ops, int N);

// closure of the doubled-index generators and their sums (2-spin)
CheckList check_doubled_relations(OperatorAlgebra& ops, int N);

// spin and quasi-spin sl(2) triples: closure, the four part-splits, pairwise
// commutation, and centralizing properties (2-spin)
CheckList check_spin_quasispin(OperatorAlgebra& ops, int N);

// difference of the two quadratic casimirs against the closed form in the
// number operator and Q^2; casimirs commute with their generators (2-spin)
CheckList check_casimir_identity(OperatorAlgebra& ops, int N);

// form-adjoints of E, sigma and (2-spin) the sl(2) families
CheckList check_adjoints(OperatorAlgebra& ops, int N);

// commutators of the symmetric pair operators T_{ab} land in the span of the
// sigma matrices. Solves one membership problem per pair, so meant for small
// sectors; pairs are drawn from a fixed set of representative slots.
CheckList check_pair_span(OperatorAlgebra& ops, int N);

// every suite above that applies to the context's spin count, minus
// check_pair_span (call that separately on small sectors)
CheckList relation_suite(OperatorAlgebra& ops, int N);

// Weyl vector against the half graded sum over the positive roots
CheckList check_rho_roots(const AlgebraSpec& spec);

}  // namespace gfq
