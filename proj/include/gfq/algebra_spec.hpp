#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfq/errors.hpp"
#include "gfq/rational.hpp"

namespace gfq {

// Index data for the orthosymplectic subalgebra of gl(m|n) realized on graded
// fermions: m orbitals carrying fermion statistics (grade 0) and n = 2k
// orbitals carrying boson statistics (grade 1), n even, n > 2, 1 <= m <= n.
//
// Orbital indices are 1-based, a in 1..m+n. The conjugation map bar() pairs
// index a with its metric partner; the fermionic side reflects within 1..m,
// the bosonic side within m+1..m+n. xi() are the metric signs: +1 on the
// fermionic side, (-1)^mu on the bosonic side (mu = a - m).
struct AlgebraSpec {
    int m = 0;
    int n = 0;

    static AlgebraSpec make(int m, int n);

    int h() const { return m / 2; }  // rank of the o(m) factor
    int k() const { return n / 2; }  // rank of the sp(n) factor
    int dim_gl() const { return m + n; }
    bool m_odd() const { return m % 2 != 0; }

    // grade: 0 for a <= m, 1 for a > m
    int parity(int a) const {
        check_index(a);
        return a <= m ? 0 : 1;
    }

    int bar(int a) const {
        check_index(a);
        return a <= m ? m + 1 - a : m + (n + 1 - (a - m));
    }

    int xi(int a) const {
        check_index(a);
        if (a <= m) return 1;
        return ((a - m) % 2 == 0) ? 1 : -1;
    }

    // g_{ab} = xi_a delta_{a, bar b}
    int metric_lower(int a, int b) const { return a == bar(b) ? xi(a) : 0; }
    // g^{ab} = xi_b delta_{a, bar b}
    int metric_upper(int a, int b) const { return a == bar(b) ? xi(b) : 0; }

    bool operator==(const AlgebraSpec& o) const { return m == o.m && n == o.n; }

  private:
    void check_index(int a) const {
        if (a < 1 || a > m + n)
            throw validation_error("orbital index " + std::to_string(a) +
                                   " outside 1.." + std::to_string(m + n));
    }
};

// Weights live in one of two coordinate systems:
//   GL:  m+n coordinates, eigenvalues of the gl Cartan E^a_a;
//   OSP: h+k coordinates (eps_1..eps_h | delta_1..delta_k), eigenvalues of
//        the orthosymplectic Cartan sigma^a_a with a = 1..h, m+1..m+k.
enum class WeightBasis { GL, OSP };

struct Weight {
    WeightBasis basis = WeightBasis::OSP;
    std::vector<Rational> coords;

    static Weight gl(std::vector<Rational> c) { return {WeightBasis::GL, std::move(c)}; }
    static Weight osp(std::vector<Rational> c) { return {WeightBasis::OSP, std::move(c)}; }
    static Weight zero_osp(const AlgebraSpec& spec) {
        return osp(std::vector<Rational>(spec.h() + spec.k(), Rational(0)));
    }

    bool operator==(const Weight& o) const { return basis == o.basis && coords == o.coords; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // lexicographic on coordinates; mixed bases refuse to compare
    bool operator<(const Weight& o) const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(const Rational& s) const;

    std::string str() const;  // "eps|delta" for OSP, flat list for GL
};

// Two-column block label: a doubly-occupied columns, b singly-occupied,
// particle number N = 2a + b, spin s = b/2.
struct LabelPair {
    int a = 0;
    int b = 0;
    int particle_number() const { return 2 * a + b; }
};

AlgebraSpec make_spec(int m, int n);

// Positive roots in OSP coordinates: first the even set (o(m) then sp(n)
// roots), then the odd set delta_mu + eps_i expanded through eps_{bar i} =
// -eps_i (and eps_{h+1} = 0 for odd m, which contributes bare delta_mu).
struct RootSystem {
    std::vector<Weight> even;
    std::vector<Weight> odd;
};
RootSystem positive_roots(const AlgebraSpec& spec);

// rho = 1/2 sum_i (m-2i) eps_i + 1/2 sum_mu (n-m+2-2mu) delta_mu. Equals the
// half graded sum (even minus odd) over positive_roots; a test pins that.
Weight rho(const AlgebraSpec& spec);

// Invariant bilinear form on OSP weights: (eps_i,eps_j)=delta_ij,
// (delta_mu,delta_nu)=-delta_munu, cross terms zero.
Rational weight_form(const Weight& x, const Weight& y, const AlgebraSpec& spec);

// (lambda, lambda + 2 rho) -- the quadratic Casimir eigenvalue on the
// irreducible with OSP highest weight lambda.
Rational casimir_eigenvalue_osp(const Weight& lambda, const AlgebraSpec& spec);

// lambda_{a,b} = (0..0 | a+b, a, 0..0)
Weight lambda_ab(const LabelPair& p, const AlgebraSpec& spec);

// Closed form -(a+b)(a+b+n-m) - a(a+n-m-2) for the eigenvalue at lambda_{a,b}.
Rational casimir_eigenvalue_labels(const LabelPair& p, const AlgebraSpec& spec);

// Candidate minimal-component weight in the positivity scan; lambda has
// eps-part (2 x c, 1 x d, 0..) and delta-part (e, f, 0..).
struct ScanWeight {
    int c = 0, d = 0, e = 0, f = 0;
    bool operator==(const ScanWeight& o) const {
        return c == o.c && d == o.d && e == o.e && f == o.f;
    }
    bool operator<(const ScanWeight& o) const {
        if (c != o.c) return c < o.c;
        if (d != o.d) return d < o.d;
        if (e != o.e) return e < o.e;
        return f < o.f;
    }
};

// The two printed closed forms for the eigenvalue gap
// chi_lambda - chi_{lambda_{a,b}}; they must agree exactly (checked).
Rational casimir_gap(const ScanWeight& w, const LabelPair& p, const AlgebraSpec& spec);
std::pair<Rational, Rational> casimir_gap_forms(const ScanWeight& w, const LabelPair& p,
                                                const AlgebraSpec& spec);

// OSP weight with eps-part (2_c, 1_d, 0...) and delta-part (e, f, 0...).
Weight scan_weight_to_osp(const ScanWeight& w, const AlgebraSpec& spec);

// Enumerate the scan domain for block (a,b): candidate upper components
// (a',b',c',d') constrained by particle count, the spin triangle and the
// two-column shape, contracted to (c,d,e,f) tuples. Deduplicated, sorted.
std::vector<ScanWeight> scan_candidates(const LabelPair& p, const AlgebraSpec& spec);

// gl(m|n) highest weight of the two-column block (a,b) on the 2-spin sector:
//   (2_a, 1_b, 0.. | 0..)            a+b <= m
//   (2_a, 1_{m-a}  | a+b-m, 0..)     a <= m < a+b
//   (2_m           | a+b-m, a-m, 0..)  a > m
Weight gl_highest_weight(const LabelPair& p, const AlgebraSpec& spec);

// Predicted decomposition of block (a,b) under the orthosymplectic action.
struct BranchingComponent {
    int c = 0;             // component label (c, b)
    Weight weight;         // lambda_{c,b}
    bool irreducible = true;
    // set on the c=1 component when the block is exceptional: it is then an
    // indecomposable with a length-3 composition series
    bool exceptional = false;
    // set on the c=0 component when it is absorbed into the exceptional
    // indecomposable rather than split off
    bool absorbed = false;
};

struct BranchingPrediction {
    LabelPair labels;
    std::vector<BranchingComponent> components;  // c = 0..a
    bool exceptional = false;                    // m == n && b == 0 && a >= 1
    // composition factors of the exceptional indecomposable, (weight, mult)
    std::vector<std::pair<Weight, int>> composition_factors;
};

BranchingPrediction predict_branching(const LabelPair& p, const AlgebraSpec& spec);

// "e1,..,eh|d1,..,dk" rendering and parsing of OSP weights (left side empty
// when h = 0).
std::string osp_weight_str(const Weight& w, const AlgebraSpec& spec);
Weight parse_osp_weight(const std::string& text, const AlgebraSpec& spec);

}  // namespace gfq
