#pragma once

#include <cstdint>
#include <optional>

#include "heckalg/complexes.hpp"

namespace heckalg {

// Normal-ordered monomial in C(g + g*): creations e_i (mask bits, ascending)
// to the left of annihilations e*_j (mask bits, ascending).
using CliffordMono = std::pair<std::uint32_t, std::uint32_t>;

inline int mono_creations(const CliffordMono& m) { return __builtin_popcount(m.first); }
inline int mono_annihilations(const CliffordMono& m) { return __builtin_popcount(m.second); }
// Z-grading: +1 per e*, -1 per e; reduces mod 2 to the Clifford parity.
inline int mono_degree(const CliffordMono& m) { return mono_annihilations(m) - mono_creations(m); }
inline int mono_parity(const CliffordMono& m) {
    return (mono_creations(m) + mono_annihilations(m)) & 1;
}

// Element of the Clifford algebra with relations
//   e_i e_j = -e_j e_i,  e*_i e*_j = -e*_j e*_i,  e_i e*_j + e*_j e_i = delta_ij.
class CliffordElement {
public:
    CliffordElement() = default;
    explicit CliffordElement(int rank) : rank_(rank) {}
    static CliffordElement one(int rank);
    static CliffordElement creation(int rank, int i);        // e_i
    static CliffordElement annihilation(int rank, int i);    // e*_i
    static CliffordElement monomial(int rank, const CliffordMono& m, const Scalar& c);

    int rank() const { return rank_; }
    const std::map<CliffordMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const CliffordMono& m, const Scalar& c);
    CliffordElement plus(const CliffordElement& o) const;
    CliffordElement minus(const CliffordElement& o) const;
    CliffordElement scaled(const Scalar& c) const;
    bool operator==(const CliffordElement& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

private:
    int rank_ = 0;
    std::map<CliffordMono, Scalar> terms_;
};

enum class NormalOrderStrategy { LeftmostFirst, RightmostFirst };

// Normal-ordered product; both reduction strategies must agree (confluence).
CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y,
                                 NormalOrderStrategy strategy = NormalOrderStrategy::LeftmostFirst);

// Faithful action on Lambda(K^rank): e_i as exterior, e*_i as interior
// multiplication; subsets of {0..rank-1} indexed by bitmask.
SparseMatrix clifford_operator_matrix(const CliffordElement& x);
SparseMatrix clifford_mono_matrix(int rank, const CliffordMono& m);

// Inverse of the operator realization (it is a linear isomorphism).
CliffordElement clifford_from_matrix(int rank, const SparseMatrix& op);

// Element of A^opp (x) C(g+g*): A-coordinate vector per monomial. The product
// uses the opposite multiplication on the A factor; the A factor is even, so
// no Koszul signs appear.
struct ACliffordElement {
    int rank = 0;
    std::map<CliffordMono, Vec> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const CliffordMono& m, const Vec& v);
    ACliffordElement plus(const ACliffordElement& o) const;
    ACliffordElement minus(const ACliffordElement& o) const;
    ACliffordElement scaled(const Scalar& c) const;
    bool operator==(const ACliffordElement& o) const { return rank == o.rank && terms == o.terms; }
    bool homogeneous_parity(int* parity_out) const;
};

ACliffordElement ac_multiply(const FinAlgebra& a, const ACliffordElement& x, const ACliffordElement& y);

struct BrstElementReport {
    ACliffordElement matched;        // operator realization equals the wedge differential
    ACliffordElement literal;        // the displayed double-sum expression, verbatim
    ACliffordElement linear_part;    // sum_i rho(e_i) (x) e*_i
    ACliffordElement quadratic_sum;  // sum_{i,j} 1 (x) [e_i,e_j] e*_i e*_j
    bool literal_matches = false;
    std::optional<Scalar> quadratic_normalization;   // gamma with matched = linear + gamma * quadratic_sum
};
BrstElementReport brst_element(const LieAction& act);

struct BrstComplex {
    AlgebraPtr algebra;
    int rank = 0;
    BrstElementReport element;
    std::map<int, std::vector<std::pair<int, CliffordMono>>> basis;   // degree -> (alg idx, mono)
    std::map<int, long> space_dims;
    std::map<int, int> cohomology_dims;
    std::map<int, std::vector<ACliffordElement>> reps;
    GradedAlgebraTable table;
};
// Graded space A^opp (x) C with the supercommutator differential by the BRST
// element; asserts d^2 = 0 on the whole space and computes cohomology with
// its product structure.
BrstComplex build_brst_complex(const LieAction& act);

struct Thm6Report {
    bool pass = false;
    bool dims_match = false;
    bool intertwines = false;
    bool algebra_map = false;
    bool gradings_match = false;
    std::string first_failure;
    std::map<int, int> brst_dims, end_dims;   // cohomology dims per degree
};
// The explicit identification End_A(A (x) Lambda(g)) = A^opp (x) C(g+g*):
// verifies it is a degree-preserving algebra isomorphism intertwining the two
// differentials, and that both sides have equal cohomology dimensions.
Thm6Report theorem6_isomorphism(const LieAction& act);

// The identification itself, one basis element at a time.
HomCochain ac_to_cochain(ComplexPtr ce, const ACliffordElement& u);

}  // namespace heckalg
