#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heckalg/algebra.hpp"

namespace heckalg {

// Grading conventions used throughout:
//   * complexes are homological, d has degree -1;
//   * an endomorphism cochain of degree n has components X_s -> X_{s-n};
//   * the total differential Df = d o f - (-1)^{deg f} f o d has degree +1;
//   * the partial pieces are (D'f)_s = (-1)^{n+1} f_{s-1} o d_s and
//     (D''f)_s = d_{s-n} o f_s, with Df = D'f + D''f.

class ChainComplex {
public:
    ChainComplex() = default;
    // d[k] maps degree lo+k to degree lo+k-1; d[0] may be empty (treated as 0).
    ChainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix> d);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int n) const;
    SparseMatrix diff(int n) const;   // zero matrix outside the stored range
    void validate() const;            // d_n o d_{n+1} = 0, entrywise

    struct Homology {
        int dim = 0;
        std::vector<Vec> representatives;   // canonical coset representatives
        Subspace kernel, image;
    };
    Homology homology(int n) const;   // throws DegreeOutOfRange outside [lo, hi]

private:
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<SparseMatrix> d_;
};

// Matrix over an algebra A: entries are A-coordinate vectors. Used for
// A-linear maps between free modules A (x) F: the map sends 1 (x) f_j to
// sum_l entry(l,j) (x) f'_l.
class AMat {
public:
    AMat() = default;
    AMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, Vec>& entries() const { return entries_; }
    bool has(int r, int c) const { return entries_.count({r, c}) > 0; }
    Vec entry(int r, int c, int alg_dim) const;
    void set(int r, int c, Vec v);
    void add(int r, int c, const Vec& v);

    AMat plus(const AMat& o) const;
    AMat minus(const AMat& o) const;
    AMat scaled(const Scalar& c) const;
    bool is_zero() const { return entries_.empty(); }
    bool operator==(const AMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    static AMat identity(int n, const Vec& unit);

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Vec> entries_;   // no zero vectors stored
};

// (f o g): apply g first. Entry (l,j) = sum_k g(k,j) *_A f(l,k); the product
// order is what makes End_A(A) come out as A^opp.
AMat compose_amat(const FinAlgebra& a, const AMat& f, const AMat& g);

// Complex of free left A-modules X_s = A (x) F_s, s = 0..length, with an
// A-linear differential given fiberwise by an AMat per degree.
class FreeAComplex {
public:
    FreeAComplex() = default;
    FreeAComplex(AlgebraPtr algebra, std::vector<int> fiber_dims, std::vector<AMat> d);

    const FinAlgebra& algebra() const { return *algebra_; }
    AlgebraPtr algebra_ptr() const { return algebra_; }
    int length() const { return static_cast<int>(fiber_dims_.size()) - 1; }
    int fiber_dim(int s) const;
    int total_dim(int s) const { return fiber_dim(s) * algebra_->dim(); }
    const AMat& d(int s) const { return d_[s]; }   // X_s -> X_{s-1}, s >= 1

    // Scalar shadow: basis of X_s ordered as (fiber j, algebra i),
    // flat index j*dimA + i.
    SparseMatrix scalar_diff(int s) const;
    ChainComplex scalar_complex() const;
    void validate() const;   // d^2 = 0 at the AMat level

    FreeAComplex truncated(int new_length) const;

private:
    AlgebraPtr algebra_;
    std::vector<int> fiber_dims_;
    std::vector<AMat> d_;   // d_[0] empty placeholder
};

using ComplexPtr = std::shared_ptr<const FreeAComplex>;

// A-linear map between free complexes, of pure degree n: component at s maps
// src_s -> dst_{s-n}. Chain maps have degree 0, homotopies degree -1,
// endomorphism cochains arbitrary degree.
struct HomCochain {
    ComplexPtr src, dst;
    int degree = 0;
    std::map<int, AMat> comp;   // s -> fiber map; absent means zero there

    const AMat* component(int s) const {
        auto it = comp.find(s);
        return it == comp.end() ? nullptr : &it->second;
    }
    AMat component_or_zero(int s) const;
    bool is_zero() const;
    HomCochain plus(const HomCochain& o) const;
    HomCochain minus(const HomCochain& o) const;
    HomCochain scaled(const Scalar& c) const;
};

HomCochain identity_cochain(ComplexPtr x);
// The differential itself as a degree +1 endomorphism cochain.
HomCochain differential_cochain(ComplexPtr x);
// Deterministic pseudo-random cochain with small integer entries.
HomCochain random_end_cochain(ComplexPtr x, int degree, std::mt19937& rng);
// (f o g), degree adds; components (f o g)_s = f_{s - deg g} o g_s.
HomCochain compose_cochains(const HomCochain& f, const HomCochain& g);
// Total differential Df = d o f - (-1)^{deg f} f o d (components in [0, L]).
HomCochain end_differential(const HomCochain& f);
// Eq-style partial differentials; their sum is end_differential.
std::pair<HomCochain, HomCochain> partial_differentials(const HomCochain& f);
bool cochains_equal(const HomCochain& f, const HomCochain& g);
// Equality restricted to components s in [s_min, s_max].
bool cochains_equal_on(const HomCochain& f, const HomCochain& g, int s_min, int s_max);

// The endomorphism complex of a free complex on the window s <= L.
//
// Cocycles live on the window; coboundaries are taken from cochains over the
// longer carrier complex (when one is supplied), restricted back to the
// window. Without this widening, classes whose bounding homotopies extend
// past the top of the window would be reported as spurious cohomology: the
// paper's Y^n is an infinite product over component degrees, and the extra
// coboundary columns are the finite shadow of that product.
class EndWindow {
public:
    // carrier: the complex, possibly longer than the window; base_length:
    // the window L (defaults to the full carrier, which is the right choice
    // for finite complexes).
    explicit EndWindow(ComplexPtr carrier, int base_length = -1);
    // Keeps the given base object (so cochains built on it stay composable)
    // and widens coboundaries through the carrier, which must extend it.
    EndWindow(ComplexPtr base, ComplexPtr carrier);

    const FreeAComplex& complex() const { return *base_; }
    ComplexPtr complex_ptr() const { return base_; }
    ComplexPtr carrier_ptr() const { return carrier_; }
    int window() const { return L_; }

    // Valid component degrees s for a window cochain of total degree n.
    std::vector<int> component_range(int n) const;
    long total_dim(int n) const;

    Vec flatten(const HomCochain& f) const;
    HomCochain unflatten(int n, const Vec& v) const;
    SparseMatrix differential_matrix(int n) const;   // C^n -> C^{n+1} on the window

    // Columns: degree-(n-1) cochains over the carrier that touch the window;
    // rows: the window C^n layout. Its column space is the coboundary space.
    SparseMatrix coboundary_matrix(int n) const;

    struct Cohomology {
        int dim = 0;
        std::vector<Vec> rep_vecs;
        std::vector<HomCochain> reps;
        Subspace kernel, image;
        CosetReducer reducer;
    };
    const Cohomology& cohomology(int n) const;

    // Class coordinates of a closed degree-n cochain; throws WindowUnderflow
    // when the cochain misses needed components, ValidationError if not closed.
    Vec class_coordinates(const HomCochain& f) const;

private:
    ComplexPtr carrier_;
    ComplexPtr base_;
    int L_;
    mutable std::map<int, Cohomology> cache_;
    mutable std::map<int, SparseMatrix> dmat_cache_;
};

// Dimensions and structure constants of a graded algebra on chosen
// representatives; products stored for pairs inside the degree range.
struct GradedAlgebraTable {
    int nmin = 0, nmax = 0;
    std::map<int, int> dims;
    // products[{n,m}][i][j] = coordinates of [rep_n_i o rep_m_j] in degree n+m
    std::map<std::pair<int, int>, std::vector<std::vector<Vec>>> products;
    std::string convention = "composition";

    GradedAlgebraTable opposite() const;
    bool operator==(const GradedAlgebraTable& o) const {
        return nmin == o.nmin && nmax == o.nmax && dims == o.dims && products == o.products;
    }
};

struct CohomologyAlgebra {
    GradedAlgebraTable table;
    std::map<int, std::vector<HomCochain>> reps;
};

struct CohomologyAlgebraOptions {
    int shift_checks = 1;       // representative-independence checks per degree pair
    unsigned int seed = 12345;  // deterministic perturbation source
};

// Theorem-1 style product table on H^*(End): canonical representatives and
// products reduced modulo coboundaries, with a representative-independence
// assertion via random coboundary shifts.
CohomologyAlgebra cohomology_algebra(const EndWindow& w, int nmin, int nmax,
                                     const CohomologyAlgebraOptions& opts = {});

struct TransportReport {
    bool pass = false;
    bool dims_match = false;
    bool invertible = false;
    bool multiplicative = false;
    std::string detail;
};

// Theorem-2 transport: checks Eq.(12) data exactly, then verifies that
// f |-> F o f o F' induces a degree-preserving algebra isomorphism between
// the two cohomology tables.
TransportReport chain_map_transport(const EndWindow& wx, const EndWindow& wy, const HomCochain& F,
                                    const HomCochain& Fp, const HomCochain& hx, const HomCochain& hy,
                                    int nmin, int nmax);

}  // namespace heckalg
