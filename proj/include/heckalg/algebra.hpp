#pragma once

#include <memory>
#include <string>
#include <vector>

#include "heckalg/linalg.hpp"

namespace heckalg {

// Finite-dimensional unital associative algebra over Q, given by structure
// constants: e_i e_j = sum_k table[i][j][k] e_k. Associativity and the unit
// axiom are checked on construction.
class FinAlgebra {
public:
    FinAlgebra() = default;
    FinAlgebra(int dim, std::vector<std::string> labels, Vec unit,
               std::vector<std::vector<Vec>> table);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const Vec& basis_product(int i, int j) const { return table_[i][j]; }

    Vec multiply(const Vec& x, const Vec& y) const;
    SparseMatrix left_mult(const Vec& x) const;    // y -> x*y
    SparseMatrix right_mult(const Vec& x) const;   // y -> y*x
    bool is_commutative() const;

    FinAlgebra opposite() const;

private:
    void validate() const;

    int dim_ = 0;
    std::vector<std::string> labels_;
    Vec unit_;
    std::vector<std::vector<Vec>> table_;
};

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

// Subalgebra B of A with an augmentation eps: B -> K. Stored as the inclusion
// (columns = images of the B-basis in A-coordinates) plus the eps values on
// that basis. Closure, unit membership and multiplicativity of eps are
// checked; the structure constants of B and the canonical RREF basis of
// ker(eps) are derived here once and reused by every complex builder.
class AugmentedSubalgebra {
public:
    AugmentedSubalgebra() = default;
    AugmentedSubalgebra(AlgebraPtr parent, std::vector<Vec> inclusion_cols, Vec eps);

    const FinAlgebra& parent() const { return *parent_; }
    AlgebraPtr parent_ptr() const { return parent_; }
    const FinAlgebra& algebra() const { return *b_algebra_; }   // B as its own FinAlgebra
    AlgebraPtr algebra_ptr() const { return b_algebra_; }

    int dim() const { return static_cast<int>(inclusion_.size()); }
    const std::vector<Vec>& inclusion() const { return inclusion_; }
    const Vec& eps() const { return eps_; }
    const Vec& unit_coords() const { return unit_coords_; }     // 1_A in B-coordinates

    // Canonical basis of ker(eps) in B-coordinates / embedded in A.
    int aug_kernel_dim() const { return static_cast<int>(kernel_b_.size()); }
    const std::vector<Vec>& aug_kernel_basis_b() const { return kernel_b_; }
    const std::vector<Vec>& aug_kernel_basis_a() const { return kernel_a_; }

    Vec embed(const Vec& b_coords) const;                       // B-coords -> A-coords
    std::optional<Vec> express(const Vec& a_coords) const;      // A-coords -> B-coords
    Scalar eps_value(const Vec& b_coords) const;

    // kernel-basis products expanded over the kernel basis: w_i w_j in ker(eps)
    const Vec& kernel_product(int i, int j) const { return kernel_table_[i][j]; }

private:
    AlgebraPtr parent_;
    std::vector<Vec> inclusion_;
    Vec eps_;
    AlgebraPtr b_algebra_;
    Vec unit_coords_;
    std::vector<Vec> kernel_b_, kernel_a_;
    std::vector<std::vector<Vec>> kernel_table_;
    Subspace span_;   // image of inclusion in A
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    // bracket[i][j] = coordinates of [e_i, e_j]
    LieAlgebra(int dim, std::vector<std::vector<Vec>> bracket);

    int dim() const { return dim_; }
    const Vec& bracket_basis(int i, int j) const { return bracket_[i][j]; }
    Vec bracket(const Vec& x, const Vec& y) const;

private:
    void validate() const;
    int dim_ = 0;
    std::vector<std::vector<Vec>> bracket_;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

// A Lie algebra mapped into an associative algebra: rho([x,y]) must equal
// rho(x)rho(y) - rho(y)rho(x).
class LieAction {
public:
    LieAction() = default;
    LieAction(LiePtr lie, AlgebraPtr target, std::vector<Vec> rho);

    const LieAlgebra& lie() const { return *lie_; }
    const FinAlgebra& target() const { return *target_; }
    AlgebraPtr target_ptr() const { return target_; }
    const std::vector<Vec>& rho() const { return rho_; }
    Vec rho_of(const Vec& x) const;

private:
    LiePtr lie_;
    AlgebraPtr target_;
    std::vector<Vec> rho_;
};

// Left module over a FinAlgebra as one action matrix per basis element.
class LeftModule {
public:
    LeftModule() = default;
    LeftModule(AlgebraPtr algebra, int dim, std::vector<SparseMatrix> action,
               std::string name = "");

    const FinAlgebra& algebra() const { return *algebra_; }
    AlgebraPtr algebra_ptr() const { return algebra_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const SparseMatrix& action_basis(int i) const { return action_[i]; }
    SparseMatrix action_of(const Vec& x) const;
    Vec act(const Vec& x, const Vec& v) const;

private:
    void validate() const;
    AlgebraPtr algebra_;
    int dim_ = 0;
    std::vector<SparseMatrix> action_;
    std::string name_;
};

FinAlgebra opposite(const FinAlgebra& a);

// Smallest subspace containing seed and closed under left multiplication.
Subspace left_ideal(const FinAlgebra& a, const Subspace& seed);

// Smallest unital subalgebra containing gens.
Subspace generated_subalgebra(const FinAlgebra& a, const Subspace& gens);

// A/J for J the left ideal generated by ker(eps), with its left A-action and
// the projection data A -> A/J.
struct InducedModule {
    LeftModule module;            // over the parent algebra
    Subspace ideal;               // J inside A
    std::vector<Vec> reps;        // canonical coset representatives in A
    CosetReducer reducer;         // A-coords -> module coords
    Vec project(const Vec& a_coords) const;
};
InducedModule induced_module(AlgebraPtr a, const AugmentedSubalgebra& b);

// {v : b v = eps(b) v for all b in B} inside a module over B's parent.
Subspace invariants(const LeftModule& v, const AugmentedSubalgebra& b);

// The same module with the action restricted along the inclusion of B.
LeftModule restrict_to_subalgebra(const LeftModule& v, const AugmentedSubalgebra& b);

// A acting on itself from the left.
LeftModule regular_module(AlgebraPtr a);
// A as a right module over itself, stored as a left module over opposite(A).
LeftModule regular_right_module(AlgebraPtr a);

}  // namespace heckalg
