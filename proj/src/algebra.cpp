#include "heckalg/algebra.hpp"

#include <algorithm>

#include "heckalg/errors.hpp"

namespace heckalg {

FinAlgebra::FinAlgebra(int dim, std::vector<std::string> labels, Vec unit,
                       std::vector<std::vector<Vec>> table)
    : dim_(dim), labels_(std::move(labels)), unit_(std::move(unit)), table_(std::move(table)) {
    if (dim_ <= 0) throw ValidationError("algebra-dim", "dimension must be positive");
    if (labels_.empty()) {
        for (int i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != dim_ || static_cast<int>(unit_.size()) != dim_ ||
        static_cast<int>(table_.size()) != dim_)
        throw ValidationError("algebra-shape", "inconsistent dimensions in algebra data");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != dim_) throw ValidationError("algebra-shape", "bad table row");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_) throw ValidationError("algebra-shape", "bad product vector");
    }
    validate();
}

void FinAlgebra::validate() const {
    // unit axiom on the basis
    for (int i = 0; i < dim_; ++i) {
        Vec e = unit_vec(dim_, i);
        if (multiply(unit_, e) != e)
            throw ValidationError("unit-left", "unit*e_" + std::to_string(i) + " != e_" + std::to_string(i));
        if (multiply(e, unit_) != e)
            throw ValidationError("unit-right", "e_" + std::to_string(i) + "*unit != e_" + std::to_string(i));
    }
    // associativity on all basis triples
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                Vec lhs = multiply(table_[i][j], unit_vec(dim_, k));
                Vec rhs = multiply(unit_vec(dim_, i), table_[j][k]);
                if (lhs != rhs)
                    throw ValidationError("associativity",
                                          "associativity(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                              ",k=" + std::to_string(k) + ")");
            }
}

Vec FinAlgebra::multiply(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (heckalg::is_zero(x[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (heckalg::is_zero(y[j])) continue;
            Scalar c = x[i] * y[j];
            add_scaled(out, c, table_[i][j]);
        }
    }
    return out;
}

SparseMatrix FinAlgebra::left_mult(const Vec& x) const {
    SparseMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = multiply(x, unit_vec(dim_, j));
        for (int k = 0; k < dim_; ++k)
            if (!heckalg::is_zero(col[k])) m.set(k, j, col[k]);
    }
    return m;
}

SparseMatrix FinAlgebra::right_mult(const Vec& x) const {
    SparseMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = multiply(unit_vec(dim_, j), x);
        for (int k = 0; k < dim_; ++k)
            if (!heckalg::is_zero(col[k])) m.set(k, j, col[k]);
    }
    return m;
}

bool FinAlgebra::is_commutative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

FinAlgebra FinAlgebra::opposite() const {
    std::vector<std::vector<Vec>> t(dim_, std::vector<Vec>(dim_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) t[i][j] = table_[j][i];
    std::vector<std::string> labels = labels_;
    return FinAlgebra(dim_, std::move(labels), unit_, std::move(t));
}

FinAlgebra opposite(const FinAlgebra& a) { return a.opposite(); }

AugmentedSubalgebra::AugmentedSubalgebra(AlgebraPtr parent, std::vector<Vec> inclusion_cols, Vec eps)
    : parent_(std::move(parent)), inclusion_(std::move(inclusion_cols)), eps_(std::move(eps)) {
    const FinAlgebra& A = *parent_;
    const int nb = static_cast<int>(inclusion_.size());
    if (nb < 1) throw ValidationError("subalgebra-dim", "dim B must be >= 1");
    if (static_cast<int>(eps_.size()) != nb)
        throw ValidationError("subalgebra-shape", "eps length != dim B");
    for (const auto& col : inclusion_)
        if (static_cast<int>(col.size()) != A.dim())
            throw ValidationError("subalgebra-shape", "inclusion column length != dim A");

    span_ = Subspace::from_vectors(A.dim(), inclusion_);
    if (span_.dim() != nb)
        throw ValidationError("subalgebra-independence", "inclusion columns are linearly dependent");
    if (!span_.contains(A.unit()))
        throw ValidationError("subalgebra-unit", "unit of A is not in B");

    // B-coordinates of a member of the span
    SparseMatrix incl_mat(A.dim(), nb);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < A.dim(); ++i)
            if (!heckalg::is_zero(inclusion_[j][i])) incl_mat.set(i, j, inclusion_[j][i]);

    auto express_in_b = [&](const Vec& a_coords) -> Vec {
        auto x = solve(incl_mat, a_coords);
        if (!x) throw ValidationError("subalgebra-closure", "element escapes the span of B");
        return *x;
    };

    unit_coords_ = express_in_b(A.unit());

    // closure + structure constants of B
    std::vector<std::vector<Vec>> table(nb, std::vector<Vec>(nb));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            Vec prod = A.multiply(inclusion_[i], inclusion_[j]);
            if (!span_.contains(prod))
                throw ValidationError("subalgebra-closure", "b_" + std::to_string(i) + " * b_" +
                                                                std::to_string(j) + " leaves B");
            table[i][j] = express_in_b(prod);
        }
    std::vector<std::string> labels;
    for (int i = 0; i < nb; ++i) labels.push_back("b" + std::to_string(i));
    b_algebra_ = std::make_shared<FinAlgebra>(nb, labels, unit_coords_, table);

    // eps is a unital algebra homomorphism
    Scalar eps_unit = 0;
    for (int i = 0; i < nb; ++i) eps_unit += eps_[i] * unit_coords_[i];
    if (eps_unit != 1) throw ValidationError("augmentation-unit", "eps(1) != 1");
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            Scalar lhs = 0;
            for (int k = 0; k < nb; ++k) lhs += eps_[k] * table[i][j][k];
            if (lhs != eps_[i] * eps_[j])
                throw ValidationError("augmentation-multiplicative",
                                      "eps(b_" + std::to_string(i) + " b_" + std::to_string(j) +
                                          ") != eps(b_" + std::to_string(i) + ")eps(b_" + std::to_string(j) + ")");
        }

    // canonical basis of ker(eps), in B- and A-coordinates
    SparseMatrix eps_mat(1, nb);
    for (int i = 0; i < nb; ++i) eps_mat.set(0, i, eps_[i]);
    Subspace ker = kernel_basis(eps_mat);
    if (ker.dim() != nb - 1)
        throw ValidationError("augmentation-kernel", "ker(eps) does not have codimension 1");
    for (int i = 0; i < ker.dim(); ++i) {
        kernel_b_.push_back(ker.basis_vector(i));
        kernel_a_.push_back(embed(kernel_b_.back()));
    }

    // products of kernel basis elements, expanded over the kernel basis; eps
    // is multiplicative so ker(eps) is closed under multiplication.
    kernel_table_.assign(kernel_b_.size(), std::vector<Vec>(kernel_b_.size()));
    for (std::size_t i = 0; i < kernel_b_.size(); ++i)
        for (std::size_t j = 0; j < kernel_b_.size(); ++j) {
            Vec prod_b = b_algebra_->multiply(kernel_b_[i], kernel_b_[j]);
            auto coords = ker.coordinates(prod_b);
            if (!coords)
                throw ValidationError("augmentation-kernel", "kernel product escaped ker(eps)");
            kernel_table_[i][j] = *coords;
        }
}

Vec AugmentedSubalgebra::embed(const Vec& b_coords) const {
    Vec out = zero_vec(parent_->dim());
    for (int j = 0; j < dim(); ++j) add_scaled(out, b_coords[j], inclusion_[j]);
    return out;
}

std::optional<Vec> AugmentedSubalgebra::express(const Vec& a_coords) const {
    SparseMatrix incl_mat(parent_->dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < parent_->dim(); ++i)
            if (!heckalg::is_zero(inclusion_[j][i])) incl_mat.set(i, j, inclusion_[j][i]);
    return solve(incl_mat, a_coords);
}

Scalar AugmentedSubalgebra::eps_value(const Vec& b_coords) const {
    Scalar s = 0;
    for (int i = 0; i < dim(); ++i) s += eps_[i] * b_coords[i];
    return s;
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::vector<Vec>> bracket)
    : dim_(dim), bracket_(std::move(bracket)) {
    if (dim_ <= 0) throw ValidationError("lie-dim", "dimension must be positive");
    if (static_cast<int>(bracket_.size()) != dim_)
        throw ValidationError("lie-shape", "bracket table has wrong size");
    for (const auto& row : bracket_) {
        if (static_cast<int>(row.size()) != dim_) throw ValidationError("lie-shape", "bad bracket row");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_) throw ValidationError("lie-shape", "bad bracket vector");
    }
    validate();
}

void LieAlgebra::validate() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k)
                if (bracket_[i][j][k] != -bracket_[j][i][k])
                    throw ValidationError("antisymmetry", "antisymmetry(i=" + std::to_string(i) +
                                                              ",j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")");
        }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                Vec s = bracket(bracket_[i][j], unit_vec(dim_, k));
                s = add(s, bracket(bracket_[j][k], unit_vec(dim_, i)));
                s = add(s, bracket(bracket_[k][i], unit_vec(dim_, j)));
                if (!is_zero_vec(s))
                    throw ValidationError("jacobi", "jacobi(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                                        ",k=" + std::to_string(k) + ")");
            }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (heckalg::is_zero(x[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (heckalg::is_zero(y[j])) continue;
            add_scaled(out, x[i] * y[j], bracket_[i][j]);
        }
    }
    return out;
}

LieAction::LieAction(LiePtr lie, AlgebraPtr target, std::vector<Vec> rho)
    : lie_(std::move(lie)), target_(std::move(target)), rho_(std::move(rho)) {
    const int n = lie_->dim();
    if (static_cast<int>(rho_.size()) != n)
        throw InvalidLieAction("rho has wrong number of columns");
    for (const auto& col : rho_)
        if (static_cast<int>(col.size()) != target_->dim())
            throw InvalidLieAction("rho column length != dim of target algebra");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec comm = sub(target_->multiply(rho_[i], rho_[j]), target_->multiply(rho_[j], rho_[i]));
            Vec br = rho_of(lie_->bracket_basis(i, j));
            if (comm != br)
                throw InvalidLieAction("rho(e_" + std::to_string(i) + ")rho(e_" + std::to_string(j) +
                                       ") - rho(e_" + std::to_string(j) + ")rho(e_" + std::to_string(i) +
                                       ") != rho([e_" + std::to_string(i) + ",e_" + std::to_string(j) + "])");
        }
}

Vec LieAction::rho_of(const Vec& x) const {
    Vec out = zero_vec(target_->dim());
    for (int i = 0; i < lie_->dim(); ++i) add_scaled(out, x[i], rho_[i]);
    return out;
}

LeftModule::LeftModule(AlgebraPtr algebra, int dim, std::vector<SparseMatrix> action, std::string name)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)), name_(std::move(name)) {
    if (static_cast<int>(action_.size()) != algebra_->dim())
        throw ValidationError("module-shape", "one action matrix per algebra basis element required");
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ValidationError("module-shape", "action matrix is not dim x dim");
    validate();
}

void LeftModule::validate() const {
    const FinAlgebra& A = *algebra_;
    if (dim_ == 0) return;   // the zero module is a module
    SparseMatrix unit_action = action_of(A.unit());
    if (!(unit_action == SparseMatrix::identity(dim_)))
        throw ValidationError("module-unit", "action(unit) != identity");
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            SparseMatrix lhs = action_[i].multiply(action_[j]);
            SparseMatrix rhs = action_of(A.basis_product(i, j));
            if (!(lhs == rhs))
                throw ValidationError("module-compat", "action(e_" + std::to_string(i) + ")action(e_" +
                                                           std::to_string(j) + ") != action(e_" +
                                                           std::to_string(i) + " e_" + std::to_string(j) + ")");
        }
}

SparseMatrix LeftModule::action_of(const Vec& x) const {
    SparseMatrix m(dim_, dim_);
    for (int i = 0; i < algebra_->dim(); ++i) {
        if (heckalg::is_zero(x[i])) continue;
        m = m.plus(action_[i].scaled(x[i]));
    }
    return m;
}

Vec LeftModule::act(const Vec& x, const Vec& v) const { return action_of(x).apply(v); }

Subspace left_ideal(const FinAlgebra& a, const Subspace& seed) {
    Subspace current = seed;
    for (;;) {
        std::vector<Vec> gens;
        for (int i = 0; i < current.dim(); ++i) gens.push_back(current.basis_vector(i));
        std::vector<Vec> next = gens;
        for (const auto& v : gens)
            for (int i = 0; i < a.dim(); ++i) next.push_back(a.multiply(unit_vec(a.dim(), i), v));
        Subspace bigger = Subspace::from_vectors(a.dim(), next);
        if (bigger.dim() == current.dim()) return bigger;
        current = bigger;
    }
}

Subspace generated_subalgebra(const FinAlgebra& a, const Subspace& gens) {
    std::vector<Vec> start;
    start.push_back(a.unit());
    for (int i = 0; i < gens.dim(); ++i) start.push_back(gens.basis_vector(i));
    Subspace current = Subspace::from_vectors(a.dim(), start);
    for (;;) {
        std::vector<Vec> vecs;
        for (int i = 0; i < current.dim(); ++i) vecs.push_back(current.basis_vector(i));
        std::vector<Vec> next = vecs;
        for (const auto& x : vecs)
            for (const auto& y : vecs) next.push_back(a.multiply(x, y));
        Subspace bigger = Subspace::from_vectors(a.dim(), next);
        if (bigger.dim() == current.dim()) return bigger;
        current = bigger;
    }
}

Vec InducedModule::project(const Vec& a_coords) const {
    auto c = reducer.coordinates(a_coords);
    if (!c) throw ValidationError("induced-module", "projection failed");
    return *c;
}

InducedModule induced_module(AlgebraPtr a, const AugmentedSubalgebra& b) {
    const FinAlgebra& A = *a;
    Subspace seed = Subspace::from_vectors(A.dim(), b.aug_kernel_basis_a());
    Subspace ideal = left_ideal(A, seed);
    QuotientBasis q = quotient_basis(Subspace::full(A.dim()), ideal);
    CosetReducer reducer(ideal, q.representatives);

    std::vector<SparseMatrix> action;
    for (int i = 0; i < A.dim(); ++i) {
        SparseMatrix m(q.dim, q.dim);
        for (int j = 0; j < q.dim; ++j) {
            Vec image = A.multiply(unit_vec(A.dim(), i), q.representatives[j]);
            auto coords = reducer.coordinates(image);
            if (!coords) throw ValidationError("induced-module", "action does not preserve the quotient");
            for (int k = 0; k < q.dim; ++k)
                if (!heckalg::is_zero((*coords)[k])) m.set(k, j, (*coords)[k]);
        }
        action.push_back(std::move(m));
    }
    InducedModule out{LeftModule(a, q.dim, std::move(action), "A/J"), ideal, q.representatives,
                      std::move(reducer)};
    return out;
}

Subspace invariants(const LeftModule& v, const AugmentedSubalgebra& b) {
    const int n = v.dim();
    const int nb = b.dim();
    SparseMatrix system(n * nb, n);
    for (int j = 0; j < nb; ++j) {
        SparseMatrix op = v.action_of(b.inclusion()[j]);
        Scalar e = b.eps()[j];
        for (int r = 0; r < n; ++r) {
            for (const auto& [c, val] : op.row(r)) system.add_to(j * n + r, c, val);
            system.add_to(j * n + r, r, -e);
        }
    }
    return kernel_basis(system);
}

LeftModule restrict_to_subalgebra(const LeftModule& v, const AugmentedSubalgebra& b) {
    std::vector<SparseMatrix> action;
    for (int j = 0; j < b.dim(); ++j) action.push_back(v.action_of(b.inclusion()[j]));
    return LeftModule(b.algebra_ptr(), v.dim(), std::move(action), v.name() + "|B");
}

LeftModule regular_module(AlgebraPtr a) {
    std::vector<SparseMatrix> action;
    for (int i = 0; i < a->dim(); ++i) action.push_back(a->left_mult(unit_vec(a->dim(), i)));
    return LeftModule(a, a->dim(), std::move(action), "regular");
}

LeftModule regular_right_module(AlgebraPtr a) {
    auto aop = std::make_shared<FinAlgebra>(a->opposite());
    std::vector<SparseMatrix> action;
    for (int i = 0; i < a->dim(); ++i) action.push_back(a->right_mult(unit_vec(a->dim(), i)));
    return LeftModule(aop, a->dim(), std::move(action), "regular-right");
}

}  // namespace heckalg
