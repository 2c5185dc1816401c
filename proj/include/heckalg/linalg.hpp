#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "heckalg/rational.hpp"

namespace heckalg {

// Sparse matrix over the rationals. No zero entries are ever stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(int n);
    static SparseMatrix from_rows(const std::vector<Vec>& rows, int cols = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<int, Scalar>& row(int r) const { return data_[r]; }
    Scalar at(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    void add_to(int r, int c, const Scalar& v);

    long long nnz() const;
    bool is_zero() const;

    Vec apply(const Vec& x) const;              // this * x
    Vec apply_transpose(const Vec& x) const;    // this^T * x
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    SparseMatrix transpose() const;
    SparseMatrix scaled(const Scalar& c) const;
    SparseMatrix plus(const SparseMatrix& rhs) const;
    SparseMatrix minus(const SparseMatrix& rhs) const;
    Vec row_dense(int r) const;
    Vec col_dense(int c) const;

    bool operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Scalar>> data_;
};

struct Echelon {
    SparseMatrix rref;             // canonical reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols;   // ascending, one per row of rref
};

// Gauss-Jordan with Markowitz-style pivot selection (sparsest column, then
// sparsest row in it) and primitive integer row scaling between steps.
// The result is the unique RREF of the row space, so it is canonical.
Echelon sparse_rref(const SparseMatrix& m);

// A linear subspace of Q^ambient held as an RREF basis, so equality of
// subspaces is equality of the stored data.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace from_vectors(int ambient, const std::vector<Vec>& gens);
    static Subspace from_rows(const SparseMatrix& rows);
    static Subspace full(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const SparseMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Vec basis_vector(int i) const { return basis_.row_dense(i); }

    // Remainder of v after eliminating the basis pivots; zero iff v is a member.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients of v over the basis, if v is a member.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    int ambient_ = 0;
    SparseMatrix basis_;          // dim x ambient, RREF
    std::vector<int> pivots_;
};

Subspace kernel_basis(const SparseMatrix& m);
Subspace image_basis(const SparseMatrix& m);   // column space
int rank(const SparseMatrix& m);

struct QuotientBasis {
    int dim = 0;
    std::vector<Vec> representatives;   // canonical coset representatives
};

// Throws NotASubspace unless sub is contained in ambient.
QuotientBasis quotient_basis(const Subspace& ambient, const Subspace& sub);

// Exact solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs);

// Reduction against a fixed pair image <= kernel: writes any kernel vector as
// (coefficients over the chosen coset representatives) + (element of image).
class CosetReducer {
public:
    CosetReducer() = default;
    CosetReducer(const Subspace& image, const std::vector<Vec>& representatives);

    int class_count() const { return static_cast<int>(reps_.size()); }
    const std::vector<Vec>& representatives() const { return reps_; }

    // Coefficients over the representatives; fails (nullopt) when v does not
    // lie in image + span(representatives).
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    Subspace image_;
    std::vector<Vec> reps_;
    Subspace rep_span_;
};

}  // namespace heckalg
