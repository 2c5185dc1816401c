#include "heckalg/linalg.hpp"

#include <algorithm>
#include <set>

#include "heckalg/errors.hpp"

namespace heckalg {

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
    int c = cols;
    if (c < 0) c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    SparseMatrix m(static_cast<int>(rows.size()), c);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int j = 0; j < c; ++j)
            if (!heckalg::is_zero(rows[r][j])) m.data_[r][j] = rows[r][j];
    return m;
}

Scalar SparseMatrix::at(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (heckalg::is_zero(v))
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add_to(int r, int c, const Scalar& v) {
    if (heckalg::is_zero(v)) return;
    auto [it, inserted] = data_[r].emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (heckalg::is_zero(it->second)) data_[r].erase(it);
    }
}

long long SparseMatrix::nnz() const {
    long long n = 0;
    for (const auto& row : data_) n += static_cast<long long>(row.size());
    return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

Vec SparseMatrix::apply(const Vec& x) const {
    Vec y = zero_vec(rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
}

Vec SparseMatrix::apply_transpose(const Vec& x) const {
    Vec y = zero_vec(cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[c] += v * x[r];
    return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    SparseMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [k, v] : data_[r]) {
            for (const auto& [c, w] : rhs.data_[k]) out.add_to(r, c, v * w);
        }
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.data_[c][r] = v;
    return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(rows_, cols_);
    if (heckalg::is_zero(c)) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [j, v] : data_[r]) out.data_[r][j] = c * v;
    return out;
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& rhs) const {
    SparseMatrix out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.data_[r]) out.add_to(r, c, v);
    return out;
}

SparseMatrix SparseMatrix::minus(const SparseMatrix& rhs) const {
    SparseMatrix out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.data_[r]) out.add_to(r, c, -v);
    return out;
}

Vec SparseMatrix::row_dense(int r) const {
    Vec v = zero_vec(cols_);
    for (const auto& [c, x] : data_[r]) v[c] = x;
    return v;
}

Vec SparseMatrix::col_dense(int c) const {
    Vec v = zero_vec(rows_);
    for (int r = 0; r < rows_; ++r) {
        auto it = data_[r].find(c);
        if (it != data_[r].end()) v[r] = it->second;
    }
    return v;
}

namespace {

using Row = std::map<int, Scalar>;

// Scale a row to primitive integer form. Keeps entry growth under control
// during elimination without changing the row space.
void make_primitive(Row& row) {
    if (row.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [c, v] : row) {
        mpz_class scaled_num = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Scalar factor(den_lcm, num_gcd);
    factor.canonicalize();
    for (auto& [c, v] : row) {
        v *= factor;
        v.canonicalize();
    }
}

void axpy_row(Row& target, const Scalar& coeff, const Row& source) {
    for (const auto& [c, v] : source) {
        auto [it, inserted] = target.emplace(c, coeff * v);
        if (!inserted) {
            it->second += coeff * v;
            if (heckalg::is_zero(it->second)) target.erase(it);
        }
    }
}

}  // namespace

Echelon sparse_rref(const SparseMatrix& m) {
    const int nrows = m.rows();
    const int ncols = m.cols();
    std::vector<Row> rows(nrows);
    for (int r = 0; r < nrows; ++r) {
        rows[r] = m.row(r);
        make_primitive(rows[r]);
    }

    // col -> rows having a nonzero there (kept exact during elimination)
    std::vector<std::set<int>> col_rows(ncols);
    std::vector<bool> active(nrows, true);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

    std::vector<std::pair<int, int>> pivots;  // (row, col)
    for (;;) {
        // Markowitz-style pick: sparsest eligible column, then sparsest row in it.
        int best_col = -1;
        std::size_t best_count = 0;
        for (int c = 0; c < ncols; ++c) {
            std::size_t count = 0;
            for (int r : col_rows[c])
                if (active[r]) ++count;
            if (count == 0) continue;
            if (best_col < 0 || count < best_count) {
                best_col = c;
                best_count = count;
            }
        }
        if (best_col < 0) break;
        int best_row = -1;
        std::size_t best_nnz = 0;
        for (int r : col_rows[best_col]) {
            if (!active[r]) continue;
            if (best_row < 0 || rows[r].size() < best_nnz) {
                best_row = r;
                best_nnz = rows[r].size();
            }
        }

        active[best_row] = false;
        pivots.emplace_back(best_row, best_col);
        const Scalar pivot_val = rows[best_row].at(best_col);
        std::vector<int> touched(col_rows[best_col].begin(), col_rows[best_col].end());
        for (int r : touched) {
            if (r == best_row || !active[r]) continue;
            Scalar coeff = -rows[r].at(best_col) / pivot_val;
            for (const auto& [c, v] : rows[best_row]) {
                auto [it, inserted] = rows[r].emplace(c, coeff * v);
                if (inserted) {
                    col_rows[c].insert(r);
                } else {
                    it->second += coeff * v;
                    if (heckalg::is_zero(it->second)) {
                        rows[r].erase(it);
                        col_rows[c].erase(r);
                    }
                }
            }
            make_primitive(rows[r]);
        }
    }

    // The Markowitz phase fixes the row space with little fill, but its
    // pivot columns need not be leftmost. A second pass over the surviving
    // rows (there are only rank-many, already sparse) produces the unique
    // reduced row echelon form.
    std::vector<Row> work;
    for (const auto& [pr, pc] : pivots)
        if (!rows[pr].empty()) work.push_back(std::move(rows[pr]));

    std::vector<Row> placed;
    while (!work.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < work.size(); ++i) {
            int lead_b = work[best].begin()->first;
            int lead_i = work[i].begin()->first;
            if (lead_i < lead_b || (lead_i == lead_b && work[i].size() < work[best].size()))
                best = i;
        }
        Row pivot_row = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        const int pc = pivot_row.begin()->first;
        const Scalar pv = pivot_row.begin()->second;
        for (auto* bucket : {&work, &placed})
            for (Row& r : *bucket) {
                auto it = r.find(pc);
                if (it == r.end()) continue;
                Scalar coeff = -it->second / pv;
                axpy_row(r, coeff, pivot_row);
                make_primitive(r);
            }
        work.erase(std::remove_if(work.begin(), work.end(), [](const Row& r) { return r.empty(); }),
                   work.end());
        placed.push_back(std::move(pivot_row));
    }

    Echelon result;
    result.rref = SparseMatrix(static_cast<int>(placed.size()), ncols);
    for (int i = 0; i < static_cast<int>(placed.size()); ++i) {
        const int pc = placed[i].begin()->first;
        Scalar inv = Scalar(1) / placed[i].begin()->second;
        for (const auto& [c, v] : placed[i]) result.rref.set(i, c, v * inv);
        result.pivot_cols.push_back(pc);
    }
    return result;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<Vec>& gens) {
    return from_rows(SparseMatrix::from_rows(gens, ambient));
}

Subspace Subspace::from_rows(const SparseMatrix& rows) {
    Subspace s(rows.cols());
    Echelon e = sparse_rref(rows);
    s.basis_ = e.rref;
    s.pivots_ = e.pivot_cols;
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    s.basis_ = SparseMatrix::identity(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        Scalar lead = r[pivots_[i]];
        if (heckalg::is_zero(lead)) continue;
        for (const auto& [c, x] : basis_.row(i)) r[c] -= lead * x;
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec coeffs = zero_vec(dim());
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        Scalar lead = r[pivots_[i]];
        if (heckalg::is_zero(lead)) continue;
        coeffs[i] = lead;
        for (const auto& [c, x] : basis_.row(i)) r[c] -= lead * x;
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return coeffs;
}

Subspace kernel_basis(const SparseMatrix& m) {
    Echelon e = sparse_rref(m);
    const int ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> gens;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(ncols);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(e.pivot_cols.size()); ++i) {
            Scalar entry = e.rref.at(i, f);
            if (!heckalg::is_zero(entry)) v[e.pivot_cols[i]] = -entry;
        }
        gens.push_back(std::move(v));
    }
    return Subspace::from_vectors(ncols, gens);
}

Subspace image_basis(const SparseMatrix& m) { return Subspace::from_rows(m.transpose()); }

int rank(const SparseMatrix& m) { return static_cast<int>(sparse_rref(m).pivot_cols.size()); }

QuotientBasis quotient_basis(const Subspace& ambient, const Subspace& sub) {
    if (!ambient.contains(sub))
        throw NotASubspace("quotient requested for a non-contained subspace (dim " +
                           std::to_string(sub.dim()) + " in dim " + std::to_string(ambient.dim()) + ")");
    std::vector<Vec> reduced;
    for (int i = 0; i < ambient.dim(); ++i) {
        Vec r = sub.reduce(ambient.basis_vector(i));
        if (!is_zero_vec(r)) reduced.push_back(std::move(r));
    }
    Subspace span = Subspace::from_vectors(ambient.ambient_dim(), reduced);
    QuotientBasis q;
    q.dim = span.dim();
    for (int i = 0; i < span.dim(); ++i) q.representatives.push_back(span.basis_vector(i));
    if (q.dim != ambient.dim() - sub.dim()) throw NotASubspace("quotient dimension mismatch");
    return q;
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw ValidationError("solve", "rhs length != rows");
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        if (!heckalg::is_zero(rhs[r])) aug.set(r, m.cols(), rhs[r]);
    }
    Echelon e = sparse_rref(aug);
    Vec x = zero_vec(m.cols());
    for (int i = 0; i < static_cast<int>(e.pivot_cols.size()); ++i) {
        if (e.pivot_cols[i] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivot_cols[i]] = e.rref.at(i, m.cols());
    }
    return x;
}

CosetReducer::CosetReducer(const Subspace& image, const std::vector<Vec>& representatives)
    : image_(image), reps_(representatives) {
    rep_span_ = Subspace::from_vectors(image.ambient_dim(), reps_);
    if (rep_span_.dim() != static_cast<int>(reps_.size()))
        throw ValidationError("coset-reducer", "representatives are linearly dependent");
    // Representatives come from quotient_basis, so they are image-reduced RREF
    // rows; coordinates() below relies on that alignment.
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (rep_span_.basis_vector(static_cast<int>(i)) != reps_[i])
            throw ValidationError("coset-reducer", "representatives are not in canonical form");
}

std::optional<Vec> CosetReducer::coordinates(const Vec& v) const {
    if (reps_.empty()) {
        if (image_.contains(v)) return Vec{};
        return std::nullopt;
    }
    return rep_span_.coordinates(image_.reduce(v));
}

}  // namespace heckalg
