#include "heckalg/complexes.hpp"

#include <algorithm>
#include <cassert>

#include "heckalg/errors.hpp"

namespace heckalg {

ChainComplex::ChainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix> d)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {
    if (d_.size() != dims_.size()) throw ValidationError("complex-shape", "need one d per degree");
    for (std::size_t k = 1; k < d_.size(); ++k) {
        if (d_[k].rows() != dims_[k - 1] || d_[k].cols() != dims_[k])
            throw ValidationError("complex-shape", "d at degree " + std::to_string(lo_ + static_cast<int>(k)) +
                                                       " has wrong shape");
    }
}

int ChainComplex::dim(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return dims_[n - lo_];
}

SparseMatrix ChainComplex::diff(int n) const {
    if (n <= lo_ || n > hi()) return SparseMatrix(dim(n - 1), dim(n));
    return d_[n - lo_];
}

void ChainComplex::validate() const {
    for (int n = lo_ + 1; n < hi() + 1; ++n) {
        if (!diff(n).multiply(diff(n + 1)).is_zero())
            throw ValidationError("d-squared", "d_" + std::to_string(n) + " o d_" + std::to_string(n + 1) +
                                                   " != 0");
    }
}

ChainComplex::Homology ChainComplex::homology(int n) const {
    if (n < lo_ || n > hi())
        throw DegreeOutOfRange("homology at degree " + std::to_string(n) + " outside [" +
                               std::to_string(lo_) + "," + std::to_string(hi()) + "]");
    Homology h;
    h.kernel = kernel_basis(diff(n));
    h.image = image_basis(diff(n + 1));
    QuotientBasis q = quotient_basis(h.kernel, h.image);
    h.dim = q.dim;
    h.representatives = q.representatives;
    return h;
}

Vec AMat::entry(int r, int c, int alg_dim) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero_vec(alg_dim) : it->second;
}

void AMat::set(int r, int c, Vec v) {
    if (is_zero_vec(v))
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void AMat::add(int r, int c, const Vec& v) {
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (!is_zero_vec(v)) entries_[{r, c}] = v;
        return;
    }
    it->second = heckalg::add(it->second, v);
    if (is_zero_vec(it->second)) entries_.erase(it);
}

AMat AMat::plus(const AMat& o) const {
    AMat out = *this;
    for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, v);
    return out;
}

AMat AMat::minus(const AMat& o) const {
    AMat out = *this;
    for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, scale(Scalar(-1), v));
    return out;
}

AMat AMat::scaled(const Scalar& c) const {
    AMat out(rows_, cols_);
    if (heckalg::is_zero(c)) return out;
    for (const auto& [rc, v] : entries_) out.entries_[rc] = scale(c, v);
    return out;
}

AMat AMat::identity(int n, const Vec& unit) {
    AMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, unit);
    return m;
}

AMat compose_amat(const FinAlgebra& a, const AMat& f, const AMat& g) {
    AMat out(f.rows(), g.cols());
    for (const auto& [kj, alpha] : g.entries()) {
        auto [k, j] = kj;
        for (const auto& [lk, beta] : f.entries()) {
            auto [l, kk] = lk;
            if (kk != k) continue;
            out.add(l, j, a.multiply(alpha, beta));
        }
    }
    return out;
}

FreeAComplex::FreeAComplex(AlgebraPtr algebra, std::vector<int> fiber_dims, std::vector<AMat> d)
    : algebra_(std::move(algebra)), fiber_dims_(std::move(fiber_dims)), d_(std::move(d)) {
    if (fiber_dims_.empty()) throw ValidationError("complex-shape", "complex needs at least degree 0");
    if (d_.size() != fiber_dims_.size())
        throw ValidationError("complex-shape", "need one differential slot per degree");
    for (std::size_t s = 1; s < d_.size(); ++s)
        if (d_[s].rows() != fiber_dims_[s - 1] || d_[s].cols() != fiber_dims_[s])
            throw ValidationError("complex-shape", "fiber differential at degree " + std::to_string(s) +
                                                       " has wrong shape");
}

int FreeAComplex::fiber_dim(int s) const {
    if (s < 0 || s > length()) return 0;
    return fiber_dims_[s];
}

SparseMatrix FreeAComplex::scalar_diff(int s) const {
    const int da = algebra_->dim();
    SparseMatrix m(total_dim(s - 1), total_dim(s));
    if (s < 1 || s > length()) return m;
    for (const auto& [lj, alpha] : d_[s].entries()) {
        auto [l, j] = lj;
        // column (j,i) carries e_i * alpha at row block l
        SparseMatrix r = algebra_->right_mult(alpha);
        for (int row = 0; row < da; ++row)
            for (const auto& [col, v] : r.row(row)) m.add_to(l * da + row, j * da + col, v);
    }
    return m;
}

ChainComplex FreeAComplex::scalar_complex() const {
    std::vector<int> dims;
    std::vector<SparseMatrix> d;
    for (int s = 0; s <= length(); ++s) {
        dims.push_back(total_dim(s));
        d.push_back(s == 0 ? SparseMatrix(0, total_dim(0)) : scalar_diff(s));
    }
    return ChainComplex(0, std::move(dims), std::move(d));
}

void FreeAComplex::validate() const {
    for (int s = 2; s <= length(); ++s)
        if (!compose_amat(*algebra_, d_[s - 1], d_[s]).is_zero())
            throw ValidationError("d-squared", "fiber d_" + std::to_string(s - 1) + " o d_" +
                                                   std::to_string(s) + " != 0");
}

FreeAComplex FreeAComplex::truncated(int new_length) const {
    if (new_length >= length()) return *this;
    std::vector<int> fd(fiber_dims_.begin(), fiber_dims_.begin() + new_length + 1);
    std::vector<AMat> d(d_.begin(), d_.begin() + new_length + 1);
    return FreeAComplex(algebra_, std::move(fd), std::move(d));
}

namespace {

// Component degrees available to a pure-degree-n map between 0..Ls and 0..Ld.
std::pair<int, int> comp_bounds(int src_len, int dst_len, int n) {
    return {std::max(0, n), std::min(src_len, dst_len + n)};
}

}  // namespace

AMat HomCochain::component_or_zero(int s) const {
    auto it = comp.find(s);
    if (it != comp.end()) return it->second;
    return AMat(dst->fiber_dim(s - degree), src->fiber_dim(s));
}

bool HomCochain::is_zero() const {
    for (const auto& [s, m] : comp)
        if (!m.is_zero()) return false;
    return true;
}

HomCochain HomCochain::plus(const HomCochain& o) const {
    HomCochain out = *this;
    for (const auto& [s, m] : o.comp) {
        auto it = out.comp.find(s);
        if (it == out.comp.end())
            out.comp[s] = m;
        else
            it->second = it->second.plus(m);
    }
    return out;
}

HomCochain HomCochain::minus(const HomCochain& o) const { return plus(o.scaled(Scalar(-1))); }

HomCochain HomCochain::scaled(const Scalar& c) const {
    HomCochain out = *this;
    for (auto& [s, m] : out.comp) m = m.scaled(c);
    return out;
}

HomCochain identity_cochain(ComplexPtr x) {
    HomCochain f;
    f.src = x;
    f.dst = x;
    f.degree = 0;
    for (int s = 0; s <= x->length(); ++s)
        if (x->fiber_dim(s) > 0) f.comp[s] = AMat::identity(x->fiber_dim(s), x->algebra().unit());
    return f;
}

HomCochain differential_cochain(ComplexPtr x) {
    HomCochain f;
    f.src = x;
    f.dst = x;
    f.degree = 1;
    for (int s = 1; s <= x->length(); ++s) f.comp[s] = x->d(s);
    return f;
}

HomCochain compose_cochains(const HomCochain& f, const HomCochain& g) {
    if (f.src.get() != g.dst.get())
        throw ValidationError("compose", "cochain composition with mismatched complexes");
    HomCochain out;
    out.src = g.src;
    out.dst = f.dst;
    out.degree = f.degree + g.degree;
    auto [lo, hi] = comp_bounds(g.src->length(), f.dst->length(), out.degree);
    auto [flo, fhi] = comp_bounds(f.src->length(), f.dst->length(), f.degree);
    for (int s = lo; s <= hi; ++s) {
        if (g.src->fiber_dim(s) == 0 || f.dst->fiber_dim(s - out.degree) == 0) continue;
        const AMat* gs = g.component(s);
        if (gs == nullptr || gs->is_zero()) continue;
        int u = s - g.degree;
        if (u < flo) continue;  // maps through a structurally zero degree
        if (u > fhi)
            throw WindowUnderflow("composition needs a component at degree " + std::to_string(u));
        AMat fu = f.component_or_zero(u);
        AMat c = compose_amat(f.dst->algebra(), fu, *gs);
        if (!c.is_zero()) out.comp[s] = std::move(c);
    }
    return out;
}

HomCochain end_differential(const HomCochain& f) {
    if (f.src.get() != f.dst.get())
        throw ValidationError("end-differential", "total differential needs an endomorphism cochain");
    ComplexPtr x = f.src;
    const int n = f.degree;
    const Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{n+1}
    HomCochain out;
    out.src = x;
    out.dst = x;
    out.degree = n + 1;
    auto [lo, hi] = comp_bounds(x->length(), x->length(), n + 1);
    for (int s = lo; s <= hi; ++s) {
        AMat acc(x->fiber_dim(s - n - 1), x->fiber_dim(s));
        if (s - n >= 1) {
            // d_{s-n} o f_s
            acc = acc.plus(compose_amat(x->algebra(), x->d(s - n), f.component_or_zero(s)));
        }
        if (s >= 1) {
            // (-1)^{n+1} f_{s-1} o d_s
            acc = acc.plus(compose_amat(x->algebra(), f.component_or_zero(s - 1), x->d(s)).scaled(sign));
        }
        if (!acc.is_zero()) out.comp[s] = std::move(acc);
    }
    return out;
}

std::pair<HomCochain, HomCochain> partial_differentials(const HomCochain& f) {
    if (f.src.get() != f.dst.get())
        throw ValidationError("partial-differentials", "needs an endomorphism cochain");
    ComplexPtr x = f.src;
    const int n = f.degree;
    const Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{p+q+1}
    HomCochain dprime, dsecond;
    dprime.src = dsecond.src = x;
    dprime.dst = dsecond.dst = x;
    dprime.degree = dsecond.degree = n + 1;
    auto [lo, hi] = comp_bounds(x->length(), x->length(), n + 1);
    for (int s = lo; s <= hi; ++s) {
        if (s >= 1) {
            AMat m = compose_amat(x->algebra(), f.component_or_zero(s - 1), x->d(s)).scaled(sign);
            if (!m.is_zero()) dprime.comp[s] = std::move(m);
        }
        if (s - n >= 1) {
            AMat m = compose_amat(x->algebra(), x->d(s - n), f.component_or_zero(s));
            if (!m.is_zero()) dsecond.comp[s] = std::move(m);
        }
    }
    return {dprime, dsecond};
}

bool cochains_equal(const HomCochain& f, const HomCochain& g) {
    if (f.degree != g.degree) return false;
    return f.minus(g).is_zero();
}

bool cochains_equal_on(const HomCochain& f, const HomCochain& g, int s_min, int s_max) {
    if (f.degree != g.degree) return false;
    for (int s = s_min; s <= s_max; ++s)
        if (!(f.component_or_zero(s).minus(g.component_or_zero(s)).is_zero())) return false;
    return true;
}

EndWindow::EndWindow(ComplexPtr carrier, int base_length)
    : carrier_(std::move(carrier)),
      L_(base_length < 0 ? carrier_->length() : base_length) {
    if (L_ > carrier_->length())
        throw ValidationError("end-window", "window exceeds the carrier complex");
    base_ = L_ == carrier_->length() ? carrier_
                                     : std::make_shared<FreeAComplex>(carrier_->truncated(L_));
}

EndWindow::EndWindow(ComplexPtr base, ComplexPtr carrier)
    : carrier_(std::move(carrier)), base_(std::move(base)), L_(base_->length()) {
    if (L_ > carrier_->length())
        throw ValidationError("end-window", "window exceeds the carrier complex");
    for (int s = 0; s <= L_; ++s) {
        if (base_->fiber_dim(s) != carrier_->fiber_dim(s) ||
            !(s == 0 || base_->d(s) == carrier_->d(s)))
            throw ValidationError("end-window", "carrier does not extend the base complex");
    }
}

std::vector<int> EndWindow::component_range(int n) const {
    std::vector<int> out;
    auto [lo, hi] = comp_bounds(L_, L_, n);
    for (int s = lo; s <= hi; ++s)
        if (base_->fiber_dim(s) > 0 && base_->fiber_dim(s - n) > 0) out.push_back(s);
    return out;
}

long EndWindow::total_dim(int n) const {
    long t = 0;
    const int da = base_->algebra().dim();
    for (int s : component_range(n))
        t += static_cast<long>(base_->fiber_dim(s)) * base_->fiber_dim(s - n) * da;
    return t;
}

Vec EndWindow::flatten(const HomCochain& f) const {
    const int n = f.degree;
    const int da = base_->algebra().dim();
    Vec out = zero_vec(total_dim(n));
    long offset = 0;
    for (int s : component_range(n)) {
        const int rows = base_->fiber_dim(s - n);
        AMat m = f.component_or_zero(s);
        for (const auto& [lj, v] : m.entries()) {
            auto [l, j] = lj;
            for (int i = 0; i < da; ++i)
                if (!heckalg::is_zero(v[i])) out[offset + (static_cast<long>(j) * rows + l) * da + i] = v[i];
        }
        offset += static_cast<long>(base_->fiber_dim(s)) * rows * da;
    }
    return out;
}

HomCochain EndWindow::unflatten(int n, const Vec& v) const {
    const int da = base_->algebra().dim();
    HomCochain f;
    f.src = base_;
    f.dst = base_;
    f.degree = n;
    long offset = 0;
    for (int s : component_range(n)) {
        const int rows = base_->fiber_dim(s - n);
        const int cols = base_->fiber_dim(s);
        AMat m(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int l = 0; l < rows; ++l) {
                Vec entry = zero_vec(da);
                bool nz = false;
                for (int i = 0; i < da; ++i) {
                    entry[i] = v[offset + (static_cast<long>(j) * rows + l) * da + i];
                    nz = nz || !heckalg::is_zero(entry[i]);
                }
                if (nz) m.set(l, j, std::move(entry));
            }
        if (!m.is_zero()) f.comp[s] = std::move(m);
        offset += static_cast<long>(cols) * rows * da;
    }
    return f;
}

SparseMatrix EndWindow::differential_matrix(int n) const {
    auto it = dmat_cache_.find(n);
    if (it != dmat_cache_.end()) return it->second;
    const int da = base_->algebra().dim();
    const FinAlgebra& A = base_->algebra();

    // row offsets for C^{n+1}
    std::map<int, long> row_offset;
    {
        long off = 0;
        for (int s : component_range(n + 1)) {
            row_offset[s] = off;
            off += static_cast<long>(base_->fiber_dim(s)) * base_->fiber_dim(s - n - 1) * da;
        }
    }
    SparseMatrix D(total_dim(n + 1), total_dim(n));
    const Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{n+1}

    long col_offset = 0;
    for (int s : component_range(n)) {
        const int rows_s = base_->fiber_dim(s - n);
        const int cols_s = base_->fiber_dim(s);
        auto col_index = [&](int j, int l, int i) {
            return col_offset + (static_cast<long>(j) * rows_s + l) * da + i;
        };

        // d'' part: block s of the image, rows (j, l', i') with
        // coefficient of e_{i'} in e_i * d_{s-n}(l', l).
        if (s - n >= 1 && row_offset.count(s)) {
            const int rows_im = base_->fiber_dim(s - n - 1);
            for (const auto& [lpl, alpha] : base_->d(s - n).entries()) {
                auto [lp, l] = lpl;
                SparseMatrix r = A.right_mult(alpha);   // e_i -> e_i * alpha
                for (int ip = 0; ip < da; ++ip)
                    for (const auto& [i, val] : r.row(ip))
                        for (int j = 0; j < cols_s; ++j)
                            D.add_to(row_offset[s] + (static_cast<long>(j) * rows_im + lp) * da + ip,
                                     col_index(j, l, i), val);
            }
        }

        // d' part: block s+1 of the image, rows (j'', l, i') with
        // (-1)^{n+1} times the coefficient of e_{i'} in d_{s+1}(j, j'') * e_i.
        if (s + 1 <= L_ && row_offset.count(s + 1)) {
            for (const auto& [kj, beta] : base_->d(s + 1).entries()) {
                auto [k, jpp] = kj;   // d_{s+1}: entry (k, j''), k indexes fiber of X_s
                SparseMatrix lmat = A.left_mult(beta);  // e_i -> beta * e_i
                for (int ip = 0; ip < da; ++ip)
                    for (const auto& [i, val] : lmat.row(ip))
                        for (int l = 0; l < rows_s; ++l)
                            D.add_to(row_offset[s + 1] + (static_cast<long>(jpp) * rows_s + l) * da + ip,
                                     col_index(k, l, i), sign * val);
            }
        }
        col_offset += static_cast<long>(cols_s) * rows_s * da;
    }
    dmat_cache_[n] = D;
    return D;
}

SparseMatrix EndWindow::coboundary_matrix(int n) const {
    // Source: degree-(n-1) cochains h over the carrier with components
    // h_s: X_s -> X_{s-n+1} for s <= L and s-n+1 <= carrier length. Rows:
    // the window layout of C^n. Entries follow the same two-term formula as
    // differential_matrix, with the carrier supplying the differentials.
    const FinAlgebra& A = carrier_->algebra();
    const int da = A.dim();
    const int m = n - 1;
    const int Lc = carrier_->length();

    std::vector<int> source_range;
    for (int s = std::max(0, m); s <= L_; ++s) {
        if (s - m < 0 || s - m > Lc) continue;
        if (carrier_->fiber_dim(s) == 0 || carrier_->fiber_dim(s - m) == 0) continue;
        source_range.push_back(s);
    }

    std::map<int, long> row_offset;
    {
        long off = 0;
        for (int s : component_range(n)) {
            row_offset[s] = off;
            off += static_cast<long>(base_->fiber_dim(s)) * base_->fiber_dim(s - n) * da;
        }
    }
    long total_cols = 0;
    for (int s : source_range)
        total_cols += static_cast<long>(carrier_->fiber_dim(s)) * carrier_->fiber_dim(s - m) * da;

    SparseMatrix D(total_dim(n), total_cols);
    const Scalar sign = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{m+1}

    long col_offset = 0;
    for (int s : source_range) {
        const int rows_s = carrier_->fiber_dim(s - m);
        const int cols_s = carrier_->fiber_dim(s);
        auto col_index = [&](int j, int l, int i) {
            return col_offset + (static_cast<long>(j) * rows_s + l) * da + i;
        };
        // d'' part: d_{s-m} o h_s lands at window component s
        if (s - m >= 1 && row_offset.count(s)) {
            const int rows_im = carrier_->fiber_dim(s - m - 1);
            for (const auto& [lpl, alpha] : carrier_->d(s - m).entries()) {
                auto [lp, l] = lpl;
                SparseMatrix r = A.right_mult(alpha);
                for (int ip = 0; ip < da; ++ip)
                    for (const auto& [i, val] : r.row(ip))
                        for (int j = 0; j < cols_s; ++j)
                            D.add_to(row_offset[s] + (static_cast<long>(j) * rows_im + lp) * da + ip,
                                     col_index(j, l, i), val);
            }
        }
        // d' part: (-1)^{m+1} h_s o d_{s+1} lands at window component s+1
        if (s + 1 <= L_ && row_offset.count(s + 1)) {
            for (const auto& [kj, beta] : carrier_->d(s + 1).entries()) {
                auto [k, jpp] = kj;
                SparseMatrix lmat = A.left_mult(beta);
                for (int ip = 0; ip < da; ++ip)
                    for (const auto& [i, val] : lmat.row(ip))
                        for (int l = 0; l < rows_s; ++l)
                            D.add_to(row_offset[s + 1] + (static_cast<long>(jpp) * rows_s + l) * da + ip,
                                     col_index(k, l, i), sign * val);
            }
        }
        col_offset += static_cast<long>(cols_s) * rows_s * da;
    }
    return D;
}

const EndWindow::Cohomology& EndWindow::cohomology(int n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    Cohomology h;
    h.kernel = kernel_basis(differential_matrix(n));
    h.image = image_basis(coboundary_matrix(n));
    QuotientBasis q = quotient_basis(h.kernel, h.image);
    h.dim = q.dim;
    h.rep_vecs = q.representatives;
    h.reducer = CosetReducer(h.image, h.rep_vecs);
    for (const auto& v : h.rep_vecs) h.reps.push_back(unflatten(n, v));
    auto [pos, ok] = cache_.emplace(n, std::move(h));
    (void)ok;
    return pos->second;
}

Vec EndWindow::class_coordinates(const HomCochain& f) const {
    const int n = f.degree;
    Vec flat = flatten(f);
    SparseMatrix D = differential_matrix(n);
    if (!is_zero_vec(D.apply(flat))) throw ValidationError("class-coordinates", "cochain is not closed");
    auto coords = cohomology(n).reducer.coordinates(flat);
    if (!coords) throw ValidationError("class-coordinates", "closed cochain escaped ker = im + reps");
    return *coords;
}

GradedAlgebraTable GradedAlgebraTable::opposite() const {
    GradedAlgebraTable t;
    t.nmin = nmin;
    t.nmax = nmax;
    t.dims = dims;
    t.convention = "opposite";
    for (const auto& [nm, tab] : products) {
        auto [n, m] = nm;
        int dn = dims.at(n), dm = dims.at(m);
        std::vector<std::vector<Vec>> swapped(dm, std::vector<Vec>(dn));
        // original products[{n,m}][i][j] = rep_n_i o rep_m_j; in the opposite
        // algebra (rep_m_j) *op (rep_n_i) equals that same class.
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) swapped[j][i] = tab[i][j];
        t.products[{m, n}] = std::move(swapped);
    }
    return t;
}

namespace {

HomCochain random_cochain(ComplexPtr x, int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-2, 2);
    HomCochain f;
    f.src = x;
    f.dst = x;
    f.degree = degree;
    const int da = x->algebra().dim();
    auto [lo, hi] = comp_bounds(x->length(), x->length(), degree);
    for (int s = lo; s <= hi; ++s) {
        const int rows = x->fiber_dim(s - degree);
        const int cols = x->fiber_dim(s);
        AMat m(rows, cols);
        for (int l = 0; l < rows; ++l)
            for (int j = 0; j < cols; ++j) {
                Vec v = zero_vec(da);
                bool nz = false;
                for (int i = 0; i < da; ++i) {
                    int c = val(rng);
                    if (c != 0) nz = true;
                    v[i] = c;
                }
                if (nz) m.set(l, j, std::move(v));
            }
        if (!m.is_zero()) f.comp[s] = std::move(m);
    }
    return f;
}

}  // namespace

HomCochain random_end_cochain(ComplexPtr x, int degree, std::mt19937& rng) {
    return random_cochain(std::move(x), degree, rng);
}

CohomologyAlgebra cohomology_algebra(const EndWindow& w, int nmin, int nmax,
                                     const CohomologyAlgebraOptions& opts) {
    CohomologyAlgebra out;
    out.table.nmin = nmin;
    out.table.nmax = nmax;
    for (int n = nmin; n <= nmax; ++n) {
        const auto& h = w.cohomology(n);
        out.table.dims[n] = h.dim;
        out.reps[n] = h.reps;
    }
    std::mt19937 rng(opts.seed);
    for (int n = nmin; n <= nmax; ++n) {
        for (int m = nmin; m <= nmax; ++m) {
            if (n + m < nmin || n + m > nmax) continue;
            if (n < 0 || m < 0) continue;   // products of negative degrees can leave the window
            const auto& hn = out.reps.at(n);
            const auto& hm = out.reps.at(m);
            std::vector<std::vector<Vec>> tab(hn.size(), std::vector<Vec>(hm.size()));
            for (std::size_t i = 0; i < hn.size(); ++i)
                for (std::size_t j = 0; j < hm.size(); ++j)
                    tab[i][j] = w.class_coordinates(compose_cochains(hn[i], hm[j]));

            // Theorem-1 well-definedness: shifting representatives by
            // coboundaries must not change the reduced products.
            if (!hn.empty() && !hm.empty()) {
                for (int t = 0; t < opts.shift_checks; ++t) {
                    std::size_t i = t % hn.size();
                    std::size_t j = (t / hn.size()) % hm.size();
                    HomCochain fs = hn[i].plus(end_differential(random_cochain(w.complex_ptr(), n - 1, rng)));
                    HomCochain gs = hm[j].plus(end_differential(random_cochain(w.complex_ptr(), m - 1, rng)));
                    Vec shifted = w.class_coordinates(compose_cochains(fs, gs));
                    if (shifted != tab[i][j])
                        throw ValidationError("product-representative",
                                              "product table changed under a coboundary shift at degrees (" +
                                                  std::to_string(n) + "," + std::to_string(m) + ")");
                }
            }
            out.table.products[{n, m}] = std::move(tab);
        }
    }
    return out;
}

TransportReport chain_map_transport(const EndWindow& wx, const EndWindow& wy, const HomCochain& F,
                                    const HomCochain& Fp, const HomCochain& hx, const HomCochain& hy,
                                    int nmin, int nmax) {
    ComplexPtr X = wx.complex_ptr();
    ComplexPtr Y = wy.complex_ptr();
    if (F.src.get() != X.get() || F.dst.get() != Y.get() || Fp.src.get() != Y.get() ||
        Fp.dst.get() != X.get())
        throw ValidationError("transport", "F and F' must map between the two complexes");
    if (F.degree != 0 || Fp.degree != 0 || hx.degree != -1 || hy.degree != -1)
        throw ValidationError("transport", "degrees: F, F' in degree 0, homotopies in degree -1");

    HomCochain dX = differential_cochain(X), dY = differential_cochain(Y);
    if (!cochains_equal(compose_cochains(dY, F), compose_cochains(F, dX)))
        throw NotAHomotopyEquivalence("F is not a chain map");
    if (!cochains_equal(compose_cochains(dX, Fp), compose_cochains(Fp, dY)))
        throw NotAHomotopyEquivalence("F' is not a chain map");
    // Eq.(12): F'F - id = d s + s d, exactly; note D(s) = d s + s d for deg -1.
    HomCochain lhsx = compose_cochains(Fp, F).minus(identity_cochain(X));
    if (!cochains_equal(lhsx, end_differential(hx)))
        throw NotAHomotopyEquivalence("F'F - id != d s + s d on X");
    HomCochain lhsy = compose_cochains(F, Fp).minus(identity_cochain(Y));
    if (!cochains_equal(lhsy, end_differential(hy)))
        throw NotAHomotopyEquivalence("FF' - id != d s' + s' d on X'");

    TransportReport rep;
    CohomologyAlgebra tx = cohomology_algebra(wx, nmin, nmax);
    CohomologyAlgebra ty = cohomology_algebra(wy, nmin, nmax);

    rep.dims_match = tx.table.dims == ty.table.dims;
    if (!rep.dims_match) {
        rep.detail = "cohomology dimensions differ";
        return rep;
    }

    // Transport matrices M_n: columns = Y-class coordinates of F o rep o F'.
    std::map<int, SparseMatrix> transport;
    rep.invertible = true;
    for (int n = nmin; n <= nmax; ++n) {
        const auto& reps_x = tx.reps.at(n);
        int dim = tx.table.dims.at(n);
        SparseMatrix M(dim, dim);
        for (int i = 0; i < static_cast<int>(reps_x.size()); ++i) {
            HomCochain u = compose_cochains(compose_cochains(F, reps_x[i]), Fp);
            Vec coords = wy.class_coordinates(u);
            for (int r = 0; r < dim; ++r)
                if (!heckalg::is_zero(coords[r])) M.set(r, i, coords[r]);
        }
        if (rank(M) != dim) {
            rep.invertible = false;
            rep.detail = "transport is singular in degree " + std::to_string(n);
            return rep;
        }
        transport[n] = std::move(M);
    }

    rep.multiplicative = true;
    for (const auto& [nm, tab] : tx.table.products) {
        auto [n, m] = nm;
        const auto& reps_x_n = tx.reps.at(n);
        const auto& reps_x_m = tx.reps.at(m);
        for (std::size_t i = 0; i < reps_x_n.size(); ++i)
            for (std::size_t j = 0; j < reps_x_m.size(); ++j) {
                HomCochain ui = compose_cochains(compose_cochains(F, reps_x_n[i]), Fp);
                HomCochain uj = compose_cochains(compose_cochains(F, reps_x_m[j]), Fp);
                Vec lhs = wy.class_coordinates(compose_cochains(ui, uj));
                Vec rhs = transport.at(n + m).apply(tab[i][j]);
                if (lhs != rhs) {
                    rep.multiplicative = false;
                    rep.detail = "transported product mismatch at degrees (" + std::to_string(n) + "," +
                                 std::to_string(m) + ")";
                    return rep;
                }
            }
    }
    rep.pass = rep.dims_match && rep.invertible && rep.multiplicative;
    if (rep.pass) rep.detail = "transport is a graded algebra isomorphism";
    return rep;
}

}  // namespace heckalg
