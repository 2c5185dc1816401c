#include "heckalg/resolutions.hpp"

#include <algorithm>

#include "heckalg/errors.hpp"

namespace heckalg {

int bar_word_index(const std::vector<int>& word, int letters) {
    long idx = 0;
    for (int c : word) idx = idx * letters + c;
    return static_cast<int>(idx);
}

std::vector<int> bar_word_of_index(long index, int letters, int length) {
    std::vector<int> w(length, 0);
    for (int k = length - 1; k >= 0; --k) {
        w[k] = static_cast<int>(index % letters);
        index /= letters;
    }
    return w;
}

FreeAComplex bar_resolution_B(const AugmentedSubalgebra& b, int L) {
    if (L < 1) throw ValidationError("bar", "truncation length must be >= 1");
    const int m = b.aug_kernel_dim();
    const FinAlgebra& B = b.algebra();
    const Vec& unit = B.unit();

    std::vector<int> fibers;
    std::vector<AMat> d;
    long f = 1;
    for (int s = 0; s <= L; ++s) {
        fibers.push_back(static_cast<int>(f));
        f *= m;
    }
    d.emplace_back();
    for (int s = 1; s <= L; ++s) {
        AMat ds(fibers[s - 1], fibers[s]);
        for (long col = 0; col < fibers[s]; ++col) {
            std::vector<int> w = bar_word_of_index(col, m, s);
            // a[w1..ws] |-> a w1 [w2..ws]
            {
                std::vector<int> rest(w.begin() + 1, w.end());
                ds.add(bar_word_index(rest, m), static_cast<int>(col), b.aug_kernel_basis_b()[w[0]]);
            }
            // + sum (-1)^k a[.., w_k w_{k+1}, ..]; kernel-slot products expand
            // over the kernel basis since eps is multiplicative.
            for (int k = 1; k <= s - 1; ++k) {
                const Vec& prod = b.kernel_product(w[k - 1], w[k]);
                Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
                for (int t = 0; t < m; ++t) {
                    if (heckalg::is_zero(prod[t])) continue;
                    std::vector<int> merged;
                    merged.reserve(s - 1);
                    for (int p = 0; p < k - 1; ++p) merged.push_back(w[p]);
                    merged.push_back(t);
                    for (int p = k + 1; p < s; ++p) merged.push_back(w[p]);
                    ds.add(bar_word_index(merged, m), static_cast<int>(col), scale(sign * prod[t], unit));
                }
            }
            // the trailing term (-1)^s eps(w_s) a[w1..w_{s-1}] vanishes: the
            // slots live in ker(eps).
        }
        d.push_back(std::move(ds));
    }
    FreeAComplex x(b.algebra_ptr(), std::move(fibers), std::move(d));
    x.validate();
    return x;
}

FreeAComplex tensor_up(AlgebraPtr a, const AugmentedSubalgebra& b, const FreeAComplex& xb) {
    std::vector<int> fibers;
    for (int s = 0; s <= xb.length(); ++s) fibers.push_back(xb.fiber_dim(s));
    std::vector<AMat> d;
    d.emplace_back();
    for (int s = 1; s <= xb.length(); ++s) {
        AMat ds(xb.fiber_dim(s - 1), xb.fiber_dim(s));
        for (const auto& [lj, v] : xb.d(s).entries()) ds.set(lj.first, lj.second, b.embed(v));
        d.push_back(std::move(ds));
    }
    FreeAComplex x(std::move(a), std::move(fibers), std::move(d));
    x.validate();
    return x;
}

FreeAComplex induced_bar_complex(AlgebraPtr a, const AugmentedSubalgebra& b, int L) {
    return tensor_up(std::move(a), b, bar_resolution_B(b, L));
}

namespace {

// Basis of Lambda^s as sorted index subsets, enumerated lexicographically.
std::vector<std::vector<int>> subsets_of_size(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& subset) {
    auto it = std::lower_bound(basis.begin(), basis.end(), subset);
    return static_cast<int>(it - basis.begin());
}

}  // namespace

FreeAComplex ce_complex(const LieAction& act) {
    const LieAlgebra& g = act.lie();
    const FinAlgebra& A = act.target();
    const int n = g.dim();
    const Vec& unit = A.unit();

    std::vector<std::vector<std::vector<int>>> bases;
    for (int s = 0; s <= n; ++s) bases.push_back(subsets_of_size(n, s));

    std::vector<int> fibers;
    for (int s = 0; s <= n; ++s) fibers.push_back(static_cast<int>(bases[s].size()));
    std::vector<AMat> d;
    d.emplace_back();
    for (int s = 1; s <= n; ++s) {
        AMat ds(fibers[s - 1], fibers[s]);
        for (int col = 0; col < fibers[s]; ++col) {
            const std::vector<int>& x = bases[s][col];
            // sum_i (-1)^{i+1} u rho(x_i) (x) x_1 ^..^ x_i^ ..^ x_s
            for (int i = 0; i < s; ++i) {
                std::vector<int> rest;
                for (int p = 0; p < s; ++p)
                    if (p != i) rest.push_back(x[p]);
                Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);   // (-1)^{(i+1)+1}
                ds.add(subset_index(bases[s - 1], rest), col, scale(sign, act.rho()[x[i]]));
            }
            // sum_{i<j} (-1)^{i+j} u (x) [x_i,x_j] ^ x_1 ^..^ x_i^ ..^ x_j^ ..^ x_s
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    const Vec& br = g.bracket_basis(x[i], x[j]);
                    std::vector<int> rest;
                    for (int p = 0; p < s; ++p)
                        if (p != i && p != j) rest.push_back(x[p]);
                    // 1-based sign (-1)^{i+j}
                    Scalar sign = (((i + 1) + (j + 1)) % 2 == 0) ? Scalar(1) : Scalar(-1);
                    for (int t = 0; t < n; ++t) {
                        if (heckalg::is_zero(br[t])) continue;
                        if (std::find(rest.begin(), rest.end(), t) != rest.end()) continue;
                        // sort e_t into position: [x_i,x_j] sits in front
                        std::vector<int> merged = rest;
                        auto pos = std::lower_bound(merged.begin(), merged.end(), t);
                        int shift = static_cast<int>(pos - merged.begin());
                        merged.insert(pos, t);
                        Scalar s2 = (shift % 2 == 0) ? Scalar(1) : Scalar(-1);
                        ds.add(subset_index(bases[s - 1], merged), col, scale(sign * s2 * br[t], unit));
                    }
                }
        }
        d.push_back(std::move(ds));
    }
    FreeAComplex x(act.target_ptr(), std::move(fibers), std::move(d));
    x.validate();   // equivalent to Jacobi + the action axiom; loud if violated
    return x;
}

BModuleComplex as_b_module_complex(const AugmentedSubalgebra& b, const FreeAComplex& xb,
                                   const Vec& fiber_aug) {
    BModuleComplex out;
    out.scalar = xb.scalar_complex();
    const FinAlgebra& B = xb.algebra();
    const int db = B.dim();
    for (int s = 0; s <= xb.length(); ++s) {
        std::vector<SparseMatrix> acts;
        for (int j = 0; j < b.dim(); ++j) {
            SparseMatrix lm = B.left_mult(unit_vec(db, j));
            SparseMatrix m(xb.total_dim(s), xb.total_dim(s));
            for (int f = 0; f < xb.fiber_dim(s); ++f)
                for (int r = 0; r < db; ++r)
                    for (const auto& [c, v] : lm.row(r)) m.set(f * db + r, f * db + c, v);
            acts.push_back(std::move(m));
        }
        out.action.push_back(std::move(acts));
    }
    out.augmentation = zero_vec(xb.total_dim(0));
    for (int f = 0; f < xb.fiber_dim(0); ++f)
        for (int i = 0; i < db; ++i) {
            Scalar v = fiber_aug[f] * b.eps_value(unit_vec(db, i));
            out.augmentation[f * db + i] = v;
        }
    return out;
}

ResolutionReport validate_resolution(const AugmentedSubalgebra& b, const BModuleComplex& x, int L) {
    ResolutionReport rep;
    const ChainComplex& c = x.scalar;
    for (int s = 1; s <= std::min(L, c.hi()); ++s) {
        if (!c.diff(s).multiply(c.diff(s + 1)).is_zero()) {
            rep.failed_degree = s;
            rep.detail = "d^2 != 0 into degree " + std::to_string(s - 1);
            return rep;
        }
        for (int j = 0; j < b.dim(); ++j) {
            SparseMatrix lhs = x.action[s - 1][j].multiply(c.diff(s));
            SparseMatrix rhs = c.diff(s).multiply(x.action[s][j]);
            if (!(lhs == rhs)) {
                rep.failed_degree = s;
                rep.detail = "d does not commute with the action of b_" + std::to_string(j);
                return rep;
            }
        }
    }
    for (int s = 1; s <= L - 1 && s <= c.hi(); ++s) {
        auto h = c.homology(s);
        if (h.dim != 0) {
            rep.failed_degree = s;
            rep.detail = "H_" + std::to_string(s) + " has dimension " + std::to_string(h.dim) +
                         ", expected 0";
            return rep;
        }
    }
    auto h0 = c.homology(0);
    if (h0.dim != 1) {
        rep.failed_degree = 0;
        rep.detail = "H_0 has dimension " + std::to_string(h0.dim) + ", expected 1";
        return rep;
    }
    // B acts on H_0 through eps
    {
        const Vec& r = h0.representatives[0];
        CosetReducer reducer(h0.image, h0.representatives);
        for (int j = 0; j < b.dim(); ++j) {
            Vec image = x.action[0][j].apply(r);
            auto coords = reducer.coordinates(image);
            Scalar expected = b.eps()[j];
            // eps on the subalgebra basis vector b_j
            if (!coords || (*coords)[0] != expected) {
                rep.failed_degree = 0;
                rep.detail = "b_" + std::to_string(j) + " does not act on H_0 through eps";
                return rep;
            }
        }
    }
    rep.pass = true;
    rep.detail = "resolution valid through degree " + std::to_string(std::min(L - 1, c.hi()));
    return rep;
}

namespace {

// Images of 1 (x) f_j under a B-linear map, as scalar columns of the target.
Vec amat_column_scalar(const FreeAComplex& dst, int s_dst, const AMat& m, int col, int db) {
    Vec out = zero_vec(dst.total_dim(s_dst));
    for (const auto& [lj, v] : m.entries()) {
        if (lj.second != col) continue;
        for (int i = 0; i < db; ++i) out[lj.first * db + i] = v[i];
    }
    return out;
}

AMat amat_from_scalar_columns(int rows, int cols, int db, const std::vector<Vec>& columns) {
    AMat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int l = 0; l < rows; ++l) {
            Vec v = zero_vec(db);
            bool nz = false;
            for (int i = 0; i < db; ++i) {
                v[i] = columns[j][l * db + i];
                nz = nz || !heckalg::is_zero(v[i]);
            }
            if (nz) m.set(l, j, std::move(v));
        }
    return m;
}

// Lift a chain map along the differential: find F_s with d'_s o F_s = rhs.
AMat lift_through(const FreeAComplex& xp, int s, const std::vector<Vec>& rhs_cols, int src_fiber) {
    SparseMatrix d = xp.scalar_diff(s);
    std::vector<Vec> sols;
    for (const auto& rhs : rhs_cols) {
        auto sol = solve(d, rhs);
        if (!sol)
            throw NotAHomotopyEquivalence("comparison lift failed at degree " + std::to_string(s) +
                                          " (complex not exact there?)");
        sols.push_back(std::move(*sol));
    }
    return amat_from_scalar_columns(xp.fiber_dim(s), src_fiber, xp.algebra().dim(), sols);
}

}  // namespace

Comparison lift_comparison(const AugmentedSubalgebra& b, ComplexPtr xb, ComplexPtr xpb,
                           const Vec& aug_x, const Vec& aug_xp) {
    const FinAlgebra& B = b.algebra();
    const int db = B.dim();

    auto build_chain_map = [&](ComplexPtr src, ComplexPtr dst, const Vec& aug_src,
                               const Vec& aug_dst) -> HomCochain {
        HomCochain F;
        F.src = src;
        F.dst = dst;
        F.degree = 0;
        // degree 0: any B-linear map matching the augmentations
        int l0 = -1;
        for (int l = 0; l < dst->fiber_dim(0); ++l)
            if (!heckalg::is_zero(aug_dst[l])) {
                l0 = l;
                break;
            }
        if (l0 < 0) throw NotAHomotopyEquivalence("target augmentation vanishes");
        AMat f0(dst->fiber_dim(0), src->fiber_dim(0));
        for (int j = 0; j < src->fiber_dim(0); ++j) {
            if (heckalg::is_zero(aug_src[j])) continue;
            f0.set(l0, j, scale(aug_src[j] / aug_dst[l0], B.unit()));
        }
        F.comp[0] = f0;
        int L = std::min(src->length(), dst->length());
        for (int s = 1; s <= L; ++s) {
            AMat target = compose_amat(B, F.comp.at(s - 1), src->d(s));   // F_{s-1} o d_s
            std::vector<Vec> rhs;
            for (int j = 0; j < src->fiber_dim(s); ++j)
                rhs.push_back(amat_column_scalar(*dst, s - 1, target, j, db));
            F.comp[s] = lift_through(*dst, s, rhs, src->fiber_dim(s));
        }
        return F;
    };

    auto build_homotopy = [&](ComplexPtr x, const HomCochain& g) -> HomCochain {
        // g is a degree-0 chain map homotopic to zero: solve d h + h d = g.
        HomCochain h;
        h.src = x;
        h.dst = x;
        h.degree = -1;
        int L = x->length();
        for (int s = 0; s <= L - 1; ++s) {
            // residual r_s = g_s - h_{s-1} o d_s, then d_{s+1} o h_s = r_s
            AMat r = g.component_or_zero(s);
            if (s >= 1) r = r.minus(compose_amat(B, h.comp.at(s - 1), x->d(s)));
            std::vector<Vec> rhs;
            for (int j = 0; j < x->fiber_dim(s); ++j)
                rhs.push_back(amat_column_scalar(*x, s, r, j, db));
            h.comp[s] = lift_through(*x, s + 1, rhs, x->fiber_dim(s));
        }
        // top degree: no room to correct; demand the residual vanishes
        AMat top = g.component_or_zero(L);
        if (L >= 1) top = top.minus(compose_amat(B, h.comp[L - 1], x->d(L)));
        if (!top.is_zero())
            throw NotAHomotopyEquivalence(
                "homotopy residual at the top window degree; enlarge L");
        return h;
    };

    Comparison cmp;
    cmp.F = build_chain_map(xb, xpb, aug_x, aug_xp);
    cmp.Fp = build_chain_map(xpb, xb, aug_xp, aug_x);
    cmp.h = build_homotopy(xb, compose_cochains(cmp.Fp, cmp.F).minus(identity_cochain(xb)));
    cmp.hp = build_homotopy(xpb, compose_cochains(cmp.F, cmp.Fp).minus(identity_cochain(xpb)));
    return cmp;
}

HomCochain tensor_up_map(const AugmentedSubalgebra& b, const HomCochain& f, ComplexPtr src_a,
                         ComplexPtr dst_a) {
    HomCochain out;
    out.src = src_a;
    out.dst = dst_a;
    out.degree = f.degree;
    for (const auto& [s, m] : f.comp) {
        AMat ma(m.rows(), m.cols());
        for (const auto& [rc, v] : m.entries()) ma.set(rc.first, rc.second, b.embed(v));
        out.comp[s] = std::move(ma);
    }
    return out;
}

PaddedComplex pad_with_acyclic(ComplexPtr x, int k) {
    if (k < 1 || k > x->length())
        throw ValidationError("pad", "summand degrees must lie inside the complex");
    const Vec& unit = x->algebra().unit();
    std::vector<int> fibers;
    for (int s = 0; s <= x->length(); ++s)
        fibers.push_back(x->fiber_dim(s) + (s == k || s == k - 1 ? 1 : 0));
    std::vector<AMat> d;
    d.emplace_back();
    for (int s = 1; s <= x->length(); ++s) {
        AMat ds(fibers[s - 1], fibers[s]);
        for (const auto& [lj, v] : x->d(s).entries()) ds.set(lj.first, lj.second, v);
        if (s == k) ds.set(fibers[s - 1] - 1, fibers[s] - 1, unit);   // new slot: identity A -> A
        d.push_back(std::move(ds));
    }
    PaddedComplex out;
    out.padded = std::make_shared<FreeAComplex>(x->algebra_ptr(), std::move(fibers), std::move(d));
    out.padded->validate();

    out.include.src = x;
    out.include.dst = out.padded;
    out.include.degree = 0;
    out.project.src = out.padded;
    out.project.dst = x;
    out.project.degree = 0;
    for (int s = 0; s <= x->length(); ++s) {
        AMat inc(out.padded->fiber_dim(s), x->fiber_dim(s));
        AMat prj(x->fiber_dim(s), out.padded->fiber_dim(s));
        for (int j = 0; j < x->fiber_dim(s); ++j) {
            inc.set(j, j, unit);
            prj.set(j, j, unit);
        }
        if (!inc.is_zero()) out.include.comp[s] = std::move(inc);
        if (!prj.is_zero()) out.project.comp[s] = std::move(prj);
    }

    out.h_x.src = x;
    out.h_x.dst = x;
    out.h_x.degree = -1;

    out.h_padded.src = out.padded;
    out.h_padded.dst = out.padded;
    out.h_padded.degree = -1;
    AMat contraction(out.padded->fiber_dim(k), out.padded->fiber_dim(k - 1));
    contraction.set(out.padded->fiber_dim(k) - 1, out.padded->fiber_dim(k - 1) - 1,
                    scale(Scalar(-1), unit));
    out.h_padded.comp[k - 1] = std::move(contraction);
    return out;
}

}  // namespace heckalg
