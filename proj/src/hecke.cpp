#include "heckalg/hecke.hpp"

#include <random>

#include "heckalg/errors.hpp"

namespace heckalg {

bool HeckeResult::all_stable() const {
    for (const auto& [n, s] : stable)
        if (!s) return false;
    return true;
}

namespace {

// Shared tail: cohomology table on the base window plus per-degree stability
// from the dims seen across auxiliary windows.
HeckeResult finish(std::shared_ptr<EndWindow> base, std::vector<EndWindow> aux,
                   const HeckeOptions& opts, std::string tag) {
    HeckeResult out;
    out.resolution_tag = std::move(tag);
    out.window = base->window();
    out.complex = base->complex_ptr();
    out.end = std::move(base);

    CohomologyAlgebraOptions copts;
    copts.shift_checks = opts.shift_checks;
    copts.seed = opts.seed;
    out.algebra = cohomology_algebra(*out.end, opts.min_degree, opts.max_degree, copts);
    out.table_opposite = out.algebra.table.opposite();

    for (int n = opts.min_degree; n <= opts.max_degree; ++n) {
        std::vector<int> dims{out.algebra.table.dims.at(n)};
        for (auto& w : aux) dims.push_back(w.cohomology(n).dim);
        bool stable = true;
        for (int d : dims) stable = stable && d == dims[0];
        out.window_dims[n] = std::move(dims);
        out.stable[n] = stable;
    }
    return out;
}

// Negative reported degrees need deeper carrier tails for their coboundaries.
int carrier_extra(const HeckeOptions& opts) { return std::max(1, 1 - opts.min_degree); }

}  // namespace

HeckeResult hecke_algebra_bar(AlgebraPtr a, const AugmentedSubalgebra& b, const HeckeOptions& opts) {
    if (opts.L < 1) throw ValidationError("hecke", "window L must be >= 1");
    const int passes = std::max(1, opts.stability_passes);
    const int extra = carrier_extra(opts);
    FreeAComplex big = induced_bar_complex(a, b, opts.L + passes - 1 + extra);
    auto carrier_for = [&](int Lw) {
        return std::make_shared<FreeAComplex>(big.truncated(Lw + extra));
    };
    auto base = std::make_shared<EndWindow>(carrier_for(opts.L), opts.L);
    std::vector<EndWindow> aux;
    for (int t = 1; t < passes; ++t) aux.emplace_back(carrier_for(opts.L + t), opts.L + t);

    HeckeResult out = finish(std::move(base), std::move(aux), opts, "bar");
    out.tor = tor_dims(a, b, opts.L);
    out.tor_checked = true;
    out.tor_vanishing = true;
    for (std::size_t n = 1; n < out.tor.size(); ++n) out.tor_vanishing = out.tor_vanishing && out.tor[n] == 0;
    out.advisory = !out.tor_vanishing;
    return out;
}

HeckeResult hecke_algebra_ce(const LieAction& act, const HeckeOptions& opts) {
    auto base = std::make_shared<EndWindow>(std::make_shared<FreeAComplex>(ce_complex(act)));
    // finite complex: the window is the whole complex, every degree exact
    return finish(std::move(base), {}, opts, "ce");
}

HeckeResult hecke_algebra_file(AlgebraPtr a, const AugmentedSubalgebra& b, const FreeAComplex& xb,
                               const Vec& fiber_aug, const HeckeOptions& opts) {
    BModuleComplex check = as_b_module_complex(b, xb, fiber_aug);
    ResolutionReport rep = validate_resolution(b, check, xb.length());
    if (!rep.pass)
        throw ValidationError("resolution-file", "supplied resolution fails at degree " +
                                                     std::to_string(rep.failed_degree) + ": " + rep.detail);
    auto carrier = std::make_shared<FreeAComplex>(tensor_up(a, b, xb));
    const int L = std::min(opts.L, std::max(1, xb.length() - carrier_extra(opts)));
    auto base = std::make_shared<EndWindow>(carrier, L);
    std::vector<EndWindow> aux;
    const int passes = std::max(1, opts.stability_passes);
    for (int t = 1; t < passes && L - t >= 1; ++t) aux.emplace_back(carrier, L - t);
    return finish(std::move(base), std::move(aux), opts, "file");
}

Hk0Direct hk0_direct(AlgebraPtr a, const AugmentedSubalgebra& b, unsigned int seed) {
    Hk0Direct out{induced_module(a, b), Subspace(), {}, {}, -1};
    const FinAlgebra& A = *a;
    out.inv = invariants(out.induced.module, b);
    const int k = out.inv.dim();

    // lift invariant classes to A through the canonical coset representatives
    for (int i = 0; i < k; ++i) {
        Vec v = out.inv.basis_vector(i);
        Vec lift = zero_vec(A.dim());
        for (int j = 0; j < out.induced.module.dim(); ++j) add_scaled(lift, v[j], out.induced.reps[j]);
        out.rep_lifts.push_back(std::move(lift));
    }

    out.table.nmin = 0;
    out.table.nmax = 0;
    out.table.dims[0] = k;
    std::vector<std::vector<Vec>> tab(k, std::vector<Vec>(k));
    auto product_coords = [&](const Vec& x, const Vec& y) {
        Vec prod = A.multiply(x, y);
        Vec img = out.induced.project(prod);
        auto coords = out.inv.coordinates(img);
        if (!coords) throw ValidationError("hk0", "product of invariants left the invariant subspace");
        return *coords;
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) tab[i][j] = product_coords(out.rep_lifts[i], out.rep_lifts[j]);

    // well-definedness: representatives shifted by ideal elements give the
    // same products
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 4; ++trial) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Vec xi = out.rep_lifts[i];
                Vec yj = out.rep_lifts[j];
                for (int t = 0; t < out.induced.ideal.dim(); ++t) {
                    add_scaled(xi, Scalar(coeff(rng)), out.induced.ideal.basis_vector(t));
                    add_scaled(yj, Scalar(coeff(rng)), out.induced.ideal.basis_vector(t));
                }
                if (product_coords(xi, yj) != tab[i][j])
                    throw ValidationError("hk0", "product depends on the coset representative");
            }
    }
    out.table.products[{0, 0}] = std::move(tab);

    Vec unit_img = out.induced.project(A.unit());
    auto unit_coords = out.inv.coordinates(unit_img);
    if (unit_coords) {
        for (int i = 0; i < k; ++i)
            if (!heckalg::is_zero((*unit_coords)[i])) {
                out.unit_class = i;
                break;
            }
    }
    return out;
}

std::vector<int> tor_dims(AlgebraPtr a, const AugmentedSubalgebra& b, int L) {
    FreeAComplex x = induced_bar_complex(a, b, L);
    ChainComplex c = x.scalar_complex();
    std::vector<int> dims;
    for (int n = 0; n <= L - 1; ++n) dims.push_back(c.homology(n).dim);
    return dims;
}

std::vector<int> ext_B_dims(const AugmentedSubalgebra& b, const LeftModule& v_over_b, int L) {
    CochainSeq seq = module_cochain_complex(b, v_over_b, L);
    std::vector<int> dims;
    for (int n = 0; n <= L - 1; ++n) dims.push_back(seq.cohomology(n).dim);
    return dims;
}

SelfExtReport ext_A_selfext(AlgebraPtr a, const AugmentedSubalgebra& b, int L) {
    SelfExtReport rep;
    rep.tor = tor_dims(a, b, L);
    for (std::size_t n = 1; n < rep.tor.size(); ++n)
        if (rep.tor[n] != 0) rep.advisory = true;
    FreeAComplex x = induced_bar_complex(a, b, L);
    InducedModule v = induced_module(a, b);
    CochainSeq seq = selfext_cochain_complex(x, v.module);
    for (int n = 0; n <= L - 1; ++n) rep.dims.push_back(seq.cohomology(n).dim);
    return rep;
}

bool freeness_certificate(AlgebraPtr a, const AugmentedSubalgebra& b, const Subspace& candidate) {
    const FinAlgebra& A = *a;
    const int nn = candidate.dim();
    const int nb = b.dim();
    if (nn * nb != A.dim()) return false;
    SparseMatrix m(A.dim(), nn * nb);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nb; ++j) {
            Vec prod = A.multiply(candidate.basis_vector(i), b.inclusion()[j]);
            for (int r = 0; r < A.dim(); ++r)
                if (!heckalg::is_zero(prod[r])) m.set(r, i * nb + j, prod[r]);
        }
    return rank(m) == A.dim();
}

void require_stable(const HeckeResult& r) {
    for (const auto& [n, s] : r.stable)
        if (!s)
            throw UnstableTruncation(n, "window dims " + [&] {
                std::string out;
                for (int d : r.window_dims.at(n)) out += std::to_string(d) + " ";
                return out;
            }());
}

Thm3Report theorem3_consistency(AlgebraPtr a, const AugmentedSubalgebra& b, int L) {
    Thm3Report rep;
    // route 1: A (x)_B (B (x) T(I(B)) (x) K)
    FreeAComplex route1 = induced_bar_complex(a, b, L);

    // route 2: (A (x) T(I(B)) (x) B) (x)_B K. The middle complex is the free
    // resolution of A as a right B-module; the B slot then collapses via eps.
    const FinAlgebra& A = *a;
    const FinAlgebra& B = b.algebra();
    const int m = b.aug_kernel_dim();
    const int db = B.dim();
    const Vec& unitA = A.unit();

    std::vector<int> big_fibers;      // (ker eps)^{(x)s} (x) B
    std::vector<long> word_counts;
    long f = 1;
    for (int s = 0; s <= L; ++s) {
        word_counts.push_back(f);
        big_fibers.push_back(static_cast<int>(f) * db);
        f *= m;
    }
    std::vector<AMat> big_d;
    big_d.emplace_back();
    for (int s = 1; s <= L; ++s) {
        AMat ds(big_fibers[s - 1], big_fibers[s]);
        for (long w_idx = 0; w_idx < word_counts[s]; ++w_idx) {
            std::vector<int> w = bar_word_of_index(w_idx, m, s);
            for (int t = 0; t < db; ++t) {
                int col = static_cast<int>(w_idx) * db + t;
                // a[w1..ws]b -> a w1 [w2..ws] b
                {
                    std::vector<int> rest(w.begin() + 1, w.end());
                    ds.add(bar_word_index(rest, m) * db + t, col, b.aug_kernel_basis_a()[w[0]]);
                }
                // interior contractions
                for (int k = 1; k <= s - 1; ++k) {
                    const Vec& prod = b.kernel_product(w[k - 1], w[k]);
                    Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
                    for (int u = 0; u < m; ++u) {
                        if (heckalg::is_zero(prod[u])) continue;
                        std::vector<int> merged;
                        for (int p = 0; p < k - 1; ++p) merged.push_back(w[p]);
                        merged.push_back(u);
                        for (int p = k + 1; p < s; ++p) merged.push_back(w[p]);
                        ds.add(bar_word_index(merged, m) * db + t, col, scale(sign * prod[u], unitA));
                    }
                }
                // (-1)^s a[w1..w_{s-1}] (w_s b)
                {
                    Vec wb = B.multiply(b.aug_kernel_basis_b()[w[s - 1]], unit_vec(db, t));
                    std::vector<int> front(w.begin(), w.end() - 1);
                    long front_idx = bar_word_index(front, m);
                    Scalar sign = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
                    for (int u = 0; u < db; ++u) {
                        if (heckalg::is_zero(wb[u])) continue;
                        ds.add(static_cast<int>(front_idx) * db + u, col, scale(sign * wb[u], unitA));
                    }
                }
            }
        }
        big_d.push_back(std::move(ds));
    }
    FreeAComplex bimodule_bar(a, big_fibers, big_d);
    bimodule_bar.validate();

    // collapse kappa: (w, t) -> eps(b_t) w ; section sigma: w -> (w, 1_B)
    std::vector<AMat> route2_d;
    route2_d.emplace_back();
    bool same = true;
    std::string why;
    for (int s = 1; s <= L && same; ++s) {
        AMat ds(static_cast<int>(word_counts[s - 1]), static_cast<int>(word_counts[s]));
        for (const auto& [rc, v] : bimodule_bar.d(s).entries()) {
            auto [row_big, col_big] = rc;
            long row_word = row_big / db;
            int row_t = static_cast<int>(row_big % db);
            long col_word = col_big / db;
            int col_t = static_cast<int>(col_big % db);
            // sigma puts unit_coords in the B slot, kappa applies eps
            Scalar sigma_coeff = b.unit_coords()[col_t];
            if (heckalg::is_zero(sigma_coeff)) continue;
            Scalar kappa_coeff = b.eps_value(unit_vec(db, row_t));
            if (heckalg::is_zero(kappa_coeff)) continue;
            ds.add(static_cast<int>(row_word), static_cast<int>(col_word),
                   scale(sigma_coeff * kappa_coeff, v));
        }
        if (!(ds == route1.d(s))) {
            same = false;
            why = "differentials differ at degree " + std::to_string(s);
        }
        route2_d.push_back(std::move(ds));
    }
    rep.identical = same;
    rep.detail = same ? "both bar-model constructions yield literally identical complexes" : why;
    return rep;
}

}  // namespace heckalg
