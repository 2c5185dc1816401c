#include "heckalg/reduction.hpp"

#include "heckalg/errors.hpp"

namespace heckalg {

CochainSeq::Coh CochainSeq::cohomology(int s) const {
    if (s < 0 || s > top() - 1)
        throw DegreeOutOfRange("cochain cohomology at " + std::to_string(s) + " beyond honest window");
    Coh h;
    h.kernel = kernel_basis(delta[s]);
    h.image = s == 0 ? Subspace(static_cast<int>(dims[0])) : image_basis(delta[s - 1]);
    QuotientBasis q = quotient_basis(h.kernel, h.image);
    h.dim = q.dim;
    h.reps = q.representatives;
    h.reducer = CosetReducer(h.image, h.reps);
    return h;
}

CochainSeq module_cochain_complex(const AugmentedSubalgebra& b, const LeftModule& v_over_b, int L) {
    const int m = b.aug_kernel_dim();
    const int dv = v_over_b.dim();
    CochainSeq seq;
    long f = 1;
    for (int s = 0; s <= L; ++s) {
        seq.dims.push_back(f * dv);
        f *= m;
    }
    // action of the kernel basis elements on V
    std::vector<SparseMatrix> kact;
    for (int t = 0; t < m; ++t) kact.push_back(v_over_b.action_of(b.aug_kernel_basis_b()[t]));

    for (int s = 0; s <= L - 1; ++s) {
        const long fs = seq.dims[s] / dv;
        SparseMatrix delta(seq.dims[s + 1], seq.dims[s]);
        // (delta phi)(w_1..w_{s+1}) = w_1 phi(w_2..) + sum (-1)^k phi(..w_k w_{k+1}..)
        const long fs1 = seq.dims[s + 1] / dv;
        for (long row_word = 0; row_word < fs1; ++row_word) {
            std::vector<int> w = bar_word_of_index(row_word, m, s + 1);
            // first term: phi at rest, acted by w_1
            {
                std::vector<int> rest(w.begin() + 1, w.end());
                long col_word = bar_word_index(rest, m);
                const SparseMatrix& act = kact[w[0]];
                for (int r = 0; r < dv; ++r)
                    for (const auto& [c, val] : act.row(r))
                        delta.add_to(row_word * dv + r, col_word * dv + c, val);
            }
            for (int k = 1; k <= s; ++k) {
                const Vec& prod = b.kernel_product(w[k - 1], w[k]);
                Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
                for (int t = 0; t < m; ++t) {
                    if (heckalg::is_zero(prod[t])) continue;
                    std::vector<int> merged;
                    for (int p = 0; p < k - 1; ++p) merged.push_back(w[p]);
                    merged.push_back(t);
                    for (int p = k + 1; p < s + 1; ++p) merged.push_back(w[p]);
                    long col_word = bar_word_index(merged, m);
                    Scalar coeff = sign * prod[t];
                    for (int r = 0; r < dv; ++r) delta.add_to(row_word * dv + r, col_word * dv + r, coeff);
                }
            }
        }
        seq.delta.push_back(std::move(delta));
    }
    return seq;
}

CochainSeq selfext_cochain_complex(const FreeAComplex& x, const LeftModule& v_over_a) {
    const int dv = v_over_a.dim();
    CochainSeq seq;
    for (int s = 0; s <= x.length(); ++s) seq.dims.push_back(static_cast<long>(x.fiber_dim(s)) * dv);
    for (int s = 0; s <= x.length() - 1; ++s) {
        SparseMatrix delta(seq.dims[s + 1], seq.dims[s]);
        Scalar sign = (s % 2 == 0) ? Scalar(-1) : Scalar(1);   // (-1)^{s+1}
        // (delta phi)(f_j) = sign * sum_l rho_V(alpha_{lj}) phi(f_l) with
        // alpha the entries of d_{s+1}
        for (const auto& [lj, alpha] : x.d(s + 1).entries()) {
            auto [l, j] = lj;
            SparseMatrix act = v_over_a.action_of(alpha);
            for (int r = 0; r < dv; ++r)
                for (const auto& [c, val] : act.row(r))
                    delta.add_to(static_cast<long>(j) * dv + r, static_cast<long>(l) * dv + c, sign * val);
        }
        seq.delta.push_back(std::move(delta));
    }
    return seq;
}

ModuleCohomology module_cohomology(const LeftModule& v_over_parent, const AugmentedSubalgebra& b,
                                   int L) {
    ModuleCohomology out;
    LeftModule vb = restrict_to_subalgebra(v_over_parent, b);
    out.seq = module_cochain_complex(b, vb, L);
    for (int s = 0; s <= L - 1; ++s) {
        auto h = out.seq.cohomology(s);
        out.dims.push_back(h.dim);
        out.reps.push_back(h.reps);
    }
    // H^0 = ker(delta_0) inside C^0 = V equals the eps-twisted invariants.
    out.h0_subspace = kernel_basis(out.seq.delta[0]);
    Subspace inv = invariants(v_over_parent, b);
    if (!(out.h0_subspace == inv))
        throw ValidationError("module-cohomology", "H^0 differs from the invariant subspace");
    return out;
}

ModuleHomology module_homology(const LeftModule& w_over_opposite, const AugmentedSubalgebra& b,
                               int L) {
    const int m = b.aug_kernel_dim();
    const int dw = w_over_opposite.dim();
    std::vector<int> dims;
    std::vector<SparseMatrix> boundary;
    long f = 1;
    for (int s = 0; s <= L; ++s) {
        dims.push_back(static_cast<int>(f) * dw);
        f *= m;
    }
    boundary.emplace_back(0, dims[0]);
    // right action of the kernel elements: left action in the opposite algebra
    std::vector<SparseMatrix> kact;
    for (int t = 0; t < m; ++t) kact.push_back(w_over_opposite.action_of(b.aug_kernel_basis_a()[t]));

    for (int s = 1; s <= L; ++s) {
        long fs = 1;
        for (int p = 0; p < s; ++p) fs *= m;
        SparseMatrix d(dims[s - 1], dims[s]);
        for (long col_word = 0; col_word < fs; ++col_word) {
            std::vector<int> w = bar_word_of_index(col_word, m, s);
            {
                std::vector<int> rest(w.begin() + 1, w.end());
                long row_word = bar_word_index(rest, m);
                const SparseMatrix& act = kact[w[0]];
                for (int r = 0; r < dw; ++r)
                    for (const auto& [c, val] : act.row(r))
                        d.add_to(row_word * dw + r, col_word * dw + c, val);
            }
            for (int k = 1; k <= s - 1; ++k) {
                const Vec& prod = b.kernel_product(w[k - 1], w[k]);
                Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
                for (int t = 0; t < m; ++t) {
                    if (heckalg::is_zero(prod[t])) continue;
                    std::vector<int> merged;
                    for (int p = 0; p < k - 1; ++p) merged.push_back(w[p]);
                    merged.push_back(t);
                    for (int p = k + 1; p < s; ++p) merged.push_back(w[p]);
                    long row_word = bar_word_index(merged, m);
                    Scalar coeff = sign * prod[t];
                    for (int r = 0; r < dw; ++r) d.add_to(row_word * dw + r, col_word * dw + r, coeff);
                }
            }
        }
        boundary.push_back(std::move(d));
    }
    ModuleHomology out;
    out.complex = ChainComplex(0, dims, boundary);
    out.complex.validate();
    for (int s = 0; s <= L - 1; ++s) {
        auto h = out.complex.homology(s);
        out.dims.push_back(h.dim);
        out.reps.push_back(h.representatives);
        out.reducers.emplace_back(h.image, h.representatives);
    }
    return out;
}

Vec act_on_cohomology(const LeftModule& v_over_a, const CochainSeq& seq, int n, const Vec& phi,
                      const HomCochain& f) {
    const int dv = v_over_a.dim();
    const FreeAComplex& x = *f.src;
    const int m_deg = f.degree;
    const int target = n + m_deg;
    if (target < 0) return Vec{};   // zero group
    if (target > seq.top() - 1)
        throw WindowUnderflow("module action lands in degree " + std::to_string(target));
    // psi(f_j) = sum_l rho_V(f-entry(l, j)) phi(f_l), f-component at s = n + m
    const AMat comp = f.component_or_zero(target);
    Vec psi = zero_vec(seq.dims[target]);
    for (const auto& [lj, alpha] : comp.entries()) {
        auto [l, j] = lj;
        SparseMatrix act = v_over_a.action_of(alpha);
        for (int r = 0; r < dv; ++r)
            for (const auto& [c, val] : act.row(r))
                psi[static_cast<long>(j) * dv + r] += val * phi[static_cast<long>(l) * dv + c];
    }
    (void)x;
    auto h = seq.cohomology(target);
    if (!is_zero_vec(seq.delta[target].apply(psi)))
        throw ValidationError("action", "phi o f is not closed");
    auto coords = h.reducer.coordinates(psi);
    if (!coords) throw ValidationError("action", "phi o f escaped the cohomology window");
    return *coords;
}

Vec act_on_homology(const LeftModule& w_over_opposite, const ModuleHomology& mh, int m,
                    const Vec& cycle, const HomCochain& f) {
    const int dw = w_over_opposite.dim();
    const int n = f.degree;
    const int target = m - n;
    if (target < 0) return Vec{};   // zero group
    if (target > static_cast<int>(mh.dims.size()) - 1)
        throw WindowUnderflow("homology action lands beyond the window");
    const AMat comp = f.component_or_zero(m);
    Vec out = zero_vec(mh.complex.dim(target));
    // w (x) f_j |-> (w . alpha_{lj}) (x) f_l; the right A-action is the
    // opposite-algebra left action.
    for (const auto& [lj, alpha] : comp.entries()) {
        auto [l, j] = lj;
        SparseMatrix act = w_over_opposite.action_of(alpha);
        for (int r = 0; r < dw; ++r)
            for (const auto& [c, val] : act.row(r))
                out[static_cast<long>(l) * dw + r] += val * cycle[static_cast<long>(j) * dw + c];
    }
    if (!is_zero_vec(mh.complex.diff(target).apply(out)))
        throw ValidationError("action", "(id (x) f) cycle is not a cycle");
    auto coords = mh.reducers[target].coordinates(out);
    if (!coords) throw ValidationError("action", "homology action escaped the window");
    return *coords;
}

DiracReport dirac_observables(AlgebraPtr a, const AugmentedSubalgebra& b, const LeftModule& v) {
    DiracReport rep;
    const FinAlgebra& A = *a;
    const int da = A.dim();
    const int dv = v.dim();
    rep.invariant_subspace = invariants(v, b);
    const int k = rep.invariant_subspace.dim();

    // unknowns: a in A with (rho(b_j) - eps_j) rho(a) w = 0 for all j, w
    SparseMatrix system(b.dim() * k * dv, da);
    std::vector<Vec> cols;   // rho(e_i) w per (i, w)
    for (int j = 0; j < b.dim(); ++j) {
        SparseMatrix bj = v.action_of(b.inclusion()[j]);
        for (int wi = 0; wi < k; ++wi) {
            Vec w = rep.invariant_subspace.basis_vector(wi);
            for (int i = 0; i < da; ++i) {
                Vec aw = v.action_basis(i).apply(w);
                Vec lhs = bj.apply(aw);
                add_scaled(lhs, -b.eps()[j], aw);
                long row0 = (static_cast<long>(j) * k + wi) * dv;
                for (int t = 0; t < dv; ++t)
                    if (!heckalg::is_zero(lhs[t])) system.add_to(row0 + t, i, lhs[t]);
            }
        }
    }
    rep.observables = kernel_basis(system);

    // the observables form an algebra: check closure on a spanning set
    rep.closed_under_multiplication = true;
    for (int i = 0; i < rep.observables.dim() && rep.closed_under_multiplication; ++i)
        for (int j = 0; j < rep.observables.dim(); ++j) {
            Vec prod = A.multiply(rep.observables.basis_vector(i), rep.observables.basis_vector(j));
            if (!rep.observables.contains(prod)) {
                rep.closed_under_multiplication = false;
                break;
            }
        }

    // induced operators on V^B, flattened row-major into a span
    std::vector<Vec> flat_ops;
    for (int i = 0; i < rep.observables.dim(); ++i) {
        SparseMatrix op(k, k);
        SparseMatrix act = v.action_of(rep.observables.basis_vector(i));
        for (int wi = 0; wi < k; ++wi) {
            Vec image = act.apply(rep.invariant_subspace.basis_vector(wi));
            auto coords = rep.invariant_subspace.coordinates(image);
            if (!coords)
                throw ValidationError("dirac", "observable does not preserve the invariant subspace");
            for (int r = 0; r < k; ++r)
                if (!heckalg::is_zero((*coords)[r])) op.set(r, wi, (*coords)[r]);
        }
        Vec flat = zero_vec(static_cast<std::size_t>(k) * k);
        for (int r = 0; r < k; ++r)
            for (const auto& [c, val] : op.row(r)) flat[static_cast<long>(r) * k + c] = val;
        flat_ops.push_back(std::move(flat));
        rep.induced_ops.push_back(std::move(op));
    }
    rep.operator_span = Subspace::from_vectors(k * k, flat_ops);
    return rep;
}

UniversalReductionReport universal_reduction_check(AlgebraPtr a, const AugmentedSubalgebra& b,
                                                   const LeftModule& v,
                                                   const std::vector<HomCochain>& hk0_reps) {
    UniversalReductionReport rep;
    DiracReport dirac = dirac_observables(a, b, v);
    const Subspace& inv = dirac.invariant_subspace;
    const int k = inv.dim();
    const int da = a->dim();

    rep.components_are_observables = true;
    rep.operators_contained = true;
    rep.action_matches_component = true;

    ModuleCohomology mc = module_cohomology(v, b, 2);

    for (const auto& f : hk0_reps) {
        // the (0,0)-bidegree part is an element of A: f_0 = right multiplication
        Vec a_f = f.component_or_zero(0).entry(0, 0, da);
        if (!dirac.observables.contains(a_f)) {
            rep.components_are_observables = false;
            rep.detail = "a Hecke degree-0 component is not a Dirac observable";
        }
        // operator of a_f on V^B, flattened, must lie in the observable span
        SparseMatrix act = v.action_of(a_f);
        Vec flat = zero_vec(static_cast<std::size_t>(k) * k);
        bool preserves = true;
        for (int wi = 0; wi < k && preserves; ++wi) {
            Vec image = act.apply(inv.basis_vector(wi));
            auto coords = inv.coordinates(image);
            if (!coords) {
                preserves = false;
                break;
            }
            for (int r = 0; r < k; ++r) flat[static_cast<long>(r) * k + wi] = (*coords)[r];
        }
        if (!preserves || !dirac.operator_span.contains(flat)) {
            rep.operators_contained = false;
            if (rep.detail.empty()) rep.detail = "Hecke degree-0 operator escapes the observable span";
        }
        // the class action on H^0(V) = V^B uses only the (0,0) component
        for (int wi = 0; wi < k && preserves; ++wi) {
            Vec w = inv.basis_vector(wi);
            Vec coords_by_action = act_on_cohomology(v, mc.seq, 0, w, f);
            auto h0 = mc.seq.cohomology(0);
            auto coords_direct = h0.reducer.coordinates(act.apply(w));
            if (!coords_direct || coords_by_action != *coords_direct) {
                rep.action_matches_component = false;
                if (rep.detail.empty()) rep.detail = "class action differs from the component action";
            }
        }
    }
    rep.pass = rep.components_are_observables && rep.operators_contained && rep.action_matches_component;
    if (rep.pass) rep.detail = "Hk^0 acts on V^B through Dirac observables";
    return rep;
}

}  // namespace heckalg
