#pragma once

#include "heckalg/resolutions.hpp"

namespace heckalg {

// A cochain sequence C^0 -> C^1 -> ... -> C^L with honest cohomology in
// degrees 0..L-1 (degree L lacks its outgoing constraint).
struct CochainSeq {
    std::vector<long> dims;              // sizes of C^s, s = 0..L
    std::vector<SparseMatrix> delta;     // delta[s]: C^s -> C^{s+1}, s = 0..L-1
    int top() const { return static_cast<int>(dims.size()) - 1; }

    struct Coh {
        int dim = 0;
        std::vector<Vec> reps;
        Subspace kernel, image;
        CosetReducer reducer;
    };
    Coh cohomology(int s) const;
};

// Hom_K(ker(eps)^{(x)s}, V) with the bar coboundary, V a left B-module.
// Cochain phi is flattened as (fiber word j, module coord t) -> j*dimV + t.
CochainSeq module_cochain_complex(const AugmentedSubalgebra& b, const LeftModule& v_over_b, int L);

// The same spaces with the d'-style differential (-1)^{s+1} phi^ o d, driven
// by the induced free A-complex and the A-module structure; used for
// Ext_A(A (x)_B K, -) and as an independent route for the Theorem 5 checks.
CochainSeq selfext_cochain_complex(const FreeAComplex& induced_bar, const LeftModule& v_over_a);

struct ModuleCohomology {
    CochainSeq seq;
    std::vector<int> dims;                    // degrees 0..L-1
    std::vector<std::vector<Vec>> reps;
    Subspace h0_subspace;                     // H^0 as a subspace of V
};
// Cohomology of V as a B-module (input module lives over B's parent algebra);
// checks H^0 = invariants(V, B) as canonical subspaces.
ModuleCohomology module_cohomology(const LeftModule& v_over_parent, const AugmentedSubalgebra& b,
                                   int L);

struct ModuleHomology {
    ChainComplex complex;                     // W (x) ker(eps)^{(x)s}, degrees 0..L
    std::vector<int> dims;                    // honest degrees 0..L-1
    std::vector<std::vector<Vec>> reps;
    std::vector<CosetReducer> reducers;
};
// W is a right module over B's parent, stored as a left module over the
// opposite algebra. Chains flatten as (fiber word j, module coord t) ->
// j*dimW + t, matching the cochain layout.
ModuleHomology module_homology(const LeftModule& w_over_opposite, const AugmentedSubalgebra& b, int L);

// phi o f for a degree-n module cocycle phi (flattened, A-route extension)
// and a degree-m Hecke cocycle f on the induced bar complex. Returns the
// class coordinates in H^{n+m}; checks closedness.
Vec act_on_cohomology(const LeftModule& v_over_a, const CochainSeq& seq, int n, const Vec& phi,
                      const HomCochain& f);

// (id_W (x) f) on a degree-m cycle; returns class coordinates in H_{m - deg f}.
Vec act_on_homology(const LeftModule& w_over_opposite, const ModuleHomology& mh, int m,
                    const Vec& cycle, const HomCochain& f);

struct DiracReport {
    Subspace observables;                     // subspace of A satisfying [b,a]V^B = 0
    bool closed_under_multiplication = false;
    Subspace invariant_subspace;              // V^B
    std::vector<SparseMatrix> induced_ops;    // operators of the basis on V^B
    Subspace operator_span;                   // span of flattened induced operators
};
DiracReport dirac_observables(AlgebraPtr a, const AugmentedSubalgebra& b, const LeftModule& v);

struct UniversalReductionReport {
    bool pass = false;
    bool components_are_observables = false;  // (0,0) parts of Hk^0 classes lie in A^B_V
    bool operators_contained = false;         // induced operators lie in the observable span
    bool action_matches_component = false;    // class action on V^B equals the (0,0) part action
    std::string detail;
};
// hk0_reps are degree-0 cocycles on the induced bar complex (window >= 1).
UniversalReductionReport universal_reduction_check(AlgebraPtr a, const AugmentedSubalgebra& b,
                                                   const LeftModule& v,
                                                   const std::vector<HomCochain>& hk0_reps);

}  // namespace heckalg
