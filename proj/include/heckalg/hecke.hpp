#pragma once

#include "heckalg/reduction.hpp"

namespace heckalg {

enum class ResolutionKind { Bar, CE, File };

struct HeckeOptions {
    int L = 4;
    int min_degree = 0;
    int max_degree = 2;
    int stability_passes = 2;
    int shift_checks = 1;
    unsigned int seed = 12345;
};

struct HeckeResult {
    CohomologyAlgebra algebra;                  // base-window table + representatives
    GradedAlgebraTable table_opposite;
    std::map<int, bool> stable;                 // per reported degree
    std::map<int, std::vector<int>> window_dims;   // degree -> dims across the windows used
    std::vector<int> tor;                       // Tor_n^B(A,K), n = 0..L-1 (bar route only)
    bool tor_checked = false;
    bool tor_vanishing = false;
    bool advisory = false;                      // Theorem 5 cross-checks unavailable
    std::string resolution_tag;
    int window = 0;
    ComplexPtr complex;                         // base-window induced complex over A
    std::shared_ptr<EndWindow> end;
    bool all_stable() const;
};

// Hk^*(A,B) via the induced bar complex; stability compares the dims across
// windows L .. L + passes - 1.
HeckeResult hecke_algebra_bar(AlgebraPtr a, const AugmentedSubalgebra& b, const HeckeOptions& opts);

// Hk-style cohomology over the finite Chevalley-Eilenberg complex; exact, no
// truncation, every degree stable.
HeckeResult hecke_algebra_ce(const LieAction& act, const HeckeOptions& opts);

// User-supplied free resolution of K over B (fiber format + augmentation);
// stability shrinks the window since the file cannot be extended.
HeckeResult hecke_algebra_file(AlgebraPtr a, const AugmentedSubalgebra& b, const FreeAComplex& xb,
                               const Vec& fiber_aug, const HeckeOptions& opts);

// Direct Hk^0 model: the invariants of A (x)_B K with the product
// [a1][a2] = [a1 a2]; well-definedness is asserted by shifting the lifted
// representatives by ideal elements.
struct Hk0Direct {
    InducedModule induced;
    Subspace inv;                 // inside A/J
    std::vector<Vec> rep_lifts;   // lifts of the invariant basis to A
    GradedAlgebraTable table;     // degree 0 only
    int unit_class = -1;          // index of the class containing [1], -1 if absent
};
Hk0Direct hk0_direct(AlgebraPtr a, const AugmentedSubalgebra& b, unsigned int seed = 12345);

// Tor_n^B(A,K) for n = 0..L-1 as the homology of the induced bar complex.
std::vector<int> tor_dims(AlgebraPtr a, const AugmentedSubalgebra& b, int L);

// Ext_B^n(K,V) for n = 0..L-1, V a left B-module.
std::vector<int> ext_B_dims(const AugmentedSubalgebra& b, const LeftModule& v_over_b, int L);

struct SelfExtReport {
    std::vector<int> dims;        // Ext_A^n(A (x)_B K, A (x)_B K), n = 0..L-1
    bool advisory = false;        // Tor vanishing failed; complex is not a resolution
    std::vector<int> tor;
};
SelfExtReport ext_A_selfext(AlgebraPtr a, const AugmentedSubalgebra& b, int L);

// Remark-1 criterion: candidate N with {n_i b_j} a basis of A.
bool freeness_certificate(AlgebraPtr a, const AugmentedSubalgebra& b, const Subspace& candidate);

// Throws UnstableTruncation naming the first degree whose dimension still
// moves across the stability windows.
void require_stable(const HeckeResult& r);

struct Thm3Report {
    bool identical = false;
    std::string detail;
};
// Builds the induced complex along both bar-model routes of the Theorem 3
// proof and compares the resulting data literally.
Thm3Report theorem3_consistency(AlgebraPtr a, const AugmentedSubalgebra& b, int L);

}  // namespace heckalg
