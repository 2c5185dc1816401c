#pragma once

#include "heckalg/complexes.hpp"

namespace heckalg {

// Word index bookkeeping for the tensor powers of ker(eps): degree-s fiber
// basis is all words of length s over the kernel basis, ordered big-endian.
int bar_word_index(const std::vector<int>& word, int letters);
std::vector<int> bar_word_of_index(long index, int letters, int length);

// Normalized bar resolution of K over B: X_s = B (x) ker(eps)^{(x)s}. The
// tensor slots are drawn from ker(eps), so the last term of the bar
// differential dies under eps and kernel-slot products stay in the kernel.
FreeAComplex bar_resolution_B(const AugmentedSubalgebra& b, int L);

// Entries pushed along the inclusion B -> A; turns a free B-complex into the
// induced free A-complex with the same fibers.
FreeAComplex tensor_up(AlgebraPtr a, const AugmentedSubalgebra& b, const FreeAComplex& xb);

// A (x)_B (bar resolution of K): the complex computing both Hk^*(A,B) and
// Tor^B(A,K).
FreeAComplex induced_bar_complex(AlgebraPtr a, const AugmentedSubalgebra& b, int L);

// Chevalley-Eilenberg style complex A (x) Lambda(g) with the wedge-formula
// differential; rho acts by right multiplication. d^2 = 0 is asserted.
FreeAComplex ce_complex(const LieAction& act);

// Scalar complex together with the B-action per degree, for resolution checks.
struct BModuleComplex {
    ChainComplex scalar;
    std::vector<std::vector<SparseMatrix>> action;   // [degree][b-basis]
    Vec augmentation;                                // functional on degree 0
};
BModuleComplex as_b_module_complex(const AugmentedSubalgebra& b, const FreeAComplex& xb,
                                   const Vec& fiber_aug);

struct ResolutionReport {
    bool pass = false;
    int failed_degree = -1;
    std::string detail;
};
// Checks d^2 = 0, B-linearity of d, exactness in degrees 1..L-1, and that
// H_0 is one-dimensional with B acting through eps.
ResolutionReport validate_resolution(const AugmentedSubalgebra& b, const BModuleComplex& x, int L);

// Comparison lifts between two validated free resolutions of K over B:
// chain maps F: X -> X', F': X' -> X lifting the identity of K, plus
// homotopies F'F - id = d h + h d and FF' - id = d h' + h' d, constructed
// degree by degree and verified exactly on the window.
struct Comparison {
    HomCochain F, Fp, h, hp;
};
Comparison lift_comparison(const AugmentedSubalgebra& b, ComplexPtr xb, ComplexPtr xpb,
                           const Vec& aug_x, const Vec& aug_xp);

// Push a degree-0/-1 map between free B-complexes through tensor_up.
HomCochain tensor_up_map(const AugmentedSubalgebra& b, const HomCochain& f, ComplexPtr src_a,
                         ComplexPtr dst_a);

// x (+) (0 -> A = A -> 0) concentrated in degrees (k, k-1), with the evident
// inclusion/projection and the contracting homotopy of the summand.
struct PaddedComplex {
    ComplexPtr padded;
    HomCochain include;    // x -> padded
    HomCochain project;    // padded -> x
    HomCochain h_x;        // zero
    HomCochain h_padded;   // contraction of the summand
};
PaddedComplex pad_with_acyclic(ComplexPtr x, int k);

}  // namespace heckalg
