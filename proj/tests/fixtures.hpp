#pragma once

#include <memory>

#include "heckalg/algebra.hpp"

namespace heckalg::fixtures {

// K[x]/(x^2), basis {1, x}
inline AlgebraPtr dual_numbers() {
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, zero_vec(2)));
    t[0][0] = {1, 0};
    t[0][1] = {0, 1};
    t[1][0] = {0, 1};
    t[1][1] = {0, 0};
    return std::make_shared<FinAlgebra>(2, std::vector<std::string>{"1", "x"}, Vec{1, 0}, t);
}

// M_2(Q), basis {E11, E12, E21, E22}
inline AlgebraPtr m2() {
    std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, zero_vec(4)));
    auto put = [&](int i, int j, int k) { t[i][j][k] = 1; };
    put(0, 0, 0);
    put(0, 1, 1);
    put(1, 2, 0);
    put(1, 3, 1);
    put(2, 0, 2);
    put(2, 1, 3);
    put(3, 2, 2);
    put(3, 3, 3);
    return std::make_shared<FinAlgebra>(4, std::vector<std::string>{"E11", "E12", "E21", "E22"},
                                        Vec{1, 0, 0, 1}, t);
}

// B = A for the dual numbers, eps(x) = 0
inline AugmentedSubalgebra dual_self(AlgebraPtr a) {
    return AugmentedSubalgebra(std::move(a), {Vec{1, 0}, Vec{0, 1}}, Vec{1, 0});
}

// B = span{1, E12} in M_2, eps(E12) = 0
inline AugmentedSubalgebra m2_nilpotent(AlgebraPtr a) {
    return AugmentedSubalgebra(std::move(a), {Vec{1, 0, 0, 1}, Vec{0, 1, 0, 0}}, Vec{1, 0});
}

// B = K * 1
inline AugmentedSubalgebra trivial_sub(AlgebraPtr a) {
    Vec unit = a->unit();
    return AugmentedSubalgebra(std::move(a), {unit}, Vec{1});
}

inline LiePtr abelian_lie(int dim) {
    std::vector<std::vector<Vec>> br(dim, std::vector<Vec>(dim, zero_vec(dim)));
    return std::make_shared<LieAlgebra>(dim, br);
}

// [e0, e1] = e1
inline LiePtr nonabelian2() {
    std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, zero_vec(2)));
    br[0][1] = {0, 1};
    br[1][0] = {0, -1};
    return std::make_shared<LieAlgebra>(2, br);
}

// rho(e) = E12 on M_2
inline LieAction m2_rank1_action(AlgebraPtr a) {
    return LieAction(abelian_lie(1), std::move(a), {Vec{0, 1, 0, 0}});
}

// rho(e0) = (E11 - E22)/2, rho(e1) = E12 on M_2
inline LieAction m2_rank2_action(AlgebraPtr a) {
    return LieAction(nonabelian2(), std::move(a),
                     {Vec{Scalar(1, 2), 0, 0, Scalar(-1, 2)}, Vec{0, 1, 0, 0}});
}

// rho(e) = x on the dual numbers
inline LieAction dual_rank1_action(AlgebraPtr a) {
    return LieAction(abelian_lie(1), std::move(a), {Vec{0, 1}});
}

}  // namespace heckalg::fixtures
