#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "heckalg/brst.hpp"
#include "heckalg/errors.hpp"
#include "heckalg/linalg.hpp"
#include "oracles.hpp"

using namespace heckalg;

namespace {

SparseMatrix random_sparse(int rows, int cols, std::mt19937& rng, double density = 0.25) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (u(rng) < density) {
                Scalar v(num(rng), den(rng));
                v.canonicalize();
                m.set(r, c, v);
            }
    return m;
}

Vec random_vec(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    Vec v = zero_vec(n);
    for (int i = 0; i < n; ++i) v[i] = num(rng);
    return v;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/6") == Scalar(1, 2));
    CHECK(parse_rational("-4/2") == Scalar(-2));
    CHECK(rational_string(parse_rational("10/4")) == "5/2");
    CHECK(rational_string(Scalar(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("exact arithmetic identities") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 15);
    for (int t = 0; t < 200; ++t) {
        mpz_class a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Scalar x(a, b), y(c, d);
        x.canonicalize();
        y.canonicalize();
        Scalar sum = x + y;
        // cross multiplication
        Scalar expected(a * d + c * b, b * d);
        expected.canonicalize();
        CHECK(sum == expected);
        CHECK(sum.get_den() > 0);
        CHECK(gcd(mpz_class(sum.get_num()), mpz_class(sum.get_den())) == 1);
    }
}

TEST_CASE("kernel of the identity is zero") {
    CHECK(kernel_basis(SparseMatrix::identity(2)).dim() == 0);
}

TEST_CASE("kernel of [1, -1]") {
    SparseMatrix m(1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, -1);
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 1);
    CHECK(k.basis_vector(0) == Vec{1, 1});
}

TEST_CASE("image of the zero matrix and of an invertible matrix") {
    CHECK(image_basis(SparseMatrix(4, 3)).dim() == 0);
    SparseMatrix m(3, 3);
    m.set(0, 0, 2);
    m.set(0, 1, 1);
    m.set(1, 1, 3);
    m.set(2, 2, Scalar(1, 5));
    CHECK(image_basis(m).dim() == 3);
    CHECK(image_basis(m) == Subspace::full(3));
}

TEST_CASE("rank and kernel against the dense oracle") {
    std::mt19937 rng(42);
    for (int t = 0; t < 12; ++t) {
        SparseMatrix m = random_sparse(20, 30, rng);
        int r = rank(m);
        CHECK(r == oracles::dense_rank(m));
        CHECK(r + kernel_basis(m).dim() == m.cols());
    }
}

TEST_CASE("canonical forms are invariant under row permutation") {
    std::mt19937 rng(5);
    for (int t = 0; t < 8; ++t) {
        SparseMatrix m = random_sparse(8, 10, rng, 0.4);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SparseMatrix p(8, 10);
        for (int r = 0; r < 8; ++r)
            for (const auto& [c, v] : m.row(r)) p.set(perm[r], c, v);
        CHECK(kernel_basis(m) == kernel_basis(p));
        // row permutation changes the column space of nothing: compare kernels
        // of the transposes instead for the image statement
        CHECK(image_basis(m.transpose()) == image_basis(p.transpose()));
    }
}

TEST_CASE("solve: identity, underdetermined, random consistency") {
    auto id = SparseMatrix::identity(3);
    Vec rhs{1, 2, Scalar(3, 2)};
    CHECK(*solve(id, rhs) == rhs);

    SparseMatrix m(1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    auto x = solve(m, Vec{1});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == 1);   // verified by substitution

    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        SparseMatrix a = random_sparse(9, 7, rng, 0.4);
        Vec v = random_vec(7, rng);
        Vec rhs2 = a.apply(v);
        auto sol = solve(a, rhs2);
        REQUIRE(sol);
        CHECK(a.apply(*sol) == rhs2);
    }
    SparseMatrix bad(2, 1);
    bad.set(0, 0, 1);
    bad.set(1, 0, 1);
    CHECK(!solve(bad, Vec{0, 1}));   // NoSolution is a value
}

TEST_CASE("quotients and containment") {
    Subspace full = Subspace::full(2);
    Subspace line = Subspace::from_vectors(2, {Vec{1, 0}});
    auto q = quotient_basis(full, line);
    CHECK(q.dim == 1);
    CHECK(q.representatives[0] == Vec{0, 1});
    CHECK(quotient_basis(line, line).dim == 0);

    Subspace other = Subspace::from_vectors(2, {Vec{0, 1}});
    CHECK_THROWS_AS(quotient_basis(line, other), NotASubspace);
}

TEST_CASE("subspace equality is literal data equality") {
    Subspace a = Subspace::from_vectors(3, {Vec{1, 1, 0}, Vec{0, 2, 2}});
    Subspace b = Subspace::from_vectors(3, {Vec{2, 2, 0}, Vec{1, 3, 2}, Vec{3, 5, 2}});
    CHECK(a == b);
}

TEST_CASE("BRST 16x16 differential: sparse kernel equals dense kernel") {
    LieAction act = fixtures::m2_rank1_action(fixtures::m2());
    BrstComplex bc = build_brst_complex(act);
    const FinAlgebra& A = *bc.algebra;
    const int da = A.dim();

    // flat basis (degree-sorted) of A^opp (x) C and the full 16x16 matrix of
    // the supercommutator differential
    std::vector<std::pair<int, CliffordMono>> flat;
    for (const auto& [deg, basis] : bc.basis)
        for (const auto& e : basis) flat.push_back(e);
    REQUIRE(flat.size() == 16);
    auto index_of = [&](int i, const CliffordMono& m) {
        for (std::size_t k = 0; k < flat.size(); ++k)
            if (flat[k].first == i && flat[k].second == m) return static_cast<int>(k);
        REQUIRE(false);
        return -1;
    };
    SparseMatrix d_total(16, 16);
    for (std::size_t k = 0; k < flat.size(); ++k) {
        ACliffordElement u;
        u.rank = bc.rank;
        Vec v = zero_vec(da);
        v[flat[k].first] = 1;
        u.add_term(flat[k].second, v);
        ACliffordElement left = ac_multiply(A, bc.element.matched, u);
        ACliffordElement right = ac_multiply(A, u, bc.element.matched);
        ACliffordElement du = mono_parity(flat[k].second) == 0 ? left.minus(right) : left.plus(right);
        for (const auto& [m, av] : du.terms)
            for (int i = 0; i < da; ++i)
                if (!is_zero(av[i])) d_total.set(index_of(i, m), static_cast<int>(k), av[i]);
    }
    CHECK(d_total.multiply(d_total).is_zero());
    CHECK(kernel_basis(d_total).dim() == oracles::dense_kernel_dim(d_total));
}
