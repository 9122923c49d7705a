#include <array>

#include "doctest.h"

#include "ainfty/ainfty.hpp"
#include "ainfty/catalog.hpp"

using namespace ainfty;

namespace {

void flip_entry(AInftyAlgebra& A, int arity, Tuple key) {
    const SparseVec* v = A.mu_entry(arity, key);
    REQUIRE(v != nullptr);
    A.set_mu(arity, key, vec_scale(*v, Scalar(-1)));
}

}  // namespace

TEST_CASE("from_dg conventions") {
    AInftyAlgebra C = make_algebra("free_C(4)");
    int t2 = C.space.index_of("t2");
    int t1t1 = C.space.index_of("t1t1");
    REQUIRE(t2 >= 0);
    // mu_1(t2) = -d(t2) = -t1^2
    const SparseVec* m1 = C.mu_entry(1, std::array{t2});
    REQUIRE(m1 != nullptr);
    CHECK(*m1 == vec_unit(t1t1, Scalar(-1)));

    AInftyAlgebra L = make_algebra("lambda1");
    int one = L.space.index_of("1"), xi = L.space.index_of("xi");
    CHECK(*L.mu_entry(2, std::array{one, xi}) == vec_unit(xi));

    AInftyAlgebra X = make_algebra("truncated_poly(6)");
    int x2 = X.space.index_of("x2"), x3 = X.space.index_of("x3"), x5 = X.space.index_of("x5");
    CHECK(*X.mu_entry(2, std::array{x2, x3}) == vec_unit(x5));
    CHECK(X.mu_entry(2, std::array{x3, x3}) == nullptr);  // truncation
}

TEST_CASE("from_dg rejects a broken differential") {
    DgAlgebraSpec s;
    s.name = "bad";
    s.space = BigradedSpace({{"1", 0, 0}, {"a", 0, 1}, {"b", 1, 1}});
    s.unit = 0;
    s.products[{0, 0}] = vec_unit(0);
    s.products[{0, 1}] = vec_unit(1);
    s.products[{1, 0}] = vec_unit(1);
    s.products[{0, 2}] = vec_unit(2);
    s.products[{2, 0}] = vec_unit(2);
    s.d[1] = vec_unit(2);
    // d(a) = b but d(a * a) is not matched: a*a missing while a has a product
    s.products[{1, 1}] = vec_unit(1);  // a*a = a violates Leibniz: d(a) = b vs b*a + a*b = 0
    CHECK_THROWS(from_dg(s));
}

TEST_CASE("check_structure passes on catalog algebras at small arity") {
    for (const char* key : {"lambda1", "dual_numbers", "y_cube", "truncated_poly(6)", "free_C(4)",
                            "tensor(lambda1,dual_numbers)"}) {
        AInftyAlgebra A = make_algebra(key);
        CheckReport rep = check_structure(A, 4);
        INFO(key, ": ", rep.first_failure);
        CHECK(rep.pass);
    }
}

TEST_CASE("mutation: flipped mu_2 sign is detected at a specific triple") {
    AInftyAlgebra C = make_algebra("free_C(4)");
    int t1 = C.space.index_of("t1");
    flip_entry(C, 2, {t1, t1});
    CheckReport rep = check_structure(C, 3);
    CHECK(!rep.pass);
    CHECK(rep.first_failure.find("relation fails") != std::string::npos);
}

TEST_CASE("mutation: flipped mu_1 sign breaks Leibniz-derived relations") {
    AInftyAlgebra C = make_algebra("free_C(4)");
    int t2 = C.space.index_of("t2");
    flip_entry(C, 1, {t2});
    CheckReport rep = check_structure(C, 3);
    CHECK(!rep.pass);
}

TEST_CASE("opposite: literal paper sign breaks strict unitality, adopted sign passes") {
    AInftyAlgebra X = make_algebra("truncated_poly(6)");
    AInftyAlgebra bad = opposite(X, /*literal_reversal_sign=*/true);
    CheckReport rbad = check_structure(bad, 3);
    CHECK(!rbad.pass);
    CHECK(rbad.first_failure.find("unitality") != std::string::npos);

    AInftyAlgebra good = opposite(X);
    CheckReport rgood = check_structure(good, 6);
    CHECK(rgood.pass);
}

TEST_CASE("opposite is an involution on tables") {
    for (const char* key : {"lambda1", "y_cube", "free_C(3)"}) {
        AInftyAlgebra A = make_algebra(key);
        AInftyAlgebra AA = opposite(opposite(A));
        REQUIRE(AA.mu.size() == A.mu.size());
        for (size_t n = 1; n < A.mu.size(); ++n) CHECK(AA.mu[n] == A.mu[n]);
    }
}

TEST_CASE("opposite of a DG algebra is from_dg of the opposite ring") {
    AInftyAlgebra L = make_algebra("lambda1");
    AInftyAlgebra Lop = opposite(L);
    // opposite ring of lambda1 equals lambda1 (one odd generator, xi^2 = 0)
    for (size_t n = 1; n < L.mu.size(); ++n) CHECK(Lop.mu[n] == L.mu[n]);

    // For y_cube the product reverses: y * y2 = 0 but y2 * y = 0 too; check
    // against an explicit from_dg of the reversed product table with Koszul
    // signs (-1)^{|a||b|}.
    AInftyAlgebra Y = make_algebra("y_cube");
    AInftyAlgebra Yop = opposite(Y);
    DgAlgebraSpec s;
    s.name = "y_cube_op";
    s.space = Y.space;
    s.unit = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a + b >= 3) continue;
            // a *_op b = (-1)^{|a||b|} b a = (-1)^{ab} y^{a+b}
            s.products[{a, b}] = vec_unit(a + b, parity_sign((Y.deg(a) * Y.deg(b)) & 1));
        }
    AInftyAlgebra Yop_ref = from_dg(s);
    for (size_t n = 1; n < Yop_ref.mu.size(); ++n) CHECK(Yop.mu[n] == Yop_ref.mu[n]);
    CHECK(check_structure(Yop, 5).pass);
}

TEST_CASE("opposite of the glued algebra passes the checker") {
    // small glue: diagonal bimodule of dual numbers glued over (A, A)
    AlgebraPtr A = make_algebra_ptr("dual_numbers");
    AInftyBimodule D = diagonal_bimodule(A);
    AInftyAlgebra G = glue(D, "glued");
    CHECK(check_structure(G, 5).pass);
    CHECK(check_structure(opposite(G), 5).pass);
}

TEST_CASE("opposite of the commutative truncated polynomial algebra is itself") {
    AInftyAlgebra X = make_algebra("truncated_poly(6)");
    AInftyAlgebra Xop = opposite(X);
    REQUIRE(Xop.mu.size() == X.mu.size());
    for (size_t n = 1; n < X.mu.size(); ++n) CHECK(Xop.mu[n] == X.mu[n]);
}
