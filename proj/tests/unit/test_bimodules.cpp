#include <array>

#include "doctest.h"

#include "ainfty/ainfty.hpp"
#include "ainfty/catalog.hpp"

using namespace ainfty;

TEST_CASE("diagonal bimodule of a DG algebra recovers the DG bimodule signs") {
    AlgebraPtr A = make_algebra_ptr("dual_numbers");
    AInftyBimodule D = diagonal_bimodule(A);
    int eps = A->space.index_of("eps");
    int one = A->unit;
    // mu_{1,0}(a, m) = a m
    CHECK(*D.mu_entry(1, 0, std::array{eps, one}) == vec_unit(eps));
    // mu_{0,1}(m, b) = (-1)^{|m|+1} m b
    CHECK(*D.mu_entry(0, 1, std::array{one, eps}) == vec_unit(eps, Scalar(-1)));
    // mu_{0,0} = mu_1 up to the stated sign: zero differential here
    CHECK(D.mu_entry(0, 0, std::array{eps}) == nullptr);
}

TEST_CASE("diagonal bimodules pass the relation checker") {
    for (const char* key : {"dual_numbers", "lambda1", "y_cube", "truncated_poly(4)"}) {
        AlgebraPtr A = make_algebra_ptr(key);
        AInftyBimodule D = diagonal_bimodule(A);
        CheckReport rep = check_structure(D, 3, 3);
        INFO(key, ": ", rep.first_failure);
        CHECK(rep.pass);
    }
}

TEST_CASE("diagonal of dual numbers passes bimodule relations to arity 6") {
    AlgebraPtr A = make_algebra_ptr("dual_numbers");
    AInftyBimodule D = diagonal_bimodule(A);
    CheckReport rep = check_structure(D, 6, 6);
    CHECK(rep.pass);
}

TEST_CASE("glue with M = 0 is the product algebra") {
    AlgebraPtr A = make_algebra_ptr("truncated_poly(3)");
    AlgebraPtr B = make_algebra_ptr("y_cube");
    AInftyBimodule Z;  // zero bimodule
    Z.left = A;
    Z.right = B;
    Z.name = "0";
    Z.space = BigradedSpace(std::vector<BasisElement>{});
    AInftyAlgebra G = glue(Z, "AxB");
    CHECK(G.dim() == A->dim() + B->dim());
    CHECK(check_structure(G, 5).pass);
    // x * y = 0 across the factors
    int x = G.space.index_of("A:x");
    int y = G.space.index_of("B:y");
    REQUIRE(x >= 0);
    REQUIRE(y >= 0);
    CHECK(G.mu_entry(2, std::array{x, y}) == nullptr);
    CHECK(G.mu_entry(2, std::array{y, x}) == nullptr);
}

TEST_CASE("glue of the diagonal bimodule: restriction to each factor matches") {
    AlgebraPtr A = make_algebra_ptr("dual_numbers");
    AInftyBimodule D = diagonal_bimodule(A);
    AInftyAlgebra G = glue(D, "glued_dual");
    CHECK(G.dim() == 2 + 2 + 2);
    REQUIRE(G.has_unit());
    CHECK(check_structure(G, 6).pass);

    // embedding of the left copy: 1_A = u - 1_B
    int u = G.unit;
    int oneB = G.space.index_of("B:1");
    int epsA = G.space.index_of("A:eps");
    REQUIRE(oneB >= 0);
    REQUIRE(epsA >= 0);
    SparseVec oneA = vec_add(vec_unit(u), vec_unit(oneB, Scalar(-1)));
    // 1_A * 1_A = 1_A in the glued algebra (mu_2 with the degree-0 Koszul
    // sign is the plain product)
    std::array<SparseVec, 2> args = {oneA, oneA};
    CHECK(G.mu_apply(2, args) == oneA);
    std::array<SparseVec, 2> args2 = {oneA, vec_unit(epsA)};
    CHECK(G.mu_apply(2, args2) == vec_unit(epsA));
}

TEST_CASE("with_unit_element is a change of basis: unit laws hold afterwards") {
    AlgebraPtr A = make_algebra_ptr("y_cube");
    AInftyBimodule D = diagonal_bimodule(A);
    AInftyAlgebra G = glue(D, "glued_y3");
    CheckReport rep = check_structure(G, 5);
    INFO(rep.first_failure);
    CHECK(rep.pass);
    CHECK(G.space.name(G.unit) == "1");
}

TEST_CASE("endomorphism algebra of a small complex") {
    BigradedSpace V({{"v0", 0, 0}, {"v1", 1, 0}});
    LinearMap d(V, V, 1, 0);
    d.set_entry(1, 0, Scalar(1));  // d v0 = v1
    EndAlgebra E = endomorphism_algebra(V, d, "End(V)");
    CHECK(E.alg->dim() == 4);
    CHECK(check_structure(*E.alg, 4).pass);
    REQUIRE(E.alg->has_unit());
    // d_End on the unit vanishes
    CHECK(E.alg->mu_entry(1, std::array{E.alg->unit}) == nullptr);
}
