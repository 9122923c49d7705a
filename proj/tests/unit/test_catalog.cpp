#include <array>
#include <map>
#include <set>

#include "doctest.h"

#include "ainfty/ainfty.hpp"
#include "ainfty/catalog.hpp"

using namespace ainfty;

TEST_CASE("lambda1: 2-dimensional with xi^2 = 0") {
    AInftyAlgebra L = make_algebra("lambda1");
    CHECK(L.dim() == 2);
    int xi = L.space.index_of("xi");
    CHECK(L.mu_entry(2, std::array{xi, xi}) == nullptr);
    CHECK(L.deg(xi) == 1);
    CHECK(L.wt(xi) == 1);
}

TEST_CASE("free_C(4): monomial counts per weight") {
    AInftyAlgebra C = make_algebra("free_C(4)");
    std::map<int, int> count;
    for (int i = 0; i < C.dim(); ++i) count[C.wt(i)]++;
    CHECK(count[0] == 1);  // unit
    CHECK(count[1] == 1);  // t1
    CHECK(count[2] == 2);  // t1t1, t2
    CHECK(count[3] == 3);  // t1^3, t1t2, t2t1
    CHECK(count[4] == 5);
}

TEST_CASE("y_cube: mu_2(y, y2) = 0 by truncation; y*y = -y2 from the Koszul sign") {
    AInftyAlgebra Y = make_algebra("y_cube");
    int y = Y.space.index_of("y"), y2 = Y.space.index_of("y2");
    CHECK(Y.mu_entry(2, std::array{y, y2}) == nullptr);
    CHECK(*Y.mu_entry(2, std::array{y, y}) == vec_unit(y2, Scalar(-1)));
}

TEST_CASE("tensor: lambda1 (x) dual_numbers is 4-dimensional with reduced weights 1,1,2") {
    AInftyAlgebra T = make_algebra("tensor(lambda1,dual_numbers)");
    CHECK(T.dim() == 4);
    REQUIRE(T.has_unit());
    std::multiset<int> wts;
    for (int i : T.reduced_basis()) wts.insert(T.wt(i));
    CHECK(wts == std::multiset<int>({1, 1, 2}));
    CHECK(check_structure(T, 5).pass);
}

TEST_CASE("tensor: A (x) k = A") {
    // one-dimensional unital algebra as the right factor
    DgAlgebraSpec s;
    s.name = "k";
    s.space = BigradedSpace({{"1", 0, 0}});
    s.unit = 0;
    s.products[{0, 0}] = vec_unit(0);
    AInftyAlgebra K = from_dg(s);
    AInftyAlgebra L = make_algebra("lambda1");
    AInftyAlgebra T = tensor_dg(L, K, "Lxk");
    CHECK(T.dim() == L.dim());
    for (size_t n = 1; n < L.mu.size(); ++n) {
        REQUIRE(n < T.mu.size());
        CHECK(T.mu[n].size() == L.mu[n].size());
    }
}

TEST_CASE("tensor Koszul sign audit: (xi|1)*(1|eps) vs (1|eps)*(xi|1)") {
    AInftyAlgebra T = make_algebra("tensor(lambda1,dual_numbers)");
    int xi1 = T.space.index_of("xi|1");
    int e1 = T.space.index_of("1|eps");
    int xie = T.space.index_of("xi|eps");
    REQUIRE(xi1 >= 0);
    REQUIRE(e1 >= 0);
    REQUIRE(xie >= 0);
    // plain products: both orders give +xi|eps since |eps| = 0; mu_2 adds
    // (-1)^{|first|}
    CHECK(*T.mu_entry(2, std::array{xi1, e1}) == vec_unit(xie, Scalar(-1)));
    CHECK(*T.mu_entry(2, std::array{e1, xi1}) == vec_unit(xie, Scalar(1)));
}

TEST_CASE("invalid keys are rejected") {
    CHECK_THROWS(make_algebra("truncated_poly(1)"));
    CHECK_THROWS(make_algebra("free_C(0)"));
    CHECK_THROWS(make_algebra("nonsense"));
    CHECK(is_valid_catalog_key("tensor(lambda1,tensor(dual_numbers,dual_numbers))"));
}

TEST_CASE("catalog weights: all reduced basis weights >= 1") {
    for (const char* key :
         {"lambda1", "dual_numbers", "y_cube", "truncated_poly(6)", "free_C(6)",
          "tensor(lambda1,dual_numbers)"}) {
        AInftyAlgebra A = make_algebra(key);
        for (int i : A.reduced_basis()) CHECK(A.wt(i) >= 1);
    }
}
