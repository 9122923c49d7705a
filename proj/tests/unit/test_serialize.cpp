#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "ainfty/catalog.hpp"
#include "ainfty/certify.hpp"
#include "ainfty/jsonio.hpp"

using namespace ainfty;

TEST_CASE("algebra round trip: parse(serialize(A)) = A") {
    for (const char* key : {"lambda1", "y_cube", "truncated_poly(6)", "free_C(4)",
                            "tensor(lambda1,dual_numbers)"}) {
        AInftyAlgebra A = make_algebra(key);
        std::string j = algebra_to_json(A);
        AInftyAlgebra B = algebra_from_json(j);
        INFO(key);
        CHECK(B.name == A.name);
        CHECK(B.unit == A.unit);
        CHECK(B.space.basis.size() == A.space.basis.size());
        REQUIRE(B.mu.size() >= A.mu.size());
        for (size_t n = 1; n < A.mu.size(); ++n) CHECK(B.mu[n] == A.mu[n]);
        // canonical form: serializing again is byte-identical
        CHECK(algebra_to_json(B) == j);
    }
}

TEST_CASE("glued 10-dim style algebra round-trips including negative weights") {
    AlgebraPtr A = make_algebra_ptr("dual_numbers");
    AInftyAlgebra G = glue(diagonal_bimodule(A), "glued");
    std::string j = algebra_to_json(G);
    AInftyAlgebra G2 = algebra_from_json(j);
    for (size_t n = 1; n < G.mu.size(); ++n) CHECK(G2.mu[n] == G.mu[n]);
    CHECK(algebra_to_json(G2) == j);
}

TEST_CASE("chain round trip") {
    AlgebraPtr L = make_algebra_ptr("lambda1");
    HochschildChain c(L);
    c.add({L->unit, L->space.index_of("xi")}, Scalar(2, 3));
    c.add({L->space.index_of("xi")}, Scalar(-5));
    std::string j = chain_to_json(c);
    HochschildChain c2 = chain_from_json(L, j);
    CHECK(c2.terms == c.terms);
    CHECK(chain_to_json(c2) == j);
}

TEST_CASE("malformed input is rejected") {
    AInftyAlgebra A = make_algebra("lambda1");
    std::string good = algebra_to_json(A);
    // a zero denominator must be rejected at parse time
    std::string bad = good;
    auto pos = bad.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 3, "\"1/0\"");
    CHECK_THROWS_AS(algebra_from_json(bad), JsonError);
    CHECK_THROWS_AS(algebra_from_json("{ not json"), JsonError);
    CHECK_THROWS_AS(algebra_from_json("{\"schema\": \"other/1\"}"), JsonError);
    // unknown basis names are rejected
    std::string unk = good;
    auto xi = unk.find("\"xi\"");
    REQUIRE(xi != std::string::npos);
    unk.replace(xi, 4, "\"zz\"");
    CHECK_THROWS_AS(algebra_from_json(unk), JsonError);
}

TEST_CASE("certificate serialization is stable and self-describing") {
    Certificate cert = certify_check_ainfty("lambda1", 4);
    std::string a = certificate_to_json(cert);
    std::string b = certificate_to_json(certify_check_ainfty("lambda1", 4));
    CHECK(a == b);
    CHECK(a.find("\"verdict\": \"PASS\"") != std::string::npos);
}

TEST_CASE("atomic write leaves no partial files") {
    std::string path = "/tmp/ainfty_test_atomic.json";
    write_file_atomic(path, "{\"x\": 1}\n");
    std::ifstream is(path);
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(content == "{\"x\": 1}\n");
    std::remove(path.c_str());
    std::remove((path + ".tmp").c_str());
}

TEST_CASE("morphism prefix serializes with its caps") {
    SolveOutcome sol = solve_to_arity(2, 8, 6);
    REQUIRE(sol.success);
    std::string j = prefix_to_json(sol.prefix);
    CHECK(j.find("certified_weight_caps") != std::string::npos);
    CHECK(j.find("\"arity\": 2") != std::string::npos);
}
