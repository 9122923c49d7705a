#include <array>

#include "doctest.h"

#include "ainfty/signs.hpp"

using namespace ainfty;

TEST_CASE("l-values on the examples") {
    // degrees (0, 1): l_1^2 = 0 + 1 + 2 = 3, odd   [indices here are 0-based]
    std::array<int, 2> d01 = {0, 1};
    CHECK(l_value(d01, 0, 1) == 3);
    CHECK(l_linear(d01, 0, 1) == 1);

    // single degree-0 element: l_1^1 = 0 + 1, odd
    std::array<int, 1> d0 = {0};
    CHECK(l_value(d0, 0, 0) == 1);
    CHECK(l_linear(d0, 0, 0) == 1);

    // wrap case n = 1, p = 1, q = 0, degrees (1, 1): 1 + 1 + 0 = 2, even
    std::array<int, 2> d11 = {1, 1};
    CHECK(l_value(d11, 1, 0) == 2);
    CHECK(l_cyclic(d11, 1, 0) == 0);

    CHECK_THROWS(l_value(d11, 2, 0));
}

TEST_CASE("both branches agree with the shifted-degree sum mod 2") {
    std::array<int, 5> d = {0, 1, -2, 3, 2};
    for (int p = 0; p < 5; ++p)
        for (int q = 0; q < 5; ++q) {
            int expect = 0;
            if (p <= q)
                for (int i = p; i <= q; ++i) expect += sdeg(d[i]);
            else {
                for (int i = p; i < 5; ++i) expect += sdeg(d[i]);
                for (int i = 0; i <= q; ++i) expect += sdeg(d[i]);
            }
            CHECK(l_cyclic(d, p, q) == (expect & 1));
            CHECK(((l_value(d, p, q) % 2) + 2) % 2 == (expect & 1));
        }
}

TEST_CASE("empty range is even") {
    std::array<int, 3> d = {1, 2, 3};
    CHECK(l_linear(d, 2, 1) == 0);
    CHECK(l_linear(d, 1, 0) == 0);
}
