#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qweyl/ppoly.hpp"

using namespace qweyl;

namespace {
CommutativePoly x(int i) { return CommutativePoly::variable(i); }
}  // namespace

TEST_CASE("small hand-expanded values") {
    // p_{1;0}^{(1)} = x_1
    CHECK(p_poly(1, 0, 1) == x(1));
    // p_{1;1}^{(2)} = -x_1^2: r=0 has no two-part composition of 1; r=1 gives -(1,1)
    CHECK(p_poly(1, 1, 2) == (-(x(1) * x(1))));
    // p_{0;0}^{(m)} = (-1)^{m-1} x_0^m
    for (int m = 1; m <= 4; ++m) {
        Rat sign((m % 2 == 1) ? 1 : -1);
        CHECK(p_poly(0, 0, m) == x(0).pow(m).scaled(sign));
    }
    // p_{l;n}^{(1)} = sum_r (-1)^r binom(n,r) x_{l+r}
    CHECK(p_poly(2, 2, 1) == x(2) - x(3).scaled(Rat(2)) + x(4));
}

TEST_CASE("partition and composition forms agree") {
    for (int l = 0; l <= 5; ++l)
        for (int n = 0; n <= 5; ++n)
            for (int m = 1; m <= 4; ++m) CHECK(p_poly(l, n, m) == p_poly_compositions(l, n, m));
}

TEST_CASE("recurrence relation for l >= 1") {
    // the (1,1,2) case by hand: both sides are -x_1^2
    CHECK(verify_relation_l(1, 1, 2));
    CHECK(verify_relation_l(2, 2, 2));
    for (int l = 1; l <= 5; ++l)
        for (int n = 1; n <= 5; ++n)
            for (int m = 2; m <= 4; ++m) CHECK(verify_relation_l(l, n, m));
}

TEST_CASE("recurrence relation for l = 0") {
    CHECK(verify_relation_0(1, 2));
    for (int n = 1; n <= 5; ++n)
        for (int m = 2; m <= 4; ++m) CHECK(verify_relation_0(n, m));
}

TEST_CASE("closed form of the defect") {
    for (int l = 1; l <= 5; ++l)
        for (int n = 1; n <= 5; ++n)
            for (int m = 2; m <= 4; ++m) CHECK(verify_lhs(l, n, m));
}

TEST_CASE("canonical form") {
    CommutativePoly a = x(1) * x(2), b = x(2) * x(1);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK((x(1) - x(1)).is_zero());
    CHECK(p_poly(1, 1, 2).str() == "-1*x1^2");
}
