#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammadesk/permutation.hpp"
#include "gammadesk/series.hpp"

#include <string>
#include <vector>

using namespace gammadesk;

namespace {

BiPoly mono(int xd, int yd, long long c = 1) { return BiPoly::monomial(xd, yd, BigInt(c)); }

// z^n coefficient of the joint (stat_x, stat_y) generating function of a class
BiPoly brute_coeff(int n, const ClassSpec& cls, Stat sx, Stat sy) {
    return joint_distribution(n, cls, sx, sy);
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
    TruncSeries a(4), b(4);
    a.coeff(0) = BiPoly(BigInt(1));
    a.coeff(1) = mono(1, 0);          // 1 + x z
    b.coeff(1) = BiPoly(BigInt(1));
    b.coeff(2) = mono(0, 1);          // z + y z^2

    TruncSeries sum = a + b;
    CHECK(sum.coeff(0) == BiPoly(BigInt(1)));
    CHECK(sum.coeff(1) == BiPoly(BigInt(1)) + mono(1, 0));
    CHECK(sum.coeff(2) == mono(0, 1));

    TruncSeries prod = ts_mul(a, b);
    CHECK(prod.coeff(0).is_zero());
    CHECK(prod.coeff(1) == BiPoly(BigInt(1)));
    CHECK(prod.coeff(2) == mono(0, 1) + mono(1, 0));
    CHECK(prod.coeff(3) == mono(1, 1));
    CHECK(prod.coeff(4).is_zero());

    TruncSeries shifted = b.shift_z(2);
    CHECK(shifted.coeff(3) == BiPoly(BigInt(1)));
    CHECK(shifted.coeff(4) == mono(0, 1));
    CHECK(shifted.coeff(0).is_zero());

    TruncSeries scaled = b.scale(mono(2, 0, 3));
    CHECK(scaled.coeff(1) == mono(2, 0, 3));
    CHECK(scaled.coeff(2) == mono(2, 1, 3));

    CHECK_THROWS_AS(a.coeff(5), std::out_of_range);
}

TEST_CASE("division by a unit inverts multiplication") {
    TruncSeries den(6);
    den.coeff(0) = BiPoly(BigInt(1));
    den.coeff(1) = mono(1, 1, -2);
    den.coeff(3) = mono(0, 2, 5);
    TruncSeries num(6);
    num.coeff(0) = mono(0, 0, 7);
    num.coeff(2) = mono(3, 0);

    TruncSeries q = ts_divide_unit(num, den);
    CHECK(ts_mul(q, den) == num);

    // geometric series: 1 / (1 - z) = 1 + z + z^2 + ...
    TruncSeries one(5), one_minus_z(5);
    one.coeff(0) = BiPoly(BigInt(1));
    one_minus_z.coeff(0) = BiPoly(BigInt(1));
    one_minus_z.coeff(1) = BiPoly(BigInt(-1));
    TruncSeries geo = ts_divide_unit(one, one_minus_z);
    for (int n = 0; n <= 5; ++n) CHECK(geo.coeff(n) == BiPoly(BigInt(1)));

    // non-unit denominator is rejected
    TruncSeries bad(3);
    bad.coeff(0) = mono(1, 0);
    CHECK_THROWS_AS(ts_divide_unit(one, TruncSeries(5)), std::invalid_argument);
    CHECK_THROWS_AS(ts_divide_unit(num, bad), std::invalid_argument);
    // mismatched orders are rejected
    CHECK_THROWS_AS(ts_mul(one, num), std::invalid_argument);
}

TEST_CASE("series_diff pinpoints the first mismatch") {
    TruncSeries a(3), b(3);
    a.coeff(2) = mono(1, 0, 4) + mono(0, 1, 2);
    b.coeff(2) = mono(1, 0, 4) + mono(0, 1, 3);
    auto d = series_diff(a, b);
    REQUIRE(d.has_value());
    CHECK(d->n == 2);
    CHECK(d->xdeg == 0);
    CHECK(d->ydeg == 1);
    CHECK(d->lhs == 2);
    CHECK(d->rhs == 3);
    CHECK(d->str().find("z^2") != std::string::npos);
    CHECK_FALSE(series_diff(a, a).has_value());
}

TEST_CASE("first system: initial coefficients and residuals") {
    S1Solution v = solve_s1_system(8);
    // [z^0] = 0, [z^1] S = 1, [z^2] S = 1 + xy
    CHECK(v.S.coeff(0).is_zero());
    CHECK(v.S.coeff(1) == BiPoly(BigInt(1)));
    CHECK(v.S.coeff(2) == BiPoly(BigInt(1)) + mono(1, 1));
    CHECK(v.S.coeff(3) == BiPoly(BigInt(1)) + mono(1, 0, 2) + mono(1, 1, 2) + mono(2, 2));
    CHECK(v.F.coeff(1) == BiPoly(BigInt(1)));
    CHECK(v.F.coeff(2) == BiPoly(BigInt(1)) + mono(1, 0));
    CHECK(v.F.coeff(3) == BiPoly(BigInt(1)) + mono(1, 0, 4) + mono(2, 1));
    CHECK(v.R.coeff(1) == mono(0, 1));
    CHECK(v.R.coeff(2) == BiPoly(BigInt(1)) + mono(1, 2));
    CHECK(v.R.coeff(3) == BiPoly(BigInt(1)) + mono(1, 1, 4) + mono(2, 3));

    for (const TruncSeries& r : s1_residuals(v)) CHECK(r.is_zero());
    CHECK(check_rational_relations(v));

    // the cubic's solution coincides with the system's S
    CHECK(solve_s1_cubic(8) == v.S);
    CHECK(s1_cubic_residual(v.S).is_zero());
}

TEST_CASE("second system: initial coefficients and residuals") {
    S2Solution v = solve_s2_system(8);
    CHECK(v.S.coeff(1) == BiPoly(BigInt(1)));
    CHECK(v.S.coeff(2) == BiPoly(BigInt(1)) + mono(1, 1));
    CHECK(v.T.coeff(1) == BiPoly(BigInt(1)));
    CHECK(v.T.coeff(2) == BiPoly(BigInt(2)));
    for (const TruncSeries& r : s2_residuals(v)) CHECK(r.is_zero());
}

TEST_CASE("the two systems produce the same (des, dd) series") {
    S1Solution v1 = solve_s1_system(10);
    S2Solution v2 = solve_s2_system(10);
    CHECK(v1.S == v2.S);
}

TEST_CASE("series coefficients equal brute-force class distributions") {
    ClassSpec separable =
        ClassSpec::avoiding({Permutation({2, 4, 1, 3}), Permutation({3, 1, 4, 2})});
    ClassSpec hop =
        ClassSpec::avoiding({Permutation({3, 4, 1, 2}), Permutation({3, 4, 2, 1})});

    S1Solution v1 = solve_s1_system(6);
    S2Solution v2 = solve_s2_system(6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(v1.S.coeff(n) == brute_coeff(n, separable, Stat::des, Stat::dd));
        CHECK(v1.F.coeff(n) == brute_coeff(n, separable, Stat::des, Stat::dd0));
        CHECK(v1.R.coeff(n) == brute_coeff(n, separable, Stat::des, Stat::ddinf));
        CHECK(v2.S.coeff(n) == brute_coeff(n, hop, Stat::des, Stat::dd));
        CHECK(v2.T.coeff(n) == brute_coeff(n, hop, Stat::desp, Stat::ddp));
    }
}

TEST_CASE("fixed-point iteration gains at least one z-order per step") {
    const int order = 7;
    S1Solution cur(order);  // all-zero start
    S1Solution solved = solve_s1_system(order);
    for (int step = 1; step <= order + 1; ++step) {
        cur = detail::s1_step(cur);
        // after k steps, coefficients through z^k are final
        for (int n = 0; n <= std::min(step, order); ++n) {
            CHECK(cur.S.coeff(n) == solved.S.coeff(n));
            CHECK(cur.F.coeff(n) == solved.F.coeff(n));
            CHECK(cur.R.coeff(n) == solved.R.coeff(n));
        }
    }
    // and the fixed point is stationary
    S1Solution again = detail::s1_step(solved);
    CHECK(again.S == solved.S);
    CHECK(again.F == solved.F);
    CHECK(again.R == solved.R);

    TruncSeries c(order);
    for (int step = 1; step <= order + 1; ++step) c = detail::s1_cubic_step(c);
    CHECK(c == solve_s1_cubic(order));

    S2Solution cur2(order);
    for (int step = 1; step <= order + 1; ++step) cur2 = detail::s2_step(cur2);
    S2Solution solved2 = solve_s2_system(order);
    CHECK(cur2.S == solved2.S);
    CHECK(cur2.T == solved2.T);
}
