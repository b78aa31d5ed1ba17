#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammadesk/poly.hpp"

#include <stdexcept>

using namespace gammadesk;

TEST_CASE("IntPoly basics and canonical form") {
    IntPoly p;
    CHECK(p.is_zero());
    CHECK(p.str() == "0");
    p.add_term(2, 3);
    p.add_term(0, 1);
    CHECK(p.min_degree() == 0);
    CHECK(p.max_degree() == 2);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(5) == 0);
    CHECK(p.str() == "1 + 3*t^2");

    // cancellation never leaves a stored zero
    p.add_term(2, -3);
    CHECK(p.coeff(2) == 0);
    CHECK(p.terms().count(2) == 0);

    IntPoly c(BigInt(7));
    CHECK(c.str() == "7");
    CHECK(IntPoly(BigInt(0)).is_zero());
}

TEST_CASE("IntPoly arithmetic matches direct evaluation") {
    IntPoly a = IntPoly::monomial(3, 2);  // 2t^3
    a.add_term(1, -1);                    // 2t^3 - t
    IntPoly b = IntPoly::monomial(2, 5);
    b.add_term(0, 4);  // 5t^2 + 4

    IntPoly sum = a + b, prod = a * b;
    for (int x = -3; x <= 3; ++x) {
        BigInt bx(x);
        CHECK(sum.eval(bx) == a.eval(bx) + b.eval(bx));
        CHECK(prod.eval(bx) == a.eval(bx) * b.eval(bx));
    }
    IntPoly d = a - a;
    CHECK(d.is_zero());

    IntPoly s = b;
    s *= BigInt(-2);
    CHECK(s.eval(2) == -2 * b.eval(2));
    CHECK(b.sum_of_coeffs() == 9);
}

TEST_CASE("binomial_row gives exact binomial coefficients") {
    IntPoly r5 = binomial_row(5);
    int expect[] = {1, 5, 10, 10, 5, 1};
    for (int j = 0; j <= 5; ++j) CHECK(r5.coeff(j) == expect[j]);
    CHECK(binomial_row(0).str() == "1");
    // (1+t)^40 coefficient 20 = C(40,20)
    CHECK(binomial_row(40).coeff(20) == BigInt("137846528820"));
}

TEST_CASE("palindromicity detection") {
    IntPoly p;  // t + 2t^2 + t^3, center 2
    p.add_term(1, 1);
    p.add_term(2, 2);
    p.add_term(3, 1);
    PalindromeCheck pc = is_palindromic(p);
    CHECK(pc.palindromic);
    CHECK(pc.center2 == 4);

    IntPoly q;  // 1 + 2t not palindromic
    q.add_term(0, 1);
    q.add_term(1, 2);
    pc = is_palindromic(q);
    CHECK_FALSE(pc.palindromic);
    CHECK(pc.bad_lo == 0);
    CHECK(pc.bad_hi == 1);

    // zero polynomial has no center of symmetry
    CHECK_THROWS_AS(is_palindromic(IntPoly()), std::invalid_argument);

    // a constant is trivially palindromic
    CHECK(is_palindromic(IntPoly(BigInt(5))).palindromic);
}

TEST_CASE("gamma expansion and contraction are mutually inverse") {
    // 1 + 11t + 11t^2 + t^3 peels to (1, 8)
    IntPoly a4;
    a4.add_term(0, 1);
    a4.add_term(1, 11);
    a4.add_term(2, 11);
    a4.add_term(3, 1);
    GammaVector gv = gamma_expand(a4);
    CHECK(gv.center2 == 3);
    CHECK(gv.gamma(0) == 1);
    CHECK(gv.gamma(1) == 8);
    CHECK(gv.nonnegative());
    CHECK(gamma_contract(gv) == a4);

    // negative gamma coefficients round-trip too: t + t^2 + t^3 = t(1+t)^2 - t^2
    IntPoly j4;
    j4.add_term(1, 1);
    j4.add_term(2, 1);
    j4.add_term(3, 1);
    GammaVector gj = gamma_expand(j4);
    CHECK(gj.min_k == 1);
    CHECK(gj.center2 == 4);
    CHECK(gj.gamma(1) == 1);
    CHECK(gj.gamma(2) == -1);
    CHECK_FALSE(gj.nonnegative());
    int k;
    BigInt v;
    CHECK(gj.first_negative(k, v));
    CHECK(k == 2);
    CHECK(v == -1);
    CHECK(gamma_contract(gj) == j4);

    // non-palindromic input is rejected
    IntPoly bad;
    bad.add_term(0, 1);
    bad.add_term(1, 2);
    CHECK_THROWS_AS(gamma_expand(bad), std::invalid_argument);
}

TEST_CASE("unimodality scan") {
    auto make = [](std::initializer_list<int> cs) {
        IntPoly p;
        int d = 0;
        for (int c : cs) p.add_term(d++, c);
        return p;
    };
    CHECK(is_unimodal(make({1, 2, 1})));
    CHECK(is_unimodal(make({1, 2, 2, 1})));
    CHECK(is_unimodal(make({1, 1, 1})));
    CHECK(is_unimodal(make({3})));
    CHECK_FALSE(is_unimodal(make({2, 1, 2})));
    CHECK_FALSE(is_unimodal(make({1, 3, 2, 3})));
}

TEST_CASE("BiPoly arithmetic and partial evaluation") {
    BiPoly p;  // 1 + 2xy + x^2
    p.add_term(0, 0, 1);
    p.add_term(1, 1, 2);
    p.add_term(2, 0, 1);
    BiPoly q = BiPoly::monomial(1, 0, 3);  // 3x
    BiPoly prod = p * q;
    for (int x = -2; x <= 2; ++x) {
        for (int y = -2; y <= 2; ++y) {
            CHECK(prod.eval(x, y) == p.eval(x, y) * q.eval(x, y));
            CHECK(p.eval_x(x).eval(y) == p.eval(x, y));
            CHECK(p.eval_y(y).eval(x) == p.eval(x, y));
        }
    }
    CHECK(p.coeff(1, 1) == 2);
    CHECK(p.coeff(1, 0) == 0);
    BiPoly z = p - p;
    CHECK(z.is_zero());
}

TEST_CASE("q-basis expansion on hand-checked involution polynomials") {
    // n=2: P = 1 + tq
    BiPoly p2;
    p2.add_term(0, 0, 1);
    p2.add_term(1, 1, 1);
    CHECK(dilks_basis(2, 0) == p2);
    DilksExpansion e2 = dilks_expand(p2, 2);
    CHECK(e2.expandable);
    CHECK(e2.nonnegative);
    REQUIRE(e2.gammas.size() == 1);
    CHECK(e2.gammas[0].str("q") == "1");

    // n=3: P = 1 + tq + tq^2 + t^2 q^3 = (1+tq)(1+tq^2); gamma_1 = 0
    BiPoly p3;
    p3.add_term(0, 0, 1);
    p3.add_term(1, 1, 1);
    p3.add_term(1, 2, 1);
    p3.add_term(2, 3, 1);
    DilksExpansion e3 = dilks_expand(p3, 3);
    CHECK(e3.expandable);
    REQUIRE(e3.gammas.size() == 2);
    CHECK(e3.gammas[0].str("q") == "1");
    CHECK(e3.gammas[1].is_zero());

    // a bare t does not expand at n=2 (basis is triangular with constant 1 start)
    DilksExpansion bad = dilks_expand(BiPoly::monomial(1, 0), 2);
    CHECK_FALSE(bad.expandable);
    CHECK(bad.failed_k == 1);

    // negative gamma is reported as expandable but not nonnegative:
    // P = basis0 - q * basis1 at n = 4
    BiPoly p = dilks_basis(4, 0);
    BiPoly lift;
    lift.add_term(0, 1, -1);
    p += lift * dilks_basis(4, 1);
    DilksExpansion mix = dilks_expand(p, 4);
    CHECK(mix.expandable);
    CHECK_FALSE(mix.nonnegative);
}
