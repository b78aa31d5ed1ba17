#pragma once

#include "gammadesk/bigint.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gammadesk {

// Sparse univariate polynomial with exact integer coefficients.  Zero
// coefficients are never stored, so terms() is canonical and comparison is
// structural equality.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(const BigInt& constant) {
        if (constant != 0) terms_[0] = constant;
    }
    static IntPoly monomial(int degree, const BigInt& coeff = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    // min/max degree of the stored support; invalid on the zero polynomial.
    int min_degree() const;
    int max_degree() const;
    BigInt coeff(int degree) const;
    void add_term(int degree, const BigInt& c);

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator*=(const BigInt& s);

    BigInt eval(const BigInt& x) const;
    BigInt sum_of_coeffs() const { return eval(1); }

    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    const std::map<int, BigInt>& terms() const { return terms_; }

    // Sparse rendering "c*t^d" joined by " + "; the constant term is a bare
    // decimal; the zero polynomial renders as "0".
    std::string str(const std::string& var = "t") const;

private:
    std::map<int, BigInt> terms_;
};

// (1+t)^m, exact binomial coefficients.
IntPoly binomial_row(int m);

// Sparse bivariate polynomial, keys (xdeg, ydeg).  Used both for joint
// statistic distributions in (x, y) and for (t, q) polynomials.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(const BigInt& constant) {
        if (constant != 0) terms_[{0, 0}] = constant;
    }
    static BiPoly monomial(int xdeg, int ydeg, const BigInt& coeff = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int xdeg, int ydeg) const;
    void add_term(int xdeg, int ydeg, const BigInt& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator*=(const BigInt& s);

    // Substitute numeric values for both variables.
    BigInt eval(const BigInt& x, const BigInt& y) const;
    // Substitute a value for one variable, keeping the other symbolic.
    IntPoly eval_x(const BigInt& x) const;  // result in y
    IntPoly eval_y(const BigInt& y) const;  // result in x

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

    std::string str(const std::string& xvar = "x", const std::string& yvar = "y") const;

private:
    std::map<std::pair<int, int>, BigInt> terms_;
};

// Gamma coefficients of a palindromic polynomial with center center2/2:
// p(t) = sum_k gamma(k) t^k (1+t)^(center2 - 2k), k = min_k .. center2/2.
struct GammaVector {
    int center2 = 0;  // twice the center of symmetry
    int min_k = 0;    // lowest degree of p (first possibly-nonzero gamma index)
    std::vector<BigInt> g;  // g[i] = gamma(min_k + i)

    BigInt gamma(int k) const;
    int max_k() const { return center2 / 2; }
    bool nonnegative() const;
    // First (k, value) with value < 0, if any.
    bool first_negative(int& k, BigInt& value) const;
    std::string str() const;
    bool operator==(const GammaVector& o) const = default;
};

struct PalindromeCheck {
    bool palindromic = false;
    int center2 = 0;  // r + s when palindromic
    // On failure, the first mismatching coefficient pair (degrees lo < hi).
    int bad_lo = -1;
    int bad_hi = -1;
};

// Symmetry about (min_degree + max_degree)/2.  Zero polynomial is rejected
// (it has no center).
PalindromeCheck is_palindromic(const IntPoly& p);

// Peel off gamma coefficients; throws std::invalid_argument if p is not
// palindromic.  Inverse of gamma_contract.
GammaVector gamma_expand(const IntPoly& p);
IntPoly gamma_contract(const GammaVector& gv);

// Coefficients weakly increase then weakly decrease over [min,max] degree.
bool is_unimodal(const IntPoly& p);

// q-analogue basis expansion: writes a (t, q) polynomial as
//   sum_k gamma_k(q) * t^k q^(k(k+1)/2) prod_{i=k+1}^{n-1-k} (1 + t q^i).
// The basis is triangular in the t-degree, so the expansion is unique when it
// exists; it exists iff every peel step divides exactly by q^(k(k+1)/2) and
// the final remainder vanishes.
struct DilksExpansion {
    bool expandable = false;
    int failed_k = -1;             // peel step that failed, when !expandable
    std::vector<IntPoly> gammas;   // gamma_k(q), k = 0..floor((n-1)/2)
    bool nonnegative = false;      // all gamma_k(q) have nonnegative coefficients
};

BiPoly dilks_basis(int n, int k);
DilksExpansion dilks_expand(const BiPoly& p, int n);

}  // namespace gammadesk
