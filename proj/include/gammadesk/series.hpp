#pragma once

#include "gammadesk/errors.hpp"
#include "gammadesk/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammadesk {

// Power series in z truncated at z^order (inclusive), with exact bivariate
// polynomial coefficients in (x, y).  All arithmetic is exact; truncation is
// the only approximation, and it is tracked by the fixed order.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BiPoly& coeff(int n) const;
    BiPoly& coeff(int n);

    bool is_zero() const;
    TruncSeries shift_z(int k) const;           // z^k * s, truncated
    TruncSeries scale(const BiPoly& f) const;   // f(x,y) * s

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return c_ != o.c_; }

private:
    std::vector<BiPoly> c_;  // c_[n] is the z^n coefficient
};

// Cauchy product, truncated to the common order (orders must match).
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
// Division by a unit: den's z^0 coefficient must be the constant 1.
TruncSeries ts_divide_unit(const TruncSeries& num, const TruncSeries& den);

struct SeriesMismatch {
    int n = 0, xdeg = 0, ydeg = 0;
    BigInt lhs, rhs;
    std::string str() const;
};
// First coefficient where the two series differ (z-order, then (x,y) degree).
std::optional<SeriesMismatch> series_diff(const TruncSeries& a, const TruncSeries& b);

// Joint (des, dd)-by-length generating functions over two pattern classes,
// computed from their functional-equation systems by z-adic fixed-point
// iteration.  Every equation's right side gains at least one z-order per
// occurrence of an unknown, so order+1 iterations from zero reach the unique
// fixed point through z^order; the solvers then assert a zero residual and
// throw SolverError otherwise.
struct S1Solution {
    TruncSeries S, F, R;  // (des, dd), (des, dd0), (des, ddinf) weights
    S1Solution(int order) : S(order), F(order), R(order) {}
};
struct S2Solution {
    TruncSeries S, T;  // (des, dd) and (desp, ddp) weights
    S2Solution(int order) : S(order), T(order) {}
};

S1Solution solve_s1_system(int order);
S2Solution solve_s2_system(int order);
// The single cubic equation satisfied by the first system's S.
TruncSeries solve_s1_cubic(int order);

// Residuals (rhs - lhs) of each equation at the given state; all-zero at the
// fixed point.
std::vector<TruncSeries> s1_residuals(const S1Solution& v);
std::vector<TruncSeries> s2_residuals(const S2Solution& v);
TruncSeries s1_cubic_residual(const TruncSeries& s);

// Cross-multiplied rational relations tying F and R to S:
//   F * (1 + x y S) == S + x S^2       R * (1 + S) == y S + S^2
bool check_rational_relations(const S1Solution& v, std::string* detail = nullptr);

namespace detail {
// One Jacobi step of each system, exposed for convergence-trace tests.
S1Solution s1_step(const S1Solution& cur);
S2Solution s2_step(const S2Solution& cur);
TruncSeries s1_cubic_step(const TruncSeries& cur);
}  // namespace detail

}  // namespace gammadesk
