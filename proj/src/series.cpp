#include "gammadesk/series.hpp"

#include <sstream>

namespace gammadesk {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(order + 1);
}

const BiPoly& TruncSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
    return c_[n];
}

BiPoly& TruncSeries::coeff(int n) {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
    return c_[n];
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::shift_z(int k) const {
    if (k < 0) throw std::invalid_argument("shift_z: negative shift");
    TruncSeries r(order());
    for (int n = k; n <= order(); ++n) r.c_[n] = c_[n - k];
    return r;
}

TruncSeries TruncSeries::scale(const BiPoly& f) const {
    TruncSeries r(order());
    for (int n = 0; n <= order(); ++n)
        if (!c_[n].is_zero()) r.c_[n] = c_[n] * f;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
    return *this;
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= b.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

TruncSeries ts_divide_unit(const TruncSeries& num, const TruncSeries& den) {
    if (num.order() != den.order()) throw std::invalid_argument("series order mismatch");
    if (den.coeff(0) != BiPoly(BigInt(1)))
        throw std::invalid_argument(
            "ts_divide_unit: divisor's z^0 coefficient must be the constant 1");
    TruncSeries q(num.order());
    for (int n = 0; n <= num.order(); ++n) {
        BiPoly acc = num.coeff(n);
        for (int i = 1; i <= n; ++i) {
            if (den.coeff(i).is_zero() || q.coeff(n - i).is_zero()) continue;
            acc -= den.coeff(i) * q.coeff(n - i);
        }
        q.coeff(n) = std::move(acc);
    }
    return q;
}

std::string SeriesMismatch::str() const {
    std::ostringstream os;
    os << "z^" << n << " x^" << xdeg << " y^" << ydeg << ": " << lhs.str() << " vs "
       << rhs.str();
    return os.str();
}

std::optional<SeriesMismatch> series_diff(const TruncSeries& a, const TruncSeries& b) {
    const int ord = std::min(a.order(), b.order());
    for (int n = 0; n <= ord; ++n) {
        if (a.coeff(n) == b.coeff(n)) continue;
        BiPoly d = a.coeff(n) - b.coeff(n);
        auto key = d.terms().begin()->first;
        return SeriesMismatch{n, key.first, key.second, a.coeff(n).coeff(key.first, key.second),
                              b.coeff(n).coeff(key.first, key.second)};
    }
    return std::nullopt;
}

namespace {

BiPoly bp_one() { return BiPoly(BigInt(1)); }
BiPoly bp_x() { return BiPoly::monomial(1, 0); }
BiPoly bp_y() { return BiPoly::monomial(0, 1); }
BiPoly bp_xy() { return BiPoly::monomial(1, 1); }

TruncSeries ts_z(int order) {  // the series z
    TruncSeries s(order);
    if (order >= 1) s.coeff(1) = bp_one();
    return s;
}

TruncSeries ts_const(int order, const BiPoly& c) {
    TruncSeries s(order);
    s.coeff(0) = c;
    return s;
}

// Shared tail of the first system:  x (2 + F + x R) / (1 - x R F).
TruncSeries s1_tail(const S1Solution& v) {
    const int ord = v.S.order();
    TruncSeries den = ts_const(ord, bp_one()) - ts_mul(v.R, v.F).scale(bp_x());
    TruncSeries num =
        (ts_const(ord, BiPoly(BigInt(2))) + v.F + v.R.scale(bp_x())).scale(bp_x());
    return ts_divide_unit(num, den);
}

}  // namespace

namespace detail {

S1Solution s1_step(const S1Solution& cur) {
    const int ord = cur.S.order();
    TruncSeries tail = s1_tail(cur);
    TruncSeries SS = ts_mul(cur.S, cur.S);
    S1Solution next(ord);
    // S = z + z(1+xy)S + z S^2 tail
    next.S = ts_z(ord) + cur.S.scale(bp_one() + bp_xy()).shift_z(1) +
             ts_mul(SS, tail).shift_z(1);
    // F = z + z(xS + F) + z F S tail
    next.F = ts_z(ord) + (cur.S.scale(bp_x()) + cur.F).shift_z(1) +
             ts_mul(ts_mul(cur.F, cur.S), tail).shift_z(1);
    // R = yz + z(S + xyR) + z R S tail
    next.R = ts_z(ord).scale(bp_y()) +
             (cur.S + cur.R.scale(bp_xy())).shift_z(1) +
             ts_mul(ts_mul(cur.R, cur.S), tail).shift_z(1);
    return next;
}

S2Solution s2_step(const S2Solution& cur) {
    const int ord = cur.S.order();
    S2Solution next(ord);
    // S = z + z S + (xy - x) z S + x T S
    next.S = ts_z(ord) + cur.S.shift_z(1) +
             cur.S.scale(bp_xy() - bp_x()).shift_z(1) +
             ts_mul(cur.T, cur.S).scale(bp_x());
    // T = z + (x - xy) z^2 + z S + (xyz - 2xz + z) T + x T^2
    BiPoly two_x = bp_x();
    two_x += bp_x();
    next.T = ts_z(ord) + ts_z(ord).shift_z(1).scale(bp_x() - bp_xy()) +
             cur.S.shift_z(1) +
             cur.T.scale(bp_xy() - two_x + bp_one()).shift_z(1) +
             ts_mul(cur.T, cur.T).scale(bp_x());
    return next;
}

TruncSeries s1_cubic_step(const TruncSeries& cur) {
    const int ord = cur.order();
    TruncSeries SS = ts_mul(cur, cur);
    // S = x S^3 + x z S^2 + (z + xyz) S + z
    return ts_mul(SS, cur).scale(bp_x()) + SS.scale(bp_x()).shift_z(1) +
           cur.scale(bp_one() + bp_xy()).shift_z(1) + ts_z(ord);
}

}  // namespace detail

std::vector<TruncSeries> s1_residuals(const S1Solution& v) {
    S1Solution rhs = detail::s1_step(v);
    return {rhs.S - v.S, rhs.F - v.F, rhs.R - v.R};
}

std::vector<TruncSeries> s2_residuals(const S2Solution& v) {
    S2Solution rhs = detail::s2_step(v);
    return {rhs.S - v.S, rhs.T - v.T};
}

TruncSeries s1_cubic_residual(const TruncSeries& s) {
    return detail::s1_cubic_step(s) - s;
}

S1Solution solve_s1_system(int order) {
    S1Solution v(order);
    for (int i = 0; i <= order; ++i) v = detail::s1_step(v);
    for (const auto& r : s1_residuals(v))
        if (!r.is_zero())
            throw SolverError("first system: nonzero residual after fixed point");
    return v;
}

S2Solution solve_s2_system(int order) {
    S2Solution v(order);
    for (int i = 0; i <= order; ++i) v = detail::s2_step(v);
    for (const auto& r : s2_residuals(v))
        if (!r.is_zero())
            throw SolverError("second system: nonzero residual after fixed point");
    return v;
}

TruncSeries solve_s1_cubic(int order) {
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s = detail::s1_cubic_step(s);
    if (!s1_cubic_residual(s).is_zero())
        throw SolverError("cubic equation: nonzero residual after fixed point");
    return s;
}

bool check_rational_relations(const S1Solution& v, std::string* detail_out) {
    const int ord = v.S.order();
    TruncSeries one = ts_const(ord, BiPoly(BigInt(1)));
    TruncSeries SS = ts_mul(v.S, v.S);
    // F (1 + xy S) == S + x S^2
    TruncSeries lhs_f = ts_mul(v.F, one + v.S.scale(BiPoly::monomial(1, 1)));
    TruncSeries rhs_f = v.S + SS.scale(BiPoly::monomial(1, 0));
    // R (1 + S) == y S + S^2
    TruncSeries lhs_r = ts_mul(v.R, one + v.S);
    TruncSeries rhs_r = v.S.scale(BiPoly::monomial(0, 1)) + SS;
    auto df = series_diff(lhs_f, rhs_f);
    auto dr = series_diff(lhs_r, rhs_r);
    if (detail_out) {
        std::ostringstream os;
        if (df) os << "F relation mismatch at " << df->str() << "; ";
        if (dr) os << "R relation mismatch at " << dr->str() << "; ";
        if (!df && !dr) os << "both rational relations hold through z^" << ord;
        *detail_out = os.str();
    }
    return !df && !dr;
}

}  // namespace gammadesk
