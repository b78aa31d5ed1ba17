#include "gammadesk/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gammadesk {

IntPoly IntPoly::monomial(int degree, const BigInt& coeff) {
    IntPoly p;
    if (coeff != 0) p.terms_[degree] = coeff;
    return p;
}

int IntPoly::min_degree() const {
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

int IntPoly::max_degree() const {
    if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt IntPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPoly::add_term(int degree, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        terms_[degree] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
}

BigInt IntPoly::eval(const BigInt& x) const {
    // Horner over the sparse support, highest degree first.
    BigInt acc = 0;
    int prev_deg = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev_deg >= 0)
            for (int i = it->first; i < prev_deg; ++i) acc *= x;
        acc += it->second;
        prev_deg = it->first;
    }
    if (prev_deg > 0)
        for (int i = 0; i < prev_deg; ++i) acc *= x;
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (d == 0)
            os << c.str();
        else
            os << c.str() << "*" << var << "^" << d;
    }
    return os.str();
}

IntPoly binomial_row(int m) {
    if (m < 0) throw std::invalid_argument("binomial_row: negative exponent");
    IntPoly p;
    BigInt c = 1;
    p.add_term(0, c);
    for (int j = 1; j <= m; ++j) {
        c = c * (m - j + 1) / j;  // exact at every step
        p.add_term(j, c);
    }
    return p;
}

BiPoly BiPoly::monomial(int xdeg, int ydeg, const BigInt& coeff) {
    BiPoly p;
    if (coeff != 0) p.terms_[{xdeg, ydeg}] = coeff;
    return p;
}

BigInt BiPoly::coeff(int xdeg, int ydeg) const {
    auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(int xdeg, int ydeg, const BigInt& c) {
    if (c == 0) return;
    auto key = std::make_pair(xdeg, ydeg);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BiPoly& BiPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

BigInt BiPoly::eval(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (const auto& [k, c] : terms_) {
        BigInt t = c;
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int i = 0; i < k.second; ++i) t *= y;
        acc += t;
    }
    return acc;
}

IntPoly BiPoly::eval_x(const BigInt& x) const {
    IntPoly r;
    for (const auto& [k, c] : terms_) {
        BigInt t = c;
        for (int i = 0; i < k.first; ++i) t *= x;
        r.add_term(k.second, t);
    }
    return r;
}

IntPoly BiPoly::eval_y(const BigInt& y) const {
    IntPoly r;
    for (const auto& [k, c] : terms_) {
        BigInt t = c;
        for (int i = 0; i < k.second; ++i) t *= y;
        r.add_term(k.first, t);
    }
    return r;
}

std::string BiPoly::str(const std::string& xvar, const std::string& yvar) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k.first > 0) os << "*" << xvar << "^" << k.first;
        if (k.second > 0) os << "*" << yvar << "^" << k.second;
    }
    return os.str();
}

BigInt GammaVector::gamma(int k) const {
    if (k < min_k || k - min_k >= static_cast<int>(g.size())) return 0;
    return g[k - min_k];
}

bool GammaVector::nonnegative() const {
    for (const auto& v : g)
        if (v < 0) return false;
    return true;
}

bool GammaVector::first_negative(int& k, BigInt& value) const {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0) {
            k = min_k + static_cast<int>(i);
            value = g[i];
            return true;
        }
    }
    return false;
}

std::string GammaVector::str() const {
    std::ostringstream os;
    os << "[k=" << min_k << "..] ";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) os << ", ";
        os << g[i].str();
    }
    if (g.empty()) os << "(empty)";
    return os.str();
}

PalindromeCheck is_palindromic(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("is_palindromic: zero polynomial has no center");
    int r = p.min_degree(), s = p.max_degree();
    for (int i = 0; r + i <= s - i; ++i) {
        if (p.coeff(r + i) != p.coeff(s - i))
            return {false, 0, r + i, s - i};
    }
    return {true, r + s, -1, -1};
}

GammaVector gamma_expand(const IntPoly& p) {
    PalindromeCheck pc = is_palindromic(p);
    if (!pc.palindromic)
        throw std::invalid_argument("gamma_expand: polynomial is not palindromic (a[" +
                                    std::to_string(pc.bad_lo) + "] != a[" +
                                    std::to_string(pc.bad_hi) + "])");
    GammaVector gv;
    gv.center2 = pc.center2;
    gv.min_k = p.min_degree();
    IntPoly rem = p;
    for (int k = gv.min_k; 2 * k <= gv.center2; ++k) {
        BigInt gk = rem.coeff(k);
        gv.g.push_back(gk);
        if (gk != 0) {
            IntPoly basis = binomial_row(gv.center2 - 2 * k);
            basis *= gk;
            rem -= IntPoly::monomial(k) * basis;
        }
    }
    if (!rem.is_zero())
        throw std::logic_error("gamma_expand: peel left a remainder");
    return gv;
}

IntPoly gamma_contract(const GammaVector& gv) {
    IntPoly p;
    for (std::size_t i = 0; i < gv.g.size(); ++i) {
        int k = gv.min_k + static_cast<int>(i);
        if (gv.center2 - 2 * k < 0)
            throw std::invalid_argument("gamma_contract: index exceeds center");
        if (gv.g[i] == 0) continue;
        IntPoly term = binomial_row(gv.center2 - 2 * k);
        term *= gv.g[i];
        p += IntPoly::monomial(k) * term;
    }
    return p;
}

bool is_unimodal(const IntPoly& p) {
    if (p.is_zero()) return true;
    int r = p.min_degree(), s = p.max_degree();
    bool descending = false;
    BigInt prev = p.coeff(r);
    for (int d = r + 1; d <= s; ++d) {
        BigInt cur = p.coeff(d);
        if (cur > prev && descending) return false;
        if (cur < prev) descending = true;
        prev = cur;
    }
    return true;
}

BiPoly dilks_basis(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n - 1)
        throw std::invalid_argument("dilks_basis: bad (n, k)");
    BiPoly b = BiPoly::monomial(k, k * (k + 1) / 2, 1);
    for (int i = k + 1; i <= n - 1 - k; ++i) {
        BiPoly f(BigInt(1));
        f.add_term(1, i, 1);  // 1 + t q^i
        b = b * f;
    }
    return b;
}

DilksExpansion dilks_expand(const BiPoly& p, int n) {
    if (n < 1) throw std::invalid_argument("dilks_expand: n must be >= 1");
    DilksExpansion out;
    BiPoly rem = p;
    const int kmax = (n - 1) / 2;
    for (int k = 0; k <= kmax; ++k) {
        IntPoly row;  // q-coefficients of t^k in the remainder
        for (const auto& [key, c] : rem.terms())
            if (key.first == k) row.add_term(key.second, c);
        const int shift = k * (k + 1) / 2;
        if (!row.is_zero() && row.min_degree() < shift) {
            out.failed_k = k;
            return out;  // expandable stays false
        }
        IntPoly gk;
        for (const auto& [d, c] : row.terms()) gk.add_term(d - shift, c);
        out.gammas.push_back(gk);
        if (!gk.is_zero()) {
            BiPoly lift;
            for (const auto& [d, c] : gk.terms()) lift.add_term(0, d, c);
            rem -= lift * dilks_basis(n, k);
        }
    }
    if (!rem.is_zero()) {
        out.failed_k = kmax + 1;
        out.gammas.clear();
        return out;
    }
    out.expandable = true;
    out.nonnegative = true;
    for (const auto& gq : out.gammas)
        for (const auto& [d, c] : gq.terms())
            if (c < 0) out.nonnegative = false;
    return out;
}

}  // namespace gammadesk
