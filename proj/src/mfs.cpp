#include "gammadesk/mfs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gammadesk {

std::string role_name(LetterRole r) {
    switch (r) {
        case LetterRole::peak: return "peak";
        case LetterRole::valley: return "valley";
        case LetterRole::double_ascent: return "double-ascent";
        case LetterRole::double_descent: return "double-descent";
    }
    return "?";
}

std::vector<LetterClassification> classify(const Permutation& p) {
    const auto& w = p.word();
    const int n = p.size();
    const int INF = n + 1;
    std::vector<LetterClassification> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int left = i == 0 ? INF : w[i - 1];
        const int right = i == n - 1 ? INF : w[i + 1];
        LetterRole role;
        if (left > w[i] && w[i] < right)
            role = LetterRole::valley;
        else if (left < w[i] && w[i] > right)
            role = LetterRole::peak;
        else if (left < w[i])
            role = LetterRole::double_ascent;
        else
            role = LetterRole::double_descent;
        out.push_back({w[i], role});
    }
    return out;
}

Permutation hop(const Permutation& p, int value) {
    const int n = p.size();
    if (value < 1 || value > n) throw std::invalid_argument("hop: value out of range");
    std::vector<int> w = p.word();
    int pos = 0;
    while (w[pos] != value) ++pos;
    const int INF = n + 1;
    const int left = pos == 0 ? INF : w[pos - 1];
    const int right = pos == n - 1 ? INF : w[pos + 1];
    if (left > value && value < right) return p;  // valley
    if (left < value && value > right) return p;  // peak
    if (left > value) {
        // double-descent: hop right, landing before the nearest larger letter
        int j = pos + 1;
        while (j < n && w[j] < value) ++j;  // w[j] > value or j == n
        w.erase(w.begin() + pos);
        w.insert(w.begin() + (j - 1), value);
    } else {
        // double-ascent: hop left, landing after the nearest larger letter
        int j = pos - 1;
        while (j >= 0 && w[j] < value) --j;  // w[j] > value or j == -1
        w.erase(w.begin() + pos);
        w.insert(w.begin() + (j + 1), value);
    }
    return Permutation::unchecked(std::move(w));
}

std::vector<Permutation> orbit(const Permutation& p) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue{p};
    seen.insert(p);
    while (!queue.empty()) {
        Permutation cur = queue.back();
        queue.pop_back();
        for (int v = 1; v <= p.size(); ++v) {
            Permutation next = hop(cur, v);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

bool OrbitGammaReport::pass(bool expect_invariant) const {
    if (class_invariant != expect_invariant) return false;
    if (!expect_invariant) return escape_witness.has_value();
    return !escape_witness && unique_ddfree && orbit_poly_ok && gamma_match &&
           orbit_size_ok;
}

OrbitGammaReport orbit_gamma_check(int n, const ClassSpec& cls,
                                   const EnumLimits& limits) {
    OrbitGammaReport rep;
    rep.n = n;
    rep.class_desc = cls.str();

    std::set<Permutation> members;
    enumerate_class(n, cls, [&](const Permutation& p) { members.insert(p); }, limits);
    rep.member_count = static_cast<long long>(members.size());

    std::map<int, BigInt> census;  // k -> orbit count
    std::set<Permutation> visited;
    for (const auto& m : members) {
        if (visited.count(m)) continue;
        std::vector<Permutation> orb = orbit(m);
        ++rep.orbit_count;
        bool escaped = false;
        for (const auto& q : orb) {
            if (!members.count(q)) {
                escaped = true;
                if (!rep.escape_witness) rep.escape_witness = {m, q};
            } else {
                visited.insert(q);
            }
        }
        if (escaped) {
            rep.class_invariant = false;
            continue;  // orbit-level structure is only meaningful inside the class
        }

        // orbit size must be 2^(#double-ascents + #double-descents)
        long long hoppable = 0;
        for (const auto& lc : classify(m))
            if (lc.role == LetterRole::double_ascent ||
                lc.role == LetterRole::double_descent)
                ++hoppable;
        if (static_cast<long long>(orb.size()) != (1LL << hoppable)) {
            rep.orbit_size_ok = false;
            if (rep.detail.size() < 10)
                rep.detail.push_back("orbit of " + m.str() + " has size " +
                                     std::to_string(orb.size()) + ", expected 2^" +
                                     std::to_string(hoppable));
        }

        std::vector<Permutation> ddfree;
        IntPoly orbit_poly;
        for (const auto& q : orb) {
            StatVector sv = stats(q);
            orbit_poly.add_term(sv.des, 1);
            if (sv.dd == 0) ddfree.push_back(q);
        }
        if (ddfree.size() != 1) {
            rep.unique_ddfree = false;
            if (rep.detail.size() < 10)
                rep.detail.push_back("orbit of " + m.str() + " has " +
                                     std::to_string(ddfree.size()) + " dd-free members");
            continue;
        }
        const int k = stats(ddfree.front()).des;
        IntPoly expect = IntPoly::monomial(k) * binomial_row(n - 1 - 2 * k);
        if (orbit_poly != expect) {
            rep.orbit_poly_ok = false;
            if (rep.detail.size() < 10)
                rep.detail.push_back("orbit of " + m.str() + ": descent polynomial " +
                                     orbit_poly.str() + " != " + expect.str());
        }
        census[k] += 1;
    }

    if (rep.class_invariant) {
        // orbit census must reproduce the gamma expansion of the class poly
        GammaVector gv;
        gv.center2 = n - 1;
        gv.min_k = 0;
        for (int k = 0; 2 * k <= n - 1; ++k) {
            auto it = census.find(k);
            gv.g.push_back(it == census.end() ? BigInt(0) : it->second);
        }
        rep.census = gv;
        IntPoly class_poly;
        for (const auto& m : members) class_poly.add_term(stats(m).des, 1);
        if (gamma_contract(gv) != class_poly) rep.gamma_match = false;
    }
    return rep;
}

}  // namespace gammadesk
