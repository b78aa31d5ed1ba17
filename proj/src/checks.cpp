#include "gammadesk/checks.hpp"

#include "gammadesk/version.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gammadesk {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::advisory: return "advisory";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(const Clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void param(CheckReport& r, const std::string& key, const std::string& value) {
    r.params.emplace_back(key, value);
}

std::string itos(long long v) { return std::to_string(v); }

// Run a check body; an enumeration-limit refusal downgrades to advisory (a
// check that cannot run at the requested size must say so, never pass).
CheckReport guarded(CheckReport r, const std::function<void(CheckReport&)>& body) {
    auto t0 = Clock::now();
    try {
        body(r);
    } catch (const EnumLimitError& e) {
        r.verdict = Verdict::advisory;
        r.witnesses.clear();
        r.info.push_back(std::string("not run: ") + e.what());
    }
    r.runtime_ms = ms_since(t0);
    return r;
}

// The two pattern classes the joint-distribution theorem compares.
ClassSpec hop_class() {  // invariant under valley hopping
    return ClassSpec::avoiding({Permutation({3, 4, 1, 2}), Permutation({3, 4, 2, 1})});
}
ClassSpec separable_class() {
    return ClassSpec::avoiding({Permutation({2, 4, 1, 3}), Permutation({3, 1, 4, 2})});
}

struct Census {
    BigInt count{0};
    IntPoly des_poly;
    std::map<int, BigInt> ddfree_by_des;
};

Census take_census(int n, const ClassSpec& cls, const EnumLimits& limits) {
    Census c;
    enumerate_class(n, cls, [&](const Permutation& p) {
        StatVector sv = stats(p);
        c.des_poly.add_term(sv.des, 1);
        if (sv.dd == 0) c.ddfree_by_des[sv.des] += 1;
        c.count += 1;
    }, limits);
    return c;
}

GammaVector census_gamma(int n, const std::map<int, BigInt>& by_des) {
    GammaVector gv;
    gv.center2 = n - 1;
    gv.min_k = 0;
    gv.g.assign((n - 1) / 2 + 1, BigInt(0));
    for (const auto& [k, v] : by_des) {
        if (k >= static_cast<int>(gv.g.size())) gv.g.resize(k + 1, BigInt(0));
        gv.g[k] = v;
    }
    return gv;
}

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// First differing coefficient of two bivariate polynomials, as text.
std::string bipoly_diff_note(const BiPoly& a, const BiPoly& b) {
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : a.terms()) keys.insert(k);
    for (const auto& [k, v] : b.terms()) keys.insert(k);
    for (const auto& k : keys) {
        BigInt ca = a.coeff(k.first, k.second), cb = b.coeff(k.first, k.second);
        if (ca != cb) {
            return "x^" + itos(k.first) + " y^" + itos(k.second) + ": " +
                   to_decimal(ca) + " vs " + to_decimal(cb);
        }
    }
    return "(equal)";
}

}  // namespace

std::pair<bool, GammaVector> check_gamma_self(const std::vector<Permutation>& patterns,
                                              int n, const EnumLimits& limits) {
    ClassSpec cls = patterns.empty() ? ClassSpec::all() : ClassSpec::avoiding(patterns);
    Census c = take_census(n, cls, limits);
    GammaVector gv = census_gamma(n, c.ddfree_by_des);
    if (c.count == 0) return {true, gv};  // empty class: zero polynomial, vacuous
    return {gamma_contract(gv) == c.des_poly, gv};
}

CheckReport check_foata_schutz(int n_max, const EnumLimits& limits) {
    CheckReport r;
    r.id = "foata-schutz";
    r.title = "gamma coefficients of the S_n descent polynomial count the "
              "double-descent-free permutations by descents";
    param(r, "n_max", itos(n_max));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        for (int n = 1; n <= n_max; ++n) {
            auto [ok, gv] = check_gamma_self({}, n, limits);
            if (!ok) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": census does not expand the descent polynomial");
            } else if (n <= 6) {
                rep.info.push_back("n=" + itos(n) + ": gamma " + gv.str());
            }
        }
    });
}

CheckReport check_fu_lin_zeng(int n_max, const EnumLimits& limits) {
    CheckReport r;
    r.id = "fu-lin-zeng";
    r.title = "gamma coefficients of the separable-class descent polynomial "
              "count its double-descent-free members by descents";
    param(r, "n_max", itos(n_max));
    param(r, "class", separable_class().str());
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        static const long long expected_sizes[] = {1, 2, 6, 22, 90};
        std::string sizes;
        for (int n = 1; n <= n_max; ++n) {
            ClassSpec cls = separable_class();
            Census c = take_census(n, cls, limits);
            GammaVector gv = census_gamma(n, c.ddfree_by_des);
            if (gamma_contract(gv) != c.des_poly) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": census does not expand the descent polynomial");
            }
            if (n <= 5 && c.count != expected_sizes[n - 1]) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": class size " + to_decimal(c.count) +
                                        ", expected " + itos(expected_sizes[n - 1]));
            }
            if (!sizes.empty()) sizes += ", ";
            sizes += to_decimal(c.count);
        }
        rep.info.push_back("class sizes (n=1..): " + sizes + " (large Schroeder numbers)");
    });
}

CheckReport check_dddes(int n_max, int series_order, const EnumLimits& limits) {
    CheckReport r;
    r.id = "dddes";
    r.title = "joint (des, dd) distributions of the two avoidance classes coincide, "
              "exhaustively and against both functional-equation systems";
    param(r, "n_max", itos(n_max));
    param(r, "series_order", itos(series_order));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        S1Solution s1 = solve_s1_system(series_order);
        S2Solution s2 = solve_s2_system(series_order);
        if (auto d = series_diff(s1.S, s2.S)) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("the two series disagree: " + d->str());
        } else {
            rep.info.push_back("series from both systems agree through z^" + itos(series_order));
        }
        for (int n = 1; n <= n_max; ++n) {
            BiPoly d1 = joint_distribution(n, hop_class(), Stat::des, Stat::dd, limits);
            BiPoly d2 = joint_distribution(n, separable_class(), Stat::des, Stat::dd, limits);
            if (d1 != d2) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": class distributions differ at " +
                                        bipoly_diff_note(d1, d2));
                continue;
            }
            if (n <= series_order && s1.S.coeff(n) != d1) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": series coefficient differs from enumeration at " +
                                        bipoly_diff_note(s1.S.coeff(n), d1));
            }
        }
        rep.info.push_back("classes compared exhaustively for n <= " + itos(n_max) +
                           ", against the series for n <= " + itos(std::min(n_max, series_order)));
    });
}

CheckReport check_wilf(int n_max, const ClassSpec& c1, const ClassSpec& c2,
                       bool descent_sets, bool expect_equal, const EnumLimits& limits) {
    CheckReport r;
    r.id = descent_sets ? "wilf-desset" : "wilf-des";
    r.title = descent_sets
                  ? "multisets of descent SETS compared between the two classes"
                  : "descent polynomials compared between the two classes";
    param(r, "n_max", itos(n_max));
    param(r, "class1", c1.str());
    param(r, "class2", c2.str());
    param(r, "mode", descent_sets ? "DES" : "des");
    param(r, "expect", expect_equal ? "equal" : "differ");
    return guarded(std::move(r), [&](CheckReport& rep) {
        int diff_n = 0;
        std::string diff_detail;
        for (int n = 1; n <= n_max && diff_n == 0; ++n) {
            if (descent_sets) {
                std::map<std::vector<int>, long long> m1, m2;
                enumerate_class(n, c1, [&](const Permutation& p) { ++m1[stats(p).des_set]; }, limits);
                enumerate_class(n, c2, [&](const Permutation& p) { ++m2[stats(p).des_set]; }, limits);
                if (m1 != m2) {
                    diff_n = n;
                    std::set<std::vector<int>> keys;
                    for (const auto& [k, v] : m1) keys.insert(k);
                    for (const auto& [k, v] : m2) keys.insert(k);
                    for (const auto& k : keys) {
                        long long a = m1.count(k) ? m1.at(k) : 0;
                        long long b = m2.count(k) ? m2.at(k) : 0;
                        if (a != b) {
                            diff_detail = "descent set " + set_str(k) + " has multiplicity " +
                                          itos(a) + " vs " + itos(b);
                            break;
                        }
                    }
                }
            } else {
                IntPoly p1 = distribution(n, c1, Stat::des, limits);
                IntPoly p2 = distribution(n, c2, Stat::des, limits);
                if (p1 != p2) {
                    diff_n = n;
                    diff_detail = "descent polynomials " + p1.str() + " vs " + p2.str();
                }
            }
        }
        if (expect_equal) {
            if (diff_n == 0) {
                rep.verdict = Verdict::pass;
                rep.info.push_back("distributions agree for every n <= " + itos(n_max));
            } else {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(diff_n) + ": " + diff_detail);
            }
        } else {
            if (diff_n != 0) {
                rep.verdict = Verdict::pass;
                rep.info.push_back("minimal differing n = " + itos(diff_n) + "; " + diff_detail);
            } else {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("expected a difference but none found for n <= " + itos(n_max));
            }
        }
    });
}

CheckReport check_dilks(int n_max, const EnumLimits& limits) {
    CheckReport r;
    r.id = "dilks";
    r.title = "involution (des, maj) polynomial expands in the q-binomial-style "
              "basis with gamma_k(q) in N[q]";
    param(r, "n_max", itos(n_max));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        for (int n = 1; n <= n_max; ++n) {
            BiPoly p = des_maj_distribution(n, ClassSpec::involutions(), limits);
            DilksExpansion de = dilks_expand(p, n);
            if (!de.expandable) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("n=" + itos(n) + ": expansion fails at k=" + itos(de.failed_k));
                continue;
            }
            if (!de.nonnegative) {
                rep.verdict = Verdict::fail;
                std::string bad;
                for (size_t k = 0; k < de.gammas.size(); ++k) {
                    for (const auto& [d, c] : de.gammas[k].terms()) {
                        if (c < 0) { bad = "gamma_" + itos(k) + "(q) = " + de.gammas[k].str("q"); break; }
                    }
                    if (!bad.empty()) break;
                }
                rep.witnesses.push_back("n=" + itos(n) + ": negative q-coefficient, " + bad);
                continue;
            }
            if (n <= 5) {
                std::string gs;
                for (size_t k = 0; k < de.gammas.size(); ++k) {
                    if (k) gs += "; ";
                    gs += "gamma_" + itos(k) + " = " + de.gammas[k].str("q");
                }
                rep.info.push_back("n=" + itos(n) + ": " + gs);
            }
        }
    });
}

std::vector<Permutation> search_selfgamma_patterns(int length, int n_lo, int n_hi,
                                                   const EnumLimits& limits) {
    std::vector<Permutation> out;
    std::vector<int> word(length);
    for (int i = 0; i < length; ++i) word[i] = i + 1;
    do {
        Permutation sigma = Permutation::unchecked(word);
        std::vector<Permutation> pats = {sigma, sigma.reversed()};
        bool good = true;
        for (int n = n_lo; n <= n_hi && good; ++n) {
            good = check_gamma_self(pats, n, limits).first;
        }
        if (good) out.push_back(sigma);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Permutation> search_length5(int n_lo, int n_hi, const EnumLimits& limits) {
    return search_selfgamma_patterns(5, n_lo, n_hi, limits);
}

namespace {

CheckReport sweep_check(std::string id, int length, int n_lo, int n_hi,
                        const std::vector<std::vector<int>>& expected_words,
                        const EnumLimits& limits) {
    CheckReport r;
    r.id = std::move(id);
    r.title = "sweep all patterns sigma of length " + itos(length) +
              ": the classes avoiding {sigma, reverse(sigma)} whose gamma "
              "coefficients equal the double-descent-free census, for every n in range";
    param(r, "length", itos(length));
    param(r, "n_lo", itos(n_lo));
    param(r, "n_hi", itos(n_hi));
    return guarded(std::move(r), [&](CheckReport& rep) {
        std::vector<Permutation> found = search_selfgamma_patterns(length, n_lo, n_hi, limits);
        std::vector<Permutation> expected;
        for (const auto& w : expected_words) expected.push_back(Permutation(w));
        std::sort(expected.begin(), expected.end());
        std::string found_str;
        for (const auto& p : found) {
            if (!found_str.empty()) found_str += ", ";
            found_str += p.str();
        }
        rep.info.push_back("survivors: " + (found_str.empty() ? "(none)" : found_str));
        if (found == expected) {
            rep.verdict = Verdict::pass;
        } else {
            rep.verdict = Verdict::fail;
            for (const auto& p : found) {
                if (!std::binary_search(expected.begin(), expected.end(), p))
                    rep.witnesses.push_back("unexpected survivor " + p.str());
            }
            for (const auto& p : expected) {
                if (std::find(found.begin(), found.end(), p) == found.end())
                    rep.witnesses.push_back("missing expected pattern " + p.str());
            }
        }
    });
}

}  // namespace

CheckReport check_length4_list(int n_lo, int n_hi, const EnumLimits& limits) {
    return sweep_check("length4", 4, n_lo, n_hi,
                       {{1, 3, 4, 2}, {2, 4, 1, 3}, {2, 4, 3, 1}, {3, 1, 4, 2}}, limits);
}

CheckReport check_length5_remark(const EnumLimits& limits) {
    // The five base patterns and their reverses.
    std::vector<std::vector<int>> base = {
        {1, 3, 2, 5, 4}, {1, 5, 2, 4, 3}, {1, 5, 3, 4, 2}, {2, 3, 1, 5, 4}, {2, 5, 1, 4, 3}};
    std::vector<std::vector<int>> expected = base;
    for (const auto& w : base) expected.emplace_back(w.rbegin(), w.rend());
    CheckReport r = sweep_check("length5", 5, 5, 7, expected, limits);
    if (r.verdict == Verdict::fail) return r;
    // Every survivor consists solely of peaks and valleys under the
    // infinity/infinity boundary convention.
    for (const auto& w : expected) {
        Permutation p(w);
        for (const auto& lc : classify(p)) {
            if (lc.role != LetterRole::peak && lc.role != LetterRole::valley) {
                r.verdict = Verdict::fail;
                r.witnesses.push_back(p.str() + ": letter " + itos(lc.value) + " is a " +
                                      role_name(lc.role) + ", expected peak/valley only");
            }
        }
    }
    if (r.verdict != Verdict::fail) {
        r.info.push_back("all 10 patterns are pure peak/valley words under the "
                         "p(0) = p(n+1) = +infinity convention");
    }
    return r;
}

CheckReport check_palindromic_unimodal(char family, int n_max) {
    CheckReport r;
    r.id = std::string("palindromic-unimodal-") + family;
    r.title = "reconstructed descent polynomials are palindromic and unimodal";
    param(r, "family", std::string(1, family));
    param(r, "n_max", itos(n_max));
    if (family != 'I' && family != 'J') {
        throw std::invalid_argument("family must be 'I' or 'J'");
    }
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        Family f = family == 'I' ? Family::a : Family::b;
        RecurrenceTable tab(f, n_max);
        for (int n = 1; n <= n_max; ++n) {
            IntPoly p = tab.reconstruct_poly(n);
            int want_center2 = family == 'I' ? n - 1 : 2 * n;
            std::string label = family == 'I' ? "I_" + itos(n) : "J_" + itos(2 * n);
            PalindromeCheck pc = is_palindromic(p);
            if (!pc.palindromic) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back(label + ": coefficients at degrees " + itos(pc.bad_lo) +
                                        " and " + itos(pc.bad_hi) + " differ");
                continue;
            }
            if (pc.center2 != want_center2) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back(label + ": center2 = " + itos(pc.center2) +
                                        ", expected " + itos(want_center2));
            }
            if (!is_unimodal(p)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back(label + " is not unimodal: " + p.str());
            }
        }
        if (family == 'J') {
            rep.info.push_back("odd lengths omitted: the polynomial is zero when the "
                               "length is odd (no fixed-point-free involutions)");
            rep.info.push_back("palindromicity and unimodality hold even on the small rows "
                               "whose gamma vectors have negative entries");
        }
    });
}

CheckReport check_star_identities(int total_max, const EnumLimits& limits) {
    CheckReport r;
    r.id = "star";
    r.title = "statistic identities of the star composition, exhaustive over all "
              "factor pairs, with the boundary exceptions scoped as refined";
    param(r, "total_max", itos(total_max));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        long long pairs = 0;
        for (int total = 2; total <= total_max; ++total) {
            StarIdentityReport srep = verify_star_identities(total, limits);
            pairs += srep.pairs;
            if (srep.violations != 0) {
                rep.verdict = Verdict::fail;
                for (const auto& note : srep.violation_notes) rep.witnesses.push_back(note);
            }
            if (total == total_max) {
                rep.info.push_back(srep.finding);
                rep.info.push_back("naive exception scopes disagree with enumeration: "
                                   "gate-everything-at-n<=2 mismatches " +
                                   itos(srep.mismatches_scope_all_small_n) +
                                   ", ungated ddp rule mismatches " +
                                   itos(srep.mismatches_scope_ungated_ddp) +
                                   " (refined scoping mismatches 0)");
            }
        }
        rep.info.push_back("pairs checked: " + itos(pairs) + " over totals 2.." + itos(total_max));
    });
}

CheckReport check_mfs_orbits(int n_max, const EnumLimits& limits) {
    CheckReport r;
    r.id = "mfs-orbits";
    r.title = "valley-hopping orbit structure: orbit census on S_n, invariance of "
              "the {3412, 3421} class, non-invariance of the separable class";
    param(r, "n_max", itos(n_max));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        for (int n = 1; n <= n_max; ++n) {
            OrbitGammaReport all = orbit_gamma_check(n, ClassSpec::all(), limits);
            if (!all.pass(true)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("S_" + itos(n) + ": orbit structure check failed");
                for (const auto& d : all.detail) rep.witnesses.push_back("  " + d);
            }
            OrbitGammaReport hop = orbit_gamma_check(n, hop_class(), limits);
            if (!hop.pass(true)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("class " + hop.class_desc + ", n=" + itos(n) +
                                        ": expected hop-invariance with orbit census");
                for (const auto& d : hop.detail) rep.witnesses.push_back("  " + d);
            }
            bool sep_invariant = n < 4;  // the class is all of S_n below the pattern length
            OrbitGammaReport sep = orbit_gamma_check(n, separable_class(), limits);
            if (!sep.pass(sep_invariant)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("class " + sep.class_desc + ", n=" + itos(n) + ": expected " +
                                        (sep_invariant ? "invariance" : "an escape witness"));
            } else if (!sep_invariant && sep.escape_witness) {
                if (n == 4) {
                    rep.info.push_back("separable class escape witness at n=4: hopping " +
                                       sep.escape_witness->first.str() + " reaches " +
                                       sep.escape_witness->second.str() + " outside the class");
                }
            }
            if (n == n_max) {
                rep.info.push_back("S_" + itos(n) + ": " + itos(all.orbit_count) + " orbits over " +
                                   itos(all.member_count) + " permutations, census gamma " +
                                   all.census.str());
            }
        }
    });
}

CheckReport check_recurrence_tables(Family f, int table_max) {
    CheckReport r;
    r.id = f == Family::a ? "recurrence-a" : "recurrence-b";
    r.title = f == Family::a
                  ? "gamma table of the involution family: nonnegativity, auxiliary "
                    "inequality, and the labeled proof chains"
                  : "gamma table of the fixed-point-free family: negative entries "
                    "confined to the small rows, auxiliary inequality, proof chain";
    param(r, "family", family_name(f));
    param(r, "max_n", itos(table_max));
    return guarded(std::move(r), [&](CheckReport& rep) {
        AuditReport ar = audit_table(f, table_max);
        rep.verdict = Verdict::pass;
        if (!ar.in_hypothesis_clean()) {
            rep.verdict = Verdict::fail;
            if (f == Family::a && ar.negative_count > 0) {
                const auto& ne = ar.negatives.front();
                rep.witnesses.push_back("negative entry a(" + itos(ne.n) + "," + itos(ne.k) +
                                        ") = " + to_decimal(ne.value));
            }
            if (f == Family::b) {
                for (const auto& ne : ar.negatives) {
                    if (ne.n >= 9) {
                        rep.witnesses.push_back("negative entry b(" + itos(2 * ne.n) + "," +
                                                itos(ne.k) + ") = " + to_decimal(ne.value) +
                                                " beyond the small rows");
                        break;
                    }
                }
            }
            for (const auto& note : ar.aux_violation_notes) rep.witnesses.push_back(note);
            for (const auto& cs : ar.chains) {
                for (const auto& note : cs.notes) rep.witnesses.push_back(cs.label + ": " + note);
            }
            if (rep.witnesses.empty()) rep.witnesses.push_back(ar.summary());
        }
        if (f == Family::b && rep.verdict == Verdict::pass && table_max >= 8) {
            // The small rows must show the known negatives, including b(4,2) = -1.
            bool has_b42 = false;
            int max_neg_row = 0;
            for (const auto& ne : ar.negatives) {
                max_neg_row = std::max(max_neg_row, ne.n);
                if (ne.n == 2 && ne.k == 2 && ne.value == -1) has_b42 = true;
            }
            if (!has_b42) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("expected negative entry b(4,2) = -1 not found");
            }
            if (ar.negative_count == 0) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("expected negative entries on the small rows, found none");
            }
            std::string rows;
            for (int n : ar.negative_rows) {
                if (!rows.empty()) rows += ",";
                rows += itos(n);
            }
            rep.info.push_back("rows with negative entries (half-lengths): " + rows +
                               " -- lengths " + (ar.negative_rows.empty() ? "" : "4.." +
                               itos(2 * max_neg_row)));
            rep.info.push_back("negative entries total " + itos(ar.negative_count) +
                               "; none beyond half-length 8");
        }
        if (f == Family::a && rep.verdict == Verdict::pass) {
            rep.info.push_back("entries scanned: " + itos(ar.entries) + ", no negative entry");
        }
        rep.info.push_back("auxiliary inequality instances in hypothesis: " + itos(ar.aux_checked) +
                           ", violations 0");
        long long hyp_instances = 0;
        for (const auto& cs : ar.chains) {
            bool identity = cs.label.size() > 3 && cs.label.rfind("-id") == cs.label.size() - 3;
            if (!identity) hyp_instances += cs.in_hypothesis;
            std::string line = "chain " + cs.label + ": evaluated " + itos(cs.evaluated) +
                               ", in hypothesis " + itos(cs.in_hypothesis);
            if (cs.has_min_in_hyp) {
                line += ", min slack " + to_decimal(cs.min_in_hyp) + " at t=" + itos(cs.argmin_in_hyp);
            }
            if (cs.has_min_adv && !identity) {
                line += " (advisory min " + to_decimal(cs.min_adv) + " at t=" + itos(cs.argmin_adv) + ")";
            }
            rep.info.push_back(line);
        }
        if (rep.verdict == Verdict::pass && hyp_instances == 0 && !ar.chains.empty()) {
            rep.verdict = Verdict::advisory;
            rep.info.push_back("no proof-chain instance reaches the stated hypothesis range at "
                               "this table size; inequalities above are advisory only");
        }
        for (const auto& note : ar.notes) rep.info.push_back(note);
    });
}

CheckReport check_series_systems(int order, int enum_cross, const EnumLimits& limits) {
    CheckReport r;
    r.id = "series";
    r.title = "both functional-equation systems solve exactly: zero residuals, the "
              "cubic, the rational side relations, equality of the two series, and "
              "agreement with enumeration";
    param(r, "order", itos(order));
    param(r, "enum_cross", itos(enum_cross));
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        S1Solution s1 = solve_s1_system(order);
        S2Solution s2 = solve_s2_system(order);
        TruncSeries cubic = solve_s1_cubic(order);

        int idx = 0;
        for (const auto& res : s1_residuals(s1)) {
            ++idx;
            if (!res.is_zero()) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("first system, equation " + itos(idx) + ": nonzero residual");
            }
        }
        idx = 0;
        for (const auto& res : s2_residuals(s2)) {
            ++idx;
            if (!res.is_zero()) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("second system, equation " + itos(idx) + ": nonzero residual");
            }
        }
        if (!s1_cubic_residual(cubic).is_zero()) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("cubic equation: nonzero residual");
        }
        if (auto d = series_diff(s1.S, cubic)) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("cubic solution differs from the system solution: " + d->str());
        }
        std::string detail;
        if (!check_rational_relations(s1, &detail)) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("rational side relation fails: " + detail);
        }
        if (auto d = series_diff(s1.S, s2.S)) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("the two systems disagree: " + d->str());
        }
        rep.info.push_back("five equations and the cubic have zero residuals through z^" + itos(order) +
                           "; both rational relations hold; the two series agree");

        // Stated low-order coefficients.
        struct Want { const char* name; const TruncSeries* s; int n; BiPoly value; };
        BiPoly one(BigInt(1)), two(BigInt(2));
        BiPoly z2S = one;  // 1 + xy
        z2S.add_term(1, 1, 1);
        BiPoly z2F = one;  // 1 + x
        z2F.add_term(1, 0, 1);
        BiPoly z1R = BiPoly::monomial(0, 1);  // y
        std::vector<Want> wants = {{"S", &s1.S, 1, one},  {"S", &s1.S, 2, z2S},
                                   {"F", &s1.F, 1, one},  {"F", &s1.F, 2, z2F},
                                   {"R", &s1.R, 1, z1R},  {"T", &s2.T, 1, one},
                                   {"T", &s2.T, 2, two}};
        for (const auto& w : wants) {
            if (w.s->coeff(w.n) != w.value) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back(std::string("[z^") + itos(w.n) + "] " + w.name +
                                        " = " + w.s->coeff(w.n).str() + ", expected " + w.value.str());
            }
        }

        // Enumeration cross-checks.  The first system runs over the separable
        // class: S, F, R are its (des, dd), (des, dd0), (des, ddinf)
        // generating functions.  The second system runs over the {3412, 3421}
        // class, with T its (desp, ddp) generating function.
        for (int n = 1; n <= std::min(enum_cross, order); ++n) {
            struct Cross { const char* name; const TruncSeries* s; ClassSpec cls; Stat sx, sy; };
            std::vector<Cross> crosses = {
                {"S", &s1.S, separable_class(), Stat::des, Stat::dd},
                {"F", &s1.F, separable_class(), Stat::des, Stat::dd0},
                {"R", &s1.R, separable_class(), Stat::des, Stat::ddinf},
                {"T", &s2.T, hop_class(), Stat::desp, Stat::ddp},
            };
            for (const auto& c : crosses) {
                BiPoly want = joint_distribution(n, c.cls, c.sx, c.sy, limits);
                if (c.s->coeff(n) != want) {
                    rep.verdict = Verdict::fail;
                    rep.witnesses.push_back(std::string("[z^") + itos(n) + "] " + c.name +
                                            " differs from enumeration at " +
                                            bipoly_diff_note(c.s->coeff(n), want));
                }
            }
        }
        rep.info.push_back("coefficients match enumeration for n <= " +
                           itos(std::min(enum_cross, order)) +
                           " (all four series, their statistic pairs)");
    });
}

CheckReport check_involution_reconstruction(const EnumLimits& limits) {
    CheckReport r;
    r.id = "involution-reconstruction";
    r.title = "recurrence rows reproduce brute-force descent polynomials over "
              "involutions and fixed-point-free involutions";
    param(r, "involutions_n_max", "10");
    param(r, "fixed_point_free_half_max", "7");
    return guarded(std::move(r), [&](CheckReport& rep) {
        rep.verdict = Verdict::pass;
        static const long long inv_counts[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
        RecurrenceTable ta(Family::a, 10);
        for (int n = 1; n <= 10; ++n) {
            IntPoly brute = distribution(n, ClassSpec::involutions(), Stat::des, limits);
            if (brute != ta.reconstruct_poly(n)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("involutions n=" + itos(n) +
                                        ": recurrence row does not reconstruct the descent polynomial");
            }
            if (brute.sum_of_coeffs() != inv_counts[n - 1]) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("involutions n=" + itos(n) + ": count " +
                                        to_decimal(brute.sum_of_coeffs()) + ", expected " +
                                        itos(inv_counts[n - 1]));
            }
        }
        RecurrenceTable tb(Family::b, 7);
        BigInt dfact = 1;
        for (int u = 1; u <= 7; ++u) {
            dfact *= 2 * u - 1;  // (2u-1)!!
            IntPoly brute = distribution(2 * u, ClassSpec::fixed_point_free_involutions(),
                                         Stat::des, limits);
            if (brute != tb.reconstruct_poly(u)) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("fixed-point-free length " + itos(2 * u) +
                                        ": recurrence row does not reconstruct the descent polynomial");
            }
            if (brute.sum_of_coeffs() != dfact) {
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back("fixed-point-free length " + itos(2 * u) + ": count " +
                                        to_decimal(brute.sum_of_coeffs()) + ", expected " +
                                        to_decimal(dfact));
            }
        }
        rep.info.push_back("member counts match: involutions 1,2,4,10,26,76,232,764,2620,9496; "
                           "fixed-point-free (2n-1)!! through 135135");
    });
}

RunConfig RunConfig::fast() {
    RunConfig c;
    c.profile = "fast";
    c.max_n_table = 200;
    c.max_n_enum = 7;
    c.series_order = 10;
    return c;
}

RunConfig RunConfig::full() {
    RunConfig c;
    c.profile = "full";
    c.max_n_table = 1000;
    c.max_n_enum = 9;
    c.series_order = 14;
    return c;
}

std::string RunConfig::str() const {
    std::string s = "profile=" + profile + " table=" + itos(max_n_table) +
                    " enum=" + itos(max_n_enum) + " order=" + itos(series_order) +
                    " jobs=" + (jobs > 0 ? itos(jobs) : "auto");
    if (!out_dir.empty()) s += " out_dir=" + out_dir;
    if (!resume_from.empty()) s += " resume_from=" + resume_from;
    return s;
}

bool SuiteResult::all_pass() const {
    for (const auto& c : checks) {
        if (c.verdict == Verdict::fail) return false;
    }
    return true;
}

namespace {

struct Task {
    std::string id;
    std::function<CheckReport()> fn;
};

std::vector<Task> make_tasks(const RunConfig& cfg) {
    EnumLimits lim;
    int table = cfg.max_n_table;
    int en = cfg.max_n_enum;
    int order = cfg.series_order;
    int pal = std::min(table, 40);
    std::vector<Task> ts;
    ts.push_back({"recurrence-a", [=] { return check_recurrence_tables(Family::a, table); }});
    ts.push_back({"recurrence-b", [=] { return check_recurrence_tables(Family::b, table); }});
    ts.push_back({"involution-reconstruction", [=] { return check_involution_reconstruction(lim); }});
    ts.push_back({"palindromic-unimodal-I", [=] { return check_palindromic_unimodal('I', pal); }});
    ts.push_back({"palindromic-unimodal-J", [=] { return check_palindromic_unimodal('J', pal); }});
    ts.push_back({"foata-schutz", [=] { return check_foata_schutz(std::min(en, 8), lim); }});
    ts.push_back({"fu-lin-zeng", [=] { return check_fu_lin_zeng(en, lim); }});
    ts.push_back({"dddes", [=] { return check_dddes(en, order, lim); }});
    ts.push_back({"series", [=] { return check_series_systems(order, std::min(en, order), lim); }});
    ts.push_back({"wilf-des", [=] {
        return check_wilf(en, hop_class(), separable_class(), false, true, lim);
    }});
    ts.push_back({"wilf-desset", [=] {
        return check_wilf(en, hop_class(), separable_class(), true, false, lim);
    }});
    ts.push_back({"dilks", [=] { return check_dilks(cfg.dilks_max(), lim); }});
    ts.push_back({"star", [=] { return check_star_identities(std::min(en + 1, 9), lim); }});
    ts.push_back({"length4", [=] { return check_length4_list(1, 7, lim); }});
    ts.push_back({"length5", [=] { return check_length5_remark(lim); }});
    ts.push_back({"mfs-orbits", [=] { return check_mfs_orbits(cfg.mfs_max(), lim); }});
    return ts;
}

CheckReport run_one(const Task& t) {
    try {
        return t.fn();
    } catch (const std::exception& e) {
        CheckReport r;
        r.id = t.id;
        r.title = "(aborted)";
        r.verdict = Verdict::fail;
        r.witnesses.push_back(std::string("exception: ") + e.what());
        return r;
    }
}

}  // namespace

std::vector<std::string> suite_check_ids() {
    std::vector<std::string> ids;
    for (const auto& t : make_tasks(RunConfig::fast())) ids.push_back(t.id);
    return ids;
}

SuiteResult run_suite(const RunConfig& cfg, const std::vector<std::string>& only) {
    auto t0 = Clock::now();
    std::vector<Task> tasks = make_tasks(cfg);
    if (!only.empty()) {
        std::vector<Task> filtered;
        for (const auto& want : only) {
            auto it = std::find_if(tasks.begin(), tasks.end(),
                                   [&](const Task& t) { return t.id == want; });
            if (it == tasks.end()) throw std::invalid_argument("unknown check id: " + want);
            filtered.push_back(*it);
        }
        tasks = std::move(filtered);
    }

    SuiteResult out;
    out.config = cfg;
    out.checks.resize(tasks.size());

    int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            out.checks[i] = run_one(tasks[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    out.runtime_ms = ms_since(t0);
    return out;
}

std::string SuiteResult::text_report() const {
    std::ostringstream os;
    os << "gamma-desk verification suite " << version() << "\n";
    os << "config: " << config.str() << "\n\n";
    int np = 0, nf = 0, na = 0;
    for (const auto& c : checks) {
        switch (c.verdict) {
            case Verdict::pass: ++np; break;
            case Verdict::fail: ++nf; break;
            case Verdict::advisory: ++na; break;
        }
        os << "[" << (c.verdict == Verdict::pass ? "PASS" :
                      c.verdict == Verdict::fail ? "FAIL" : "ADVISORY")
           << "] " << c.id << " (" << std::fixed << std::setprecision(1) << c.runtime_ms
           << " ms)\n";
        os << "    " << c.title << "\n";
        if (!c.params.empty()) {
            os << "    params:";
            for (const auto& [k, v] : c.params) os << " " << k << "=" << v;
            os << "\n";
        }
        for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
        for (const auto& i : c.info) os << "    " << i << "\n";
        os << "\n";
    }
    os << "summary: " << np << " pass, " << na << " advisory, " << nf << " fail ("
       << checks.size() << " checks, " << std::fixed << std::setprecision(1) << runtime_ms
       << " ms)\n";
    os << "result: " << (all_pass() ? "OK" : "FAIL") << "\n";
    return os.str();
}

std::string SuiteResult::json_report() const {
    nlohmann::ordered_json j;
    j["tool"] = "gamma-desk";
    j["version"] = version();
    j["config"] = {{"profile", config.profile},
                   {"max_n_table", config.max_n_table},
                   {"max_n_enum", config.max_n_enum},
                   {"series_order", config.series_order},
                   {"jobs", config.jobs},
                   {"out_dir", config.out_dir},
                   {"resume_from", config.resume_from}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["check_id"] = c.id;
        jc["title"] = c.title;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        jc["params"] = params;
        jc["verdict"] = verdict_name(c.verdict);
        jc["witnesses"] = c.witnesses;
        jc["info"] = c.info;
        jc["runtime_ms"] = c.runtime_ms;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    j["all_pass"] = all_pass();
    j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace gammadesk
