// Python bindings for the core operations.  Exact integers cross the
// boundary as native python ints (via decimal strings), permutations as
// plain lists of letters.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammadesk/checks.hpp"
#include "gammadesk/mfs.hpp"
#include "gammadesk/permutation.hpp"
#include "gammadesk/poly.hpp"
#include "gammadesk/recurrences.hpp"
#include "gammadesk/series.hpp"
#include "gammadesk/version.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace gammadesk;

namespace {

py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt to_big(const py::handle& h) {
    return BigInt(py::str(h).cast<std::string>());
}

Permutation perm(const std::vector<int>& word) { return Permutation(word); }

ClassSpec make_class(const std::string& kind,
                     const std::vector<std::vector<int>>& patterns) {
    if (kind == "all" && patterns.empty()) return ClassSpec::all();
    if (kind == "involutions") return ClassSpec::involutions();
    if (kind == "fpf") return ClassSpec::fixed_point_free_involutions();
    if (kind == "avoiding" || (kind == "all" && !patterns.empty())) {
        std::vector<Permutation> ps;
        for (const auto& w : patterns) ps.emplace_back(w);
        return ClassSpec::avoiding(std::move(ps));
    }
    throw std::invalid_argument("unknown class kind: " + kind);
}

py::dict poly_dict(const IntPoly& p) {
    py::dict d;
    for (const auto& [deg, c] : p.terms()) d[py::int_(deg)] = to_py(c);
    return d;
}

py::dict bipoly_dict(const BiPoly& p) {
    py::dict d;
    for (const auto& [key, c] : p.terms())
        d[py::make_tuple(key.first, key.second)] = to_py(c);
    return d;
}

py::dict gamma_dict(const GammaVector& gv) {
    py::dict d;
    d["center2"] = gv.center2;
    d["min_k"] = gv.min_k;
    py::list g;
    for (const auto& v : gv.g) g.append(to_py(v));
    d["gamma"] = g;
    d["nonnegative"] = gv.nonnegative();
    return d;
}

IntPoly poly_from(const py::dict& d) {
    IntPoly p;
    for (const auto& item : d)
        p.add_term(item.first.cast<int>(), to_big(item.second));
    return p;
}

py::dict series_dict(const TruncSeries& s) {
    py::dict d;
    for (int n = 0; n <= s.order(); ++n)
        if (!s.coeff(n).is_zero()) d[py::int_(n)] = bipoly_dict(s.coeff(n));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact enumeration engine: descent statistics, gamma expansions, "
              "recurrence tables, functional-equation series, valley hopping";

    m.def("version", [] { return std::string(GAMMADESK_VERSION); });

    m.def(
        "stats",
        [](const std::vector<int>& word) {
            StatVector sv = stats(perm(word));
            py::dict d;
            d["des"] = sv.des;
            d["maj"] = sv.maj;
            d["dd"] = sv.dd;
            d["dd0"] = sv.dd0;
            d["ddinf"] = sv.ddinf;
            d["desp"] = sv.desp;
            d["ddp"] = sv.ddp;
            d["des_set"] = sv.des_set;
            d["dd_set"] = sv.dd_set;
            return d;
        },
        py::arg("word"), "All descent-type statistics of one permutation.");

    m.def(
        "contains_pattern",
        [](const std::vector<int>& word, const std::vector<int>& pattern) {
            return contains_pattern(perm(word), perm(pattern));
        },
        py::arg("word"), py::arg("pattern"));

    m.def(
        "class_members",
        [](int n, const std::string& kind, const std::vector<std::vector<int>>& patterns) {
            std::vector<std::vector<int>> out;
            enumerate_class(n, make_class(kind, patterns),
                            [&](const Permutation& p) { out.push_back(p.word()); });
            return out;
        },
        py::arg("n"), py::arg("kind") = "all",
        py::arg("patterns") = std::vector<std::vector<int>>{});

    m.def(
        "class_count",
        [](int n, const std::string& kind, const std::vector<std::vector<int>>& patterns) {
            return to_py(class_count(n, make_class(kind, patterns)));
        },
        py::arg("n"), py::arg("kind") = "all",
        py::arg("patterns") = std::vector<std::vector<int>>{});

    m.def(
        "distribution",
        [](int n, const std::string& stat, const std::string& kind,
           const std::vector<std::vector<int>>& patterns) {
            return poly_dict(distribution(n, make_class(kind, patterns), parse_stat(stat)));
        },
        py::arg("n"), py::arg("stat") = "des", py::arg("kind") = "all",
        py::arg("patterns") = std::vector<std::vector<int>>{},
        "Coefficients {degree: count} of sum_p t^stat(p) over the class.");

    m.def(
        "joint_distribution",
        [](int n, const std::string& stat_x, const std::string& stat_y,
           const std::string& kind, const std::vector<std::vector<int>>& patterns) {
            return bipoly_dict(joint_distribution(n, make_class(kind, patterns),
                                                  parse_stat(stat_x), parse_stat(stat_y)));
        },
        py::arg("n"), py::arg("stat_x"), py::arg("stat_y"), py::arg("kind") = "all",
        py::arg("patterns") = std::vector<std::vector<int>>{});

    m.def(
        "des_maj_distribution",
        [](int n, const std::string& kind, const std::vector<std::vector<int>>& patterns) {
            return bipoly_dict(des_maj_distribution(n, make_class(kind, patterns)));
        },
        py::arg("n"), py::arg("kind") = "all",
        py::arg("patterns") = std::vector<std::vector<int>>{});

    m.def(
        "gamma_expand",
        [](const py::dict& coeffs) { return gamma_dict(gamma_expand(poly_from(coeffs))); },
        py::arg("coeffs"),
        "Gamma expansion of a palindromic polynomial given as {degree: coeff}; "
        "raises ValueError when the polynomial is not palindromic.");

    m.def(
        "is_unimodal",
        [](const py::dict& coeffs) { return is_unimodal(poly_from(coeffs)); },
        py::arg("coeffs"));

    m.def(
        "dilks_expand",
        [](const py::dict& tq_coeffs, int n) {
            BiPoly p;
            for (const auto& item : tq_coeffs) {
                auto key = item.first.cast<std::pair<int, int>>();
                p.add_term(key.first, key.second, to_big(item.second));
            }
            DilksExpansion de = dilks_expand(p, n);
            py::dict d;
            d["expandable"] = de.expandable;
            d["failed_k"] = de.failed_k;
            d["nonnegative"] = de.nonnegative;
            py::list gs;
            for (const auto& g : de.gammas) gs.append(poly_dict(g));
            d["gammas"] = gs;
            return d;
        },
        py::arg("tq_coeffs"), py::arg("n"),
        "q-basis expansion of a (t, q) polynomial given as {(tdeg, qdeg): coeff}.");

    m.def(
        "table_row",
        [](const std::string& family, int n) {
            RecurrenceTable t(parse_family(family), n);
            py::list out;
            for (const auto& v : t.row(n)) out.append(to_py(v));
            return out;
        },
        py::arg("family"), py::arg("n"), "Gamma row of family 'a' or 'b'.");

    m.def(
        "reconstruct_poly",
        [](const std::string& family, int n) {
            RecurrenceTable t(parse_family(family), n);
            return poly_dict(t.reconstruct_poly(n));
        },
        py::arg("family"), py::arg("n"),
        "Descent polynomial rebuilt from the gamma row (I_n for 'a', J_2n for 'b').");

    m.def(
        "audit_table",
        [](const std::string& family, int max_n) {
            AuditReport rep = audit_table(parse_family(family), max_n);
            py::dict d;
            d["rows"] = rep.rows;
            d["entries"] = rep.entries;
            d["negative_count"] = rep.negative_count;
            py::list negs;
            for (const auto& ne : rep.negatives)
                negs.append(py::make_tuple(ne.n, ne.k, to_py(ne.value)));
            d["negatives"] = negs;
            d["aux_checked"] = rep.aux_checked;
            d["aux_violations"] = rep.aux_violations;
            d["clean"] = rep.in_hypothesis_clean();
            d["summary"] = rep.summary();
            return d;
        },
        py::arg("family"), py::arg("max_n"),
        "Streaming nonnegativity / inequality / proof-chain audit of one table.");

    m.def(
        "star_compose",
        [](const std::vector<int>& w1, const std::vector<int>& w2) {
            return star_compose(perm(w1), perm(w2)).word();
        },
        py::arg("left"), py::arg("right"));

    m.def(
        "star_decompose",
        [](const std::vector<int>& word) {
            auto dec = star_decompose(perm(word));
            py::dict d;
            if (!dec) {
                d["shape"] = "none";
                return d;
            }
            switch (dec->shape) {
                case StarDecomposition::Shape::atom: d["shape"] = "atom"; break;
                case StarDecomposition::Shape::trailing_max: d["shape"] = "trailing_max"; break;
                case StarDecomposition::Shape::star: d["shape"] = "star"; break;
            }
            if (dec->left) d["left"] = dec->left->word();
            if (dec->right) d["right"] = dec->right->word();
            return d;
        },
        py::arg("word"));

    m.def(
        "hop",
        [](const std::vector<int>& word, int value) { return hop(perm(word), value).word(); },
        py::arg("word"), py::arg("value"),
        "Valley-hopping move on one letter value.");

    m.def(
        "orbit",
        [](const std::vector<int>& word) {
            std::vector<std::vector<int>> out;
            for (const auto& q : orbit(perm(word))) out.push_back(q.word());
            return out;
        },
        py::arg("word"), "Closure under all hops, sorted.");

    m.def(
        "classify",
        [](const std::vector<int>& word) {
            std::vector<std::pair<int, std::string>> out;
            for (const auto& lc : classify(perm(word)))
                out.emplace_back(lc.value, role_name(lc.role));
            return out;
        },
        py::arg("word"), "Peak / valley / double-ascent / double-descent role per letter.");

    m.def(
        "solve_series",
        [](int order) {
            S1Solution s1 = solve_s1_system(order);
            S2Solution s2 = solve_s2_system(order);
            py::dict d;
            d["S"] = series_dict(s1.S);
            d["F"] = series_dict(s1.F);
            d["R"] = series_dict(s1.R);
            d["T"] = series_dict(s2.T);
            d["systems_agree"] = !series_diff(s1.S, s2.S).has_value();
            return d;
        },
        py::arg("order"),
        "Solve both functional-equation systems to the given z-order.");

    m.def("suite_check_ids", [] { return suite_check_ids(); });

    m.def(
        "run_suite",
        [](const std::string& profile, const std::vector<std::string>& only, int jobs) {
            RunConfig cfg;
            if (profile == "fast") cfg = RunConfig::fast();
            else if (profile == "full") cfg = RunConfig::full();
            else throw std::invalid_argument("profile must be 'fast' or 'full'");
            cfg.jobs = jobs;
            return run_suite(cfg, only).json_report();
        },
        py::arg("profile") = "fast", py::arg("only") = std::vector<std::string>{},
        py::arg("jobs") = 0,
        "Run the verification suite; returns the JSON report as a string.");
}
