#include "gammadesk/checks.hpp"
#include "gammadesk/permutation.hpp"
#include "gammadesk/recurrences.hpp"
#include "gammadesk/series.hpp"
#include "gammadesk/table_io.hpp"
#include "gammadesk/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace gd = gammadesk;

namespace {

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Accepts "321", "3 2 1" (as separate argv tokens), and dotted "2.4.1.3".
std::vector<int> parse_word(const std::vector<std::string>& tokens) {
    auto to_letter = [](const std::string& s) {
        if (s.empty() || s.size() > 9 ||
            !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("not a permutation: bad letter '" + s + "'");
        }
        return std::stoi(s);
    };
    std::vector<int> w;
    if (tokens.size() == 1) {
        const std::string& t = tokens[0];
        if (t.find('.') != std::string::npos) {
            std::string piece;
            for (char c : t + ".") {
                if (c == '.') {
                    w.push_back(to_letter(piece));
                    piece.clear();
                } else {
                    piece += c;
                }
            }
        } else if (t.size() > 1) {
            for (char c : t) w.push_back(to_letter(std::string(1, c)));
        } else {
            w.push_back(to_letter(t));
        }
    } else {
        for (const auto& t : tokens) w.push_back(to_letter(t));
    }
    return w;
}

int run_stats(const std::vector<std::string>& tokens) {
    gd::Permutation p(parse_word(tokens));
    gd::StatVector sv = gd::stats(p);
    std::cout << "permutation " << p.str() << " (n = " << p.size() << ")\n";
    std::cout << "DES   = " << set_str(sv.des_set) << "\n";
    std::cout << "DD    = " << set_str(sv.dd_set) << "   (boundary +inf / +inf)\n";
    std::cout << "des   = " << sv.des << "\n";
    std::cout << "maj   = " << sv.maj << "\n";
    std::cout << "dd    = " << sv.dd << "\n";
    std::cout << "dd0   = " << sv.dd0 << "   (boundary 0 / +inf)\n";
    std::cout << "ddinf = " << sv.ddinf << "   (boundary +inf / 0)\n";
    std::cout << "des'  = " << sv.desp << "   (DES without position n-1)\n";
    std::cout << "dd'   = " << sv.ddp << "   (DD without position n-1)\n";
    return 0;
}

gd::Family parse_cli_family(const std::string& raw) {
    if (raw == "I" || raw == "i" || raw == "a") return gd::Family::a;
    if (raw == "J" || raw == "j" || raw == "b") return gd::Family::b;
    throw std::invalid_argument("family must be I or J (got '" + raw + "')");
}

int run_gamma(const std::string& fam_raw, int n, bool dump) {
    gd::Family f = parse_cli_family(fam_raw);
    std::vector<gd::BigInt> last;
    gd::stream_rows(f, n, [&](int rn, const std::vector<gd::BigInt>& row) {
        if (rn == n) last = row;
    });
    gd::GammaVector gv;
    gv.center2 = f == gd::Family::a ? n - 1 : 2 * n;
    gv.min_k = gd::row_min_k(f, n);
    gv.g = last;
    gd::IntPoly poly = gd::gamma_contract(gv);
    std::string label = f == gd::Family::a ? "I_" + std::to_string(n)
                                           : "J_" + std::to_string(2 * n);
    std::cout << "family " << (f == gd::Family::a ? "I" : "J") << ", row " << n << ": "
              << label << "(t), center " << gv.center2 << "/2\n";
    if (dump || n <= 24) {
        std::cout << label << "(t) = " << poly.str() << "\n";
    } else {
        std::cout << "polynomial of degree " << poly.max_degree()
                  << " suppressed; pass --dump to print\n";
    }
    if (dump || n <= 40) {
        std::cout << "gamma = " << gv.str() << "\n";
    } else {
        std::cout << "gamma vector with " << gv.g.size()
                  << " entries suppressed; pass --dump to print\n";
    }
    int k = 0;
    gd::BigInt v;
    if (gv.first_negative(k, v)) {
        std::cout << "gamma-nonnegative: NO (gamma_" << k << " = " << gd::to_decimal(v) << ")\n";
        return 1;
    }
    std::cout << "gamma-nonnegative: yes\n";
    return 0;
}

void print_audit(const gd::AuditReport& rep) {
    std::cout << rep.summary() << "\n";
    if (!rep.negatives.empty()) {
        std::cout << "negative entries (" << rep.negative_count << " total):\n";
        long long shown = 0;
        for (const auto& ne : rep.negatives) {
            if (++shown > 20) {
                std::cout << "  ... and " << rep.negative_count - 20 << " more\n";
                break;
            }
            if (rep.family == gd::Family::b) {
                std::cout << "  b(" << 2 * ne.n << "," << ne.k << ") = "
                          << gd::to_decimal(ne.value) << "   (half-length " << ne.n << ")\n";
            } else {
                std::cout << "  a(" << ne.n << "," << ne.k << ") = "
                          << gd::to_decimal(ne.value) << "\n";
            }
        }
    }
    std::cout << "auxiliary inequality: " << rep.aux_checked
              << " instances in hypothesis, " << rep.aux_violations << " violations\n";
    for (const auto& note : rep.aux_violation_notes) std::cout << "  " << note << "\n";
    for (const auto& cs : rep.chains) {
        std::cout << "chain " << cs.label << ": evaluated " << cs.evaluated
                  << ", in hypothesis " << cs.in_hypothesis;
        if (cs.has_min_in_hyp) {
            std::cout << ", min slack " << gd::to_decimal(cs.min_in_hyp)
                      << " at t=" << cs.argmin_in_hyp;
        }
        if (cs.has_min_adv) {
            std::cout << " (advisory min " << gd::to_decimal(cs.min_adv)
                      << " at t=" << cs.argmin_adv << ")";
        }
        std::cout << "\n";
        for (const auto& note : cs.notes) std::cout << "  " << note << "\n";
    }
    for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
}

int run_recurrence(const std::string& fam, int maxn, std::string out, const std::string& resume) {
    gd::Family f = gd::parse_family(fam);
    if (!resume.empty() && out.empty()) out = resume;

    std::map<int, std::vector<gd::BigInt>> seed;
    int start = 1;
    if (!resume.empty()) {
        gd::LoadedTable lt = gd::load_table_file(resume);
        if (lt.family != f) {
            throw std::invalid_argument("resume file holds family " + gd::family_name(lt.family) +
                                        ", but family " + gd::family_name(f) + " was requested");
        }
        for (const auto& [rn, row] : lt.rows) {
            if (rn <= maxn) seed[rn] = row;
        }
        if (!seed.empty()) start = seed.rbegin()->first + 1;
        std::cout << "resumed from " << resume << " (rows 1.." << (start - 1) << " validated)\n";
    }

    std::ofstream ofs;
    bool writing = !out.empty();
    if (writing) {
        ofs.open(out, std::ios::trunc);
        if (!ofs) throw gd::PersistenceError("cannot open output file: " + out, 0);
        gd::write_table_header(ofs, f);
    }

    gd::TableAuditor auditor(f);
    auto sink = [&](int n, const std::vector<gd::BigInt>& row) {
        auditor.feed(n, row);
        if (writing) gd::write_table_row(ofs, f, n, row);
    };
    for (const auto& [rn, row] : seed) sink(rn, row);
    if (start <= maxn) {
        if (seed.empty()) {
            gd::stream_rows(f, maxn, sink);
        } else {
            gd::stream_rows_from(f, start, maxn, seed, sink);
        }
    }
    if (writing) {
        ofs.flush();
        if (!ofs) throw gd::PersistenceError("write failed: " + out, 0);
    }

    gd::AuditReport rep = auditor.finish();
    print_audit(rep);
    if (writing) std::cout << "table written: " << out << " (rows 1.." << maxn << ")\n";
    bool okay = rep.in_hypothesis_clean();
    std::cout << "result: " << (okay ? "OK" : "FAIL") << "\n";
    return okay ? 0 : 1;
}

int run_verify(std::string profile, bool profile_given, const std::vector<std::string>& only,
               const std::string& out_dir, int jobs, int table, int en, int order, bool list) {
    if (list) {
        for (const auto& id : gd::suite_check_ids()) std::cout << id << "\n";
        return 0;
    }
    if (!profile_given) {
        const char* env = std::getenv("GAMMA_DESK_PROFILE");
        if (env && *env) profile = env;
    }
    gd::RunConfig cfg;
    if (profile == "fast") {
        cfg = gd::RunConfig::fast();
    } else if (profile == "full") {
        cfg = gd::RunConfig::full();
    } else {
        throw std::invalid_argument("profile must be 'fast' or 'full' (got '" + profile + "')");
    }
    if (table > 0) { cfg.max_n_table = table; cfg.profile = "custom"; }
    if (en > 0) { cfg.max_n_enum = en; cfg.profile = "custom"; }
    if (order > 0) { cfg.series_order = order; cfg.profile = "custom"; }
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;

    gd::SuiteResult sr = gd::run_suite(cfg, only);
    std::cout << sr.text_report();

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw gd::PersistenceError("cannot create report directory " + out_dir + ": " + ec.message(), 0);
    }
    const std::string txt_path = out_dir + "/report.txt";
    const std::string json_path = out_dir + "/report.json";
    {
        std::ofstream t(txt_path, std::ios::trunc);
        t << sr.text_report();
        if (!t) throw gd::PersistenceError("cannot write " + txt_path, 0);
    }
    {
        std::ofstream j(json_path, std::ios::trunc);
        j << sr.json_report();
        if (!j) throw gd::PersistenceError("cannot write " + json_path, 0);
    }
    std::cout << "reports written: " << txt_path << ", " << json_path << "\n";
    return sr.all_pass() ? 0 : 1;
}

int run_series(const std::string& sys, int order, bool dump) {
    int show = dump ? order : std::min(order, 5);
    auto print_s = [&](const char* name, const gd::TruncSeries& s) {
        for (int n = 1; n <= show; ++n) {
            std::cout << "[z^" << n << "] " << name << " = " << s.coeff(n).str() << "\n";
        }
    };
    bool ok = true;
    if (sys == "s1") {
        gd::S1Solution v = gd::solve_s1_system(order);
        std::cout << "first system solved exactly to order " << order << "; residuals zero\n";
        std::string detail;
        if (gd::check_rational_relations(v, &detail)) {
            std::cout << "rational relations: hold\n";
        } else {
            std::cout << "rational relations: FAIL " << detail << "\n";
            ok = false;
        }
        print_s("S", v.S);
        print_s("F", v.F);
        print_s("R", v.R);
    } else if (sys == "s2") {
        gd::S2Solution v = gd::solve_s2_system(order);
        std::cout << "second system solved exactly to order " << order << "; residuals zero\n";
        print_s("S", v.S);
        print_s("T", v.T);
    } else if (sys == "s1-cubic") {
        gd::TruncSeries c = gd::solve_s1_cubic(order);
        gd::S1Solution v = gd::solve_s1_system(order);
        std::cout << "cubic solved exactly to order " << order << "; residual zero\n";
        if (auto d = gd::series_diff(c, v.S)) {
            std::cout << "cubic == system S: NO, " << d->str() << "\n";
            ok = false;
        } else {
            std::cout << "cubic == system S: yes\n";
        }
        print_s("S", c);
    } else {  // cross-check
        gd::S1Solution v1 = gd::solve_s1_system(order);
        gd::S2Solution v2 = gd::solve_s2_system(order);
        gd::TruncSeries c = gd::solve_s1_cubic(order);
        std::cout << "both systems and the cubic solved exactly to order " << order
                  << "; residuals zero\n";
        std::string detail;
        if (gd::check_rational_relations(v1, &detail)) {
            std::cout << "rational relations: hold\n";
        } else {
            std::cout << "rational relations: FAIL " << detail << "\n";
            ok = false;
        }
        if (auto d = gd::series_diff(v1.S, v2.S)) {
            std::cout << "S1 == S2: NO, " << d->str() << "\n";
            ok = false;
        } else {
            std::cout << "S1 == S2: yes\n";
        }
        if (auto d = gd::series_diff(v1.S, c)) {
            std::cout << "cubic == S1: NO, " << d->str() << "\n";
            ok = false;
        } else {
            std::cout << "cubic == S1: yes\n";
        }
        print_s("S", v1.S);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and verification toolkit for gamma-positivity "
                 "of involution descent polynomials"};
    app.set_version_flag("--version", std::string(gd::version()));
    app.require_subcommand(1);

    auto* c_stats = app.add_subcommand("stats", "print the descent statistics of a permutation");
    std::vector<std::string> word_tokens;
    c_stats->add_option("word", word_tokens,
                        "one-line notation: 321, '3 2 1', or dotted 10.2.1.3...")
        ->required();

    auto* c_gamma = app.add_subcommand(
        "gamma", "reconstruct a descent polynomial from its gamma table row; exit 0 iff "
                 "the gamma vector is nonnegative");
    std::string g_family;
    int g_n = 0;
    bool g_dump = false;
    c_gamma->add_option("--family", g_family,
                        "I (involutions) or J (fixed-point-free; row n is the length-2n polynomial)")
        ->required();
    c_gamma->add_option("--n", g_n, "row index, >= 1")->required()->check(CLI::Range(1, 1000000000));
    c_gamma->add_flag("--dump", g_dump, "print the polynomial and gamma vector at any size");

    auto* c_rec = app.add_subcommand(
        "recurrence", "stream a gamma table, audit nonnegativity and the proof-chain "
                      "inequalities, optionally persist/resume a JSONL file");
    std::string r_family, r_out, r_resume;
    int r_maxn = 0;
    c_rec->add_option("--family", r_family, "a (involutions) or b (fixed-point-free)")->required();
    c_rec->add_option("--max-n", r_maxn, "last row to compute")->required()->check(CLI::Range(1, 1000000000));
    c_rec->add_option("--out", r_out, "write the table as JSON lines to this path");
    c_rec->add_option("--resume", r_resume,
                      "validate an existing table file and extend it (rewritten in place "
                      "unless --out names another path)");

    auto* c_verify = app.add_subcommand(
        "verify", "run the verification suite and write text + JSON reports");
    std::string v_profile = "fast";
    std::vector<std::string> v_only;
    std::string v_out_dir = "reports";
    int v_jobs = 0, v_table = 0, v_enum = 0, v_order = 0;
    bool v_list = false;
    auto* v_profile_opt = c_verify->add_option(
        "--profile", v_profile, "fast | full (default: GAMMA_DESK_PROFILE env var, else fast)");
    c_verify->add_option("--only", v_only, "run only these check ids (comma separated)")
        ->delimiter(',');
    c_verify->add_option("--out-dir", v_out_dir, "report directory (default: reports)");
    c_verify->add_option("--jobs", v_jobs, "worker pool size (default: machine parallelism)");
    c_verify->add_option("--table-max", v_table, "override the recurrence table size");
    c_verify->add_option("--enum-max", v_enum, "override the enumeration ceiling");
    c_verify->add_option("--series-order", v_order, "override the series truncation order");
    c_verify->add_flag("--list", v_list, "list the check ids and exit");

    auto* c_series = app.add_subcommand(
        "series", "solve the functional-equation systems and print coefficients");
    std::string s_system = "cross-check";
    int s_order = 0;
    bool s_dump = false;
    c_series->add_option("--system", s_system, "s1 | s2 | s1-cubic | cross-check")
        ->check(CLI::IsMember({"s1", "s2", "s1-cubic", "cross-check"}));
    c_series->add_option("--order", s_order, "truncation order, >= 1")
        ->required()
        ->check(CLI::Range(1, 1000000000));
    c_series->add_flag("--dump", s_dump, "print every coefficient up to the order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_stats->parsed()) return run_stats(word_tokens);
        if (c_gamma->parsed()) return run_gamma(g_family, g_n, g_dump);
        if (c_rec->parsed()) return run_recurrence(r_family, r_maxn, r_out, r_resume);
        if (c_verify->parsed()) {
            return run_verify(v_profile, v_profile_opt->count() > 0, v_only, v_out_dir, v_jobs,
                              v_table, v_enum, v_order, v_list);
        }
        if (c_series->parsed()) return run_series(s_system, s_order, s_dump);
    } catch (const gd::PersistenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
