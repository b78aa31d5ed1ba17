#pragma once

#include "gammadesk/mfs.hpp"
#include "gammadesk/permutation.hpp"
#include "gammadesk/poly.hpp"
#include "gammadesk/recurrences.hpp"
#include "gammadesk/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gammadesk {

enum class Verdict { pass, fail, advisory };
std::string verdict_name(Verdict v);

struct CheckReport {
    std::string id;
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::fail;
    std::vector<std::string> witnesses;  // counterexamples / failure evidence
    std::vector<std::string> info;       // confirming values, notes
    double runtime_ms = 0.0;

    bool ok() const { return verdict != Verdict::fail; }
};

// Named checks, one per claim.  All are deterministic and side-effect free.

// Descent-polynomial gamma coefficients of S_n equal the dd-free/des census.
CheckReport check_foata_schutz(int n_max, const EnumLimits& limits = {});
// Same census property over the (2413, 3142)-avoiding class; also records
// the class sizes (large Schroeder numbers).
CheckReport check_fu_lin_zeng(int n_max, const EnumLimits& limits = {});
// Joint (des, dd) distributions agree between the (3412,3421)- and
// (2413,3142)-avoiding classes; both cross-checked against the solved series.
CheckReport check_dddes(int n_max, int series_order, const EnumLimits& limits = {});
// mode des: descent polynomials; mode DES (descent_sets=true): multiset of
// descent sets.  expect_equal selects whether equality or a difference (with
// a minimal witness) is the passing outcome.
CheckReport check_wilf(int n_max, const ClassSpec& c1, const ClassSpec& c2,
                       bool descent_sets, bool expect_equal,
                       const EnumLimits& limits = {});
// (des, maj) involution polynomial expands in the q-binomial basis with
// gamma_k(q) in N[q] for every n <= n_max.
CheckReport check_dilks(int n_max, const EnumLimits& limits = {});

// Census self-consistency for one pattern class: descent polynomial ==
// gamma_contract of the dd-free census.  Returns the census as well.
// Empty classes are vacuously true.
std::pair<bool, GammaVector> check_gamma_self(const std::vector<Permutation>& patterns,
                                              int n, const EnumLimits& limits = {});

// Sweep every sigma of the given length; keep sigma whose class
// S_n(sigma, sigma^r) satisfies the census property for ALL n in [n_lo, n_hi].
std::vector<Permutation> search_selfgamma_patterns(int length, int n_lo, int n_hi,
                                                   const EnumLimits& limits = {});
// The length-5 sweep (default range n = 5..7).
std::vector<Permutation> search_length5(int n_lo = 5, int n_hi = 7,
                                        const EnumLimits& limits = {});
// The sweeps packaged as checks against the known answer sets.
CheckReport check_length4_list(int n_lo, int n_hi, const EnumLimits& limits = {});
CheckReport check_length5_remark(const EnumLimits& limits = {});

// Palindromicity and unimodality of the reconstructed polynomials, family
// 'I' (involutions, rows n) or 'J' (fixed-point-free, rows 2n; odd lengths
// are zero polynomials and are skipped).
CheckReport check_palindromic_unimodal(char family, int n_max);

// Star-composition statistic identities, exhaustive over all pairs with
// total length 2..total_max.
CheckReport check_star_identities(int total_max, const EnumLimits& limits = {});

// Valley-hopping orbit structure for n = 1..n_max: S_n partitions into
// orbits with the expected single dd-free member and descent polynomial;
// the (3412,3421) class is a union of orbits; the (2413,3142) class is not
// (witness produced for n >= 4).
CheckReport check_mfs_orbits(int n_max, const EnumLimits& limits = {});

// Full streaming audit of one recurrence family: nonnegativity (family b
// negatives expected only at n <= 8), auxiliary induction inequalities, and
// the labeled proof chains.
CheckReport check_recurrence_tables(Family f, int table_max);

// Functional-equation systems: solve both, assert zero residuals, the cubic,
// the rational relations, S1 == S2, the stated initial conditions, and
// cross-check coefficients against enumeration for n <= enum_cross.
CheckReport check_series_systems(int order, int enum_cross,
                                 const EnumLimits& limits = {});

// Recurrence rows reproduce brute-force descent polynomials (family a
// against involutions for n <= 10, family b against fixed-point-free
// involutions for half-lengths n <= 7), including the member counts.
CheckReport check_involution_reconstruction(const EnumLimits& limits = {});

// Suite configuration.  fast: table 200, enum 7, order 10.
//                       full: table 1000, enum 9, order 14.
struct RunConfig {
    std::string profile = "fast";  // fast | full | custom
    int max_n_table = 200;
    int max_n_enum = 7;
    int series_order = 10;
    int jobs = 0;  // 0 = hardware concurrency
    std::string out_dir;
    std::string resume_from;  // optional seed table path (empty = none)

    static RunConfig fast();
    static RunConfig full();
    int mfs_max() const { return std::min(max_n_enum, 8); }
    int dilks_max() const { return std::min(max_n_enum + 1, 10); }
    std::string str() const;
};

struct SuiteResult {
    RunConfig config;
    std::vector<CheckReport> checks;
    double runtime_ms = 0.0;

    bool all_pass() const;
    std::string text_report() const;
    std::string json_report() const;
};

// All registered check ids, in execution order.
std::vector<std::string> suite_check_ids();
// Run the suite (optionally restricted to the given ids) with a worker pool.
SuiteResult run_suite(const RunConfig& cfg, const std::vector<std::string>& only = {});

}  // namespace gammadesk
