#pragma once

#include "gammadesk/bigint.hpp"
#include "gammadesk/errors.hpp"
#include "gammadesk/poly.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gammadesk {

// Two gamma-coefficient families, computed by exact integer recurrences:
//   family a: row n >= 1 holds a(n, k) for k = 0..floor((n-1)/2); these are
//     the gamma coefficients of the descent polynomial over involutions of
//     length n (center (n-1)/2).
//   family b: row n >= 1 holds b(2n, k) for k = 1..n; gamma coefficients of
//     the descent polynomial over fixed-point-free involutions of length 2n
//     (center n).  Entries may be negative for small n.
enum class Family { a, b };

Family parse_family(const std::string& name);  // "a" or "b"
std::string family_name(Family f);

int row_min_k(Family f, int n);
int row_max_k(Family f, int n);

// Entry accessor on a stored row vector; out-of-range k yields 0.
BigInt row_entry(Family f, int n, const std::vector<BigInt>& row, int k);

// Next-row computation.  Family a consumes the two previous rows, family b
// one.  Every division is checked; a remainder raises IntegrityError.
std::vector<BigInt> next_row_a(int n, const std::vector<BigInt>& prev1,
                               const std::vector<BigInt>& prev2);
std::vector<BigInt> next_row_b(int n, const std::vector<BigInt>& prev1);

// Stream rows base..max_n in order into sink(n, row).  seed, when given,
// supplies already-computed rows ending at start_n - 1 (family a needs the
// last two, family b the last one); streaming then resumes at start_n and the
// seed rows are NOT re-emitted.
void stream_rows(Family f, int max_n,
                 const std::function<void(int, const std::vector<BigInt>&)>& sink);
void stream_rows_from(Family f, int start_n, int max_n,
                      const std::map<int, std::vector<BigInt>>& seed,
                      const std::function<void(int, const std::vector<BigInt>&)>& sink);

// In-memory table for moderate n.
class RecurrenceTable {
public:
    RecurrenceTable(Family f, int max_n);
    Family family() const { return family_; }
    int max_n() const { return max_n_; }
    const std::vector<BigInt>& row(int n) const;
    BigInt entry(int n, int k) const;  // 0 outside the stored k-range
    // Row n reassembled as a polynomial: sum_k entry(n,k) t^k (1+t)^(c-2k)
    // with center c = n-1 (family a) or 2n (family b, the length-2n row).
    IntPoly reconstruct_poly(int n) const;

private:
    Family family_;
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n-1]
};

// Streaming audit of a table: nonnegativity, the two auxiliary induction
// inequalities, and the labeled inequality chains from the positivity proofs.
// Rows must be fed in order starting at n = 1.  The auditor keeps only a
// five-row window, so arbitrarily long tables audit in O(1) memory.
//
// Labels (family a, evaluated at chain parameter t once the needed rows are
// in the window; "in hypothesis" means t >= 1000):
//   dagger-chain : (2t+2) a(2t+2,t) - RHS >= 0 where
//                  RHS = 4 a(2t+1,t-1) + (t^2+2t+1) a(2t,t) + 24 a(2t,t-2)
//                      + (4t^2+4t-2) a(2t,t-1) - n... (see implementation)
//   dagger       : RHS itself >= 0
//   star         : 8 a(2t-1,t-2) - 6 a(2t-2,t-2) - 24 a(2t-3,t-3) >= 0
//   star2        : the (2t-1)-scaled expansion of star >= 0
//   star2-id     : star2 == (2t-1) * star exactly (algebraic identity, every t)
//   star3        : the reduced final form >= 0
// Family b:
//   ddagger      : (7u^2-21u+12) b(2u-4,u-2) + 48 b(2u-4,u-4)
//                  - (6u-4) b(2u-4,u-3) >= 0, parameter u ("in hypothesis"
//                  means u > 1000).
struct ChainStat {
    std::string label;
    long long evaluated = 0;
    long long in_hypothesis = 0;
    long long violations_in_hyp = 0;
    long long violations_advisory = 0;
    bool has_min_in_hyp = false;
    BigInt min_in_hyp;
    int argmin_in_hyp = 0;
    bool has_min_adv = false;
    BigInt min_adv;
    int argmin_adv = 0;
    std::vector<std::string> notes;  // capped
};

struct NegativeEntry {
    int n = 0;
    int k = 0;
    BigInt value;
};

struct AuditReport {
    Family family = Family::a;
    int max_n = 0;
    long long rows = 0;
    long long entries = 0;
    std::vector<NegativeEntry> negatives;  // capped at 10000
    long long negative_count = 0;
    std::vector<int> negative_rows;  // distinct n containing a negative
    long long aux_checked = 0;       // instances inside the stated hypothesis
    long long aux_violations = 0;
    std::vector<std::string> aux_violation_notes;
    std::vector<std::string> aux_advisory;  // observations outside the hypothesis
    std::vector<ChainStat> chains;
    std::vector<std::string> notes;

    bool in_hypothesis_clean() const;
    std::string summary() const;
};

struct AuditOptions {
    bool nonneg = true;
    bool aux = true;
    bool chains = true;
};

class TableAuditor {
public:
    explicit TableAuditor(Family f, AuditOptions opts = {});
    void feed(int n, const std::vector<BigInt>& row);
    AuditReport finish();

private:
    BigInt window_entry(int n, int k) const;  // 0 if k out of range
    void audit_a(int n);
    void audit_b(int n);
    ChainStat& chain(const std::string& label);
    void record(ChainStat& cs, int param, bool in_hyp, const BigInt& value,
                const std::string& what);

    Family family_;
    AuditOptions opts_;
    AuditReport report_;
    int next_n_ = 1;
    std::deque<std::pair<int, std::vector<BigInt>>> window_;  // most recent last
};

// Convenience: run a full audit over a freshly streamed table.
AuditReport audit_table(Family f, int max_n, AuditOptions opts = {});

}  // namespace gammadesk
