#pragma once

#include "gammadesk/permutation.hpp"
#include "gammadesk/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammadesk {

// Letter roles for the valley-hopping action, computed with the boundary
// convention p(0) = p(n+1) = +infinity (the same convention behind the dd
// statistic, so double-descent letters are exactly the dd positions).
enum class LetterRole { peak, valley, double_ascent, double_descent };

std::string role_name(LetterRole r);

struct LetterClassification {
    int value = 0;
    LetterRole role = LetterRole::valley;
};

// One entry per letter value 1..n (indexed by position in the returned
// vector: entry i-1 describes the letter at position i).
std::vector<LetterClassification> classify(const Permutation& p);

// Valley-hopping move on the letter with the given value.  Peaks and valleys
// are fixed.  A double-descent letter hops right: it is removed and
// reinserted immediately before the nearest larger letter to its right (at
// the end if none), becoming a double-ascent.  A double-ascent hops left,
// symmetrically.  hop is an involution and commutes across distinct values.
Permutation hop(const Permutation& p, int value);

// Closure of p under all hops (sorted).
std::vector<Permutation> orbit(const Permutation& p);

// Orbit-level structure of a class:
//   (i)   the class is a union of orbits,
//   (ii)  every orbit has exactly one dd-free member,
//   (iii) each orbit's descent polynomial is t^k (1+t)^(n-1-2k) with k the
//         dd-free member's descent count,
//   (iv)  orbit census == gamma expansion of the class descent polynomial.
// For a non-invariant class (i) fails and a witness pair (member, permutation
// reachable by one orbit but outside the class) is produced; (ii)-(iv) are
// then skipped for the offending orbits.
struct OrbitGammaReport {
    int n = 0;
    std::string class_desc;
    long long member_count = 0;
    long long orbit_count = 0;
    bool class_invariant = true;
    bool unique_ddfree = true;
    bool orbit_poly_ok = true;
    bool gamma_match = true;
    bool orbit_size_ok = true;  // |orbit| == 2^(#da + #dd)
    std::optional<std::pair<Permutation, Permutation>> escape_witness;
    std::vector<std::string> detail;  // capped
    GammaVector census;               // per-k orbit counts (only if invariant)

    bool pass(bool expect_invariant) const;
};

OrbitGammaReport orbit_gamma_check(int n, const ClassSpec& cls,
                                   const EnumLimits& limits = {});

}  // namespace gammadesk
