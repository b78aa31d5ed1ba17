#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gammadesk {

// All table entries and polynomial coefficients are exact integers.  Entries
// grow like n! so a fixed-width type is not an option.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Strict decimal parse: optional leading '-', digits only, no leading zeros
// (except "0" itself), no whitespace.  Returns false on any deviation; used
// when loading persisted tables, where sloppy values should be rejected.
inline bool parse_decimal(const std::string& s, BigInt& out) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    if (s == "-0") return false;
    out = BigInt(s);
    return true;
}

}  // namespace gammadesk
