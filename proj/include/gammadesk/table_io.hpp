#pragma once

#include "gammadesk/errors.hpp"
#include "gammadesk/recurrences.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gammadesk {

// JSON-lines table format.  Line 1 is a header record:
//   {"family":"a","generator_version":"x.y.z","base_rows":{"1":["1"],"2":["1"]}}
// Each following line is one entry, in row order, k ascending:
//   {"family":"a","n":3,"k":0,"value":"1"}
// Values are decimal strings so arbitrarily large entries survive any JSON
// reader.  Loading validates everything and reports 1-based line numbers.

void write_table_header(std::ostream& out, Family f);
void write_table_row(std::ostream& out, Family f, int n, const std::vector<BigInt>& row);

struct LoadedTable {
    Family family = Family::a;
    std::string generator_version;
    std::map<int, std::vector<BigInt>> rows;
    int max_n = 0;
};

// Throws PersistenceError on any malformed or inconsistent content: bad JSON,
// wrong keys, family mismatch, duplicate or out-of-order entries, gaps in a
// row's k-range, missing rows, or non-strict decimal values.
LoadedTable load_table(std::istream& in);
LoadedTable load_table_file(const std::string& path);

// Write a freshly streamed table (header + rows base..max_n) to a file.
void save_table_file(const std::string& path, Family f, int max_n);

}  // namespace gammadesk
