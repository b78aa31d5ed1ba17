#include "gammadesk/table_io.hpp"

#include "gammadesk/version.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace gammadesk {

using nlohmann::json;

namespace {

json base_rows_json(Family f) {
    json base = json::object();
    if (f == Family::a) {
        base["1"] = json::array({"1"});
        base["2"] = json::array({"1"});
    } else {
        base["1"] = json::array({"1"});
    }
    return base;
}

}  // namespace

void write_table_header(std::ostream& out, Family f) {
    json h;
    h["family"] = family_name(f);
    h["generator_version"] = GAMMADESK_VERSION;
    h["base_rows"] = base_rows_json(f);
    out << h.dump() << "\n";
}

void write_table_row(std::ostream& out, Family f, int n, const std::vector<BigInt>& row) {
    const int k0 = row_min_k(f, n);
    for (std::size_t i = 0; i < row.size(); ++i) {
        json r;
        r["family"] = family_name(f);
        r["n"] = n;
        r["k"] = k0 + static_cast<int>(i);
        r["value"] = row[i].str();
        out << r.dump() << "\n";
    }
}

LoadedTable load_table(std::istream& in) {
    LoadedTable t;
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line))
        throw PersistenceError("empty table file (missing header)", 1);
    ++line_no;
    json h;
    try {
        h = json::parse(line);
    } catch (const json::parse_error& e) {
        throw PersistenceError(std::string("header is not valid JSON: ") + e.what(),
                               line_no);
    }
    if (!h.is_object() || !h.contains("family") || !h.contains("generator_version") ||
        !h.contains("base_rows"))
        throw PersistenceError(
            "header must carry family, generator_version and base_rows", line_no);
    if (!h["family"].is_string())
        throw PersistenceError("header family must be a string", line_no);
    try {
        t.family = parse_family(h["family"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw PersistenceError(e.what(), line_no);
    }
    if (!h["generator_version"].is_string())
        throw PersistenceError("generator_version must be a string", line_no);
    t.generator_version = h["generator_version"].get<std::string>();
    if (h["base_rows"] != base_rows_json(t.family))
        throw PersistenceError("base_rows does not match the family's base rows",
                               line_no);

    int cur_n = 0, cur_k = 0;
    std::vector<BigInt> cur_row;
    auto flush_row = [&]() {
        if (cur_n == 0) return;
        if (cur_k != row_max_k(t.family, cur_n))
            throw PersistenceError("row " + std::to_string(cur_n) +
                                       " is incomplete (stops at k=" +
                                       std::to_string(cur_k) + ")",
                                   line_no);
        t.rows[cur_n] = cur_row;
        t.max_n = cur_n;
        cur_row.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            throw PersistenceError("blank line inside table", line_no);
        json r;
        try {
            r = json::parse(line);
        } catch (const json::parse_error& e) {
            throw PersistenceError(std::string("entry is not valid JSON: ") + e.what(),
                                   line_no);
        }
        if (!r.is_object() || !r.contains("family") || !r.contains("n") ||
            !r.contains("k") || !r.contains("value"))
            throw PersistenceError("entry must carry family, n, k, value", line_no);
        if (!r["family"].is_string() ||
            r["family"].get<std::string>() != family_name(t.family))
            throw PersistenceError("entry family does not match header", line_no);
        if (!r["n"].is_number_integer() || !r["k"].is_number_integer())
            throw PersistenceError("n and k must be integers", line_no);
        const int n = r["n"].get<int>();
        const int k = r["k"].get<int>();
        if (!r["value"].is_string())
            throw PersistenceError("value must be a decimal string", line_no);
        BigInt v;
        if (!parse_decimal(r["value"].get<std::string>(), v))
            throw PersistenceError("value is not a strict decimal integer: '" +
                                       r["value"].get<std::string>() + "'",
                                   line_no);
        if (n < 1) throw PersistenceError("n must be >= 1", line_no);
        if (k < row_min_k(t.family, n) || k > row_max_k(t.family, n))
            throw PersistenceError("k=" + std::to_string(k) + " out of range for row " +
                                       std::to_string(n),
                                   line_no);
        if (n != cur_n) {
            // start of a new row: previous row must be complete, order strict
            flush_row();
            if (n != (cur_n == 0 ? 1 : cur_n + 1))
                throw PersistenceError("rows out of order: expected row " +
                                           std::to_string(cur_n + 1) + ", got " +
                                           std::to_string(n),
                                       line_no);
            if (k != row_min_k(t.family, n))
                throw PersistenceError("row " + std::to_string(n) +
                                           " does not start at its minimal k",
                                       line_no);
            cur_n = n;
            cur_k = k;
            cur_row.assign(1, v);
        } else {
            if (k != cur_k + 1)
                throw PersistenceError("entries out of order in row " +
                                           std::to_string(n) + ": expected k=" +
                                           std::to_string(cur_k + 1) + ", got k=" +
                                           std::to_string(k),
                                       line_no);
            cur_k = k;
            cur_row.push_back(v);
        }
    }
    flush_row();
    if (t.max_n == 0) throw PersistenceError("table holds no rows", line_no + 1);
    return t;
}

LoadedTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PersistenceError("cannot open '" + path + "' for reading", 0);
    return load_table(in);
}

void save_table_file(const std::string& path, Family f, int max_n) {
    std::ofstream out(path);
    if (!out) throw PersistenceError("cannot open '" + path + "' for writing", 0);
    write_table_header(out, f);
    stream_rows(f, max_n, [&](int n, const std::vector<BigInt>& row) {
        write_table_row(out, f, n, row);
    });
    out.flush();
    if (!out) throw PersistenceError("write to '" + path + "' failed", 0);
}

}  // namespace gammadesk
