#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammadesk/table_io.hpp"
#include "gammadesk/version.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace gammadesk;

namespace {

std::string render_table(Family f, int max_n) {
    std::ostringstream os;
    write_table_header(os, f);
    stream_rows(f, max_n, [&](int n, const std::vector<BigInt>& row) {
        write_table_row(os, f, n, row);
    });
    return os.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += "\n";
    }
    return out;
}

LoadedTable load_str(const std::string& content) {
    std::istringstream in(content);
    return load_table(in);
}

struct Caught {
    long line = -1;
    std::string what;
};

Caught expect_fail(const std::string& content) {
    std::istringstream in(content);
    try {
        load_table(in);
    } catch (const PersistenceError& e) {
        return {e.line(), e.what()};
    }
    FAIL("expected PersistenceError");
    return {};
}

bool mentions(const Caught& c, const std::string& phrase) {
    return c.what.find(phrase) != std::string::npos;
}

}  // namespace

TEST_CASE("strict decimal parsing") {
    BigInt v;
    CHECK(parse_decimal("0", v));
    CHECK(v == 0);
    CHECK(parse_decimal("-12", v));
    CHECK(v == -12);
    CHECK(parse_decimal("123456789012345678901234567890", v));
    CHECK(v.str() == "123456789012345678901234567890");
    CHECK_FALSE(parse_decimal("", v));
    CHECK_FALSE(parse_decimal("-", v));
    CHECK_FALSE(parse_decimal("007", v));
    CHECK_FALSE(parse_decimal("-0", v));
    CHECK_FALSE(parse_decimal("x0", v));
    CHECK_FALSE(parse_decimal("1x", v));
    CHECK_FALSE(parse_decimal(" 1", v));
    CHECK_FALSE(parse_decimal("+1", v));
}

TEST_CASE("serialized format is frozen") {
    std::vector<std::string> lines = split_lines(render_table(Family::a, 3));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == std::string("{\"base_rows\":{\"1\":[\"1\"],\"2\":[\"1\"]},"
                                  "\"family\":\"a\",\"generator_version\":\"") +
                          GAMMADESK_VERSION + "\"}");
    CHECK(lines[1] == "{\"family\":\"a\",\"k\":0,\"n\":1,\"value\":\"1\"}");
    CHECK(lines[2] == "{\"family\":\"a\",\"k\":0,\"n\":2,\"value\":\"1\"}");
    CHECK(lines[3] == "{\"family\":\"a\",\"k\":0,\"n\":3,\"value\":\"1\"}");
    CHECK(lines[4] == "{\"family\":\"a\",\"k\":1,\"n\":3,\"value\":\"0\"}");

    std::vector<std::string> blines = split_lines(render_table(Family::b, 2));
    REQUIRE(blines.size() == 4);
    CHECK(blines[0] == std::string("{\"base_rows\":{\"1\":[\"1\"]},"
                                   "\"family\":\"b\",\"generator_version\":\"") +
                           GAMMADESK_VERSION + "\"}");
    CHECK(blines[1] == "{\"family\":\"b\",\"k\":1,\"n\":1,\"value\":\"1\"}");
    CHECK(blines[2] == "{\"family\":\"b\",\"k\":1,\"n\":2,\"value\":\"1\"}");
    CHECK(blines[3] == "{\"family\":\"b\",\"k\":2,\"n\":2,\"value\":\"-1\"}");
}

TEST_CASE("stream round trip preserves every row") {
    for (Family f : {Family::a, Family::b}) {
        std::map<int, std::vector<BigInt>> cold;
        stream_rows(f, 9, [&](int n, const std::vector<BigInt>& r) { cold[n] = r; });
        LoadedTable t = load_str(render_table(f, 9));
        CHECK(t.family == f);
        CHECK(t.generator_version == GAMMADESK_VERSION);
        CHECK(t.max_n == 9);
        CHECK(t.rows.size() == 9);
        for (int n = 1; n <= 9; ++n) CHECK(t.rows.at(n) == cold.at(n));
    }
}

TEST_CASE("header validation failures carry line 1") {
    Caught c = expect_fail("");
    CHECK(c.line == 1);
    CHECK(mentions(c, "empty table file"));

    c = expect_fail("{oops\n");
    CHECK(c.line == 1);
    CHECK(mentions(c, "header is not valid JSON"));

    c = expect_fail("{}\n");
    CHECK(c.line == 1);
    CHECK(mentions(c, "must carry family, generator_version and base_rows"));

    std::vector<std::string> lines = split_lines(render_table(Family::a, 3));
    std::string bad_family = lines[0];
    bad_family.replace(bad_family.find("\"family\":\"a\""), 12, "\"family\":\"q\"");
    lines[0] = bad_family;
    c = expect_fail(join_lines(lines));
    CHECK(c.line == 1);

    lines = split_lines(render_table(Family::a, 3));
    std::string bad_base = lines[0];
    bad_base.replace(bad_base.find("\"2\":[\"1\"]"), 9, "\"2\":[\"2\"]");
    lines[0] = bad_base;
    c = expect_fail(join_lines(lines));
    CHECK(c.line == 1);
    CHECK(mentions(c, "base_rows does not match"));
}

TEST_CASE("entry validation failures carry the offending line number") {
    const std::string good = render_table(Family::a, 4);
    // lines: 1 header, 2 (1,0), 3 (2,0), 4 (3,0), 5 (3,1), 6 (4,0), 7 (4,1)

    auto with_line4 = [&](const std::string& replacement) {
        std::vector<std::string> lines = split_lines(good);
        lines[3] = replacement;
        return join_lines(lines);
    };

    Caught c = expect_fail(with_line4("{not json"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "entry is not valid JSON"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":3}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "entry must carry family, n, k, value"));

    c = expect_fail(with_line4("{\"family\":\"b\",\"k\":0,\"n\":3,\"value\":\"1\"}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "entry family does not match header"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":\"3\",\"value\":\"1\"}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "n and k must be integers"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":3,\"value\":1}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "value must be a decimal string"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":3,\"value\":\"007\"}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "value is not a strict decimal integer: '007'"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":3,\"value\":\"-0\"}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "value is not a strict decimal integer: '-0'"));

    c = expect_fail(with_line4("{\"family\":\"a\",\"k\":0,\"n\":0,\"value\":\"1\"}"));
    CHECK(c.line == 4);
    CHECK(mentions(c, "n must be >= 1"));
}

TEST_CASE("structural failures: order, gaps, duplicates, completeness") {
    const std::string good = render_table(Family::a, 4);
    std::vector<std::string> base = split_lines(good);

    // blank line inside the table
    {
        std::vector<std::string> lines = base;
        lines.insert(lines.begin() + 3, "");
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 4);
        CHECK(mentions(c, "blank line inside table"));
    }
    // k beyond the row's range
    {
        std::vector<std::string> lines = base;
        lines.insert(lines.begin() + 3,
                     "{\"family\":\"a\",\"k\":1,\"n\":2,\"value\":\"1\"}");
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 4);
        CHECK(mentions(c, "k=1 out of range for row 2"));
    }
    // a skipped row
    {
        std::vector<std::string> lines = base;
        lines.erase(lines.begin() + 2);  // drop row 2
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 3);
        CHECK(mentions(c, "rows out of order: expected row 2, got 3"));
    }
    // duplicate entry
    {
        std::vector<std::string> lines = base;
        lines.insert(lines.begin() + 4, lines[3]);  // (3,0) twice
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 5);
        CHECK(mentions(c, "entries out of order in row 3: expected k=1, got k=0"));
    }
    // row starting past its minimal k
    {
        std::vector<std::string> lines = base;
        lines.erase(lines.begin() + 3);  // drop (3,0), row 3 now starts at k=1
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 4);
        CHECK(mentions(c, "row 3 does not start at its minimal k"));
    }
    // incomplete row noticed when the next row starts
    {
        std::vector<std::string> lines = base;
        lines.erase(lines.begin() + 4);  // drop (3,1)
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 5);
        CHECK(mentions(c, "row 3 is incomplete (stops at k=0)"));
    }
    // incomplete final row noticed at end of file
    {
        std::vector<std::string> lines = base;
        lines.pop_back();  // drop (4,1)
        Caught c = expect_fail(join_lines(lines));
        CHECK(c.line == 6);
        CHECK(mentions(c, "row 4 is incomplete (stops at k=0)"));
    }
    // header with no rows at all
    {
        Caught c = expect_fail(base[0] + "\n");
        CHECK(c.line == 2);
        CHECK(mentions(c, "table holds no rows"));
    }
    // gap inside a wide row (family b row 3 has k = 1..3)
    {
        std::vector<std::string> blines = split_lines(render_table(Family::b, 3));
        // lines: 1 header, 2 (1,1), 3 (2,1), 4 (2,2), 5 (3,1), 6 (3,2), 7 (3,3)
        blines.erase(blines.begin() + 5);  // drop (3,2)
        Caught c = expect_fail(join_lines(blines));
        CHECK(c.line == 6);
        CHECK(mentions(c, "entries out of order in row 3: expected k=2, got k=3"));
    }
}

TEST_CASE("file round trip is deterministic and validated") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string p1 = (dir / "gammadesk_tio_1.jsonl").string();
    const std::string p2 = (dir / "gammadesk_tio_2.jsonl").string();

    save_table_file(p1, Family::b, 7);
    LoadedTable t = load_table_file(p1);
    CHECK(t.family == Family::b);
    CHECK(t.max_n == 7);
    std::map<int, std::vector<BigInt>> cold;
    stream_rows(Family::b, 7, [&](int n, const std::vector<BigInt>& r) { cold[n] = r; });
    for (int n = 1; n <= 7; ++n) CHECK(t.rows.at(n) == cold.at(n));

    save_table_file(p2, Family::b, 7);
    std::ifstream f1(p1), f2(p2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str() == render_table(Family::b, 7));
    fs::remove(p1);
    fs::remove(p2);

    try {
        load_table_file((dir / "gammadesk_tio_missing.jsonl").string());
        FAIL("expected PersistenceError");
    } catch (const PersistenceError& e) {
        CHECK(e.line() == 0);
        CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
    }
}
