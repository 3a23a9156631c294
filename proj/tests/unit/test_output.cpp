#include "twisted/commands.hpp"
#include "twisted/conf_counts.hpp"
#include "twisted/tori.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace twisted;
using nlohmann::json;

namespace {

std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                out.back() += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

// Reads a CSV document back into header + rows, skipping '#' meta lines.
std::vector<std::vector<std::string>> read_csv(const std::string& text, std::vector<std::string>& meta) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("# ", 0) == 0) {
            meta.push_back(line.substr(2));
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

void check_formats_agree(const OutputDocument& doc) {
    REQUIRE(from_json(to_json(doc)) == doc);
    REQUIRE(to_json(from_json(to_json(doc))) == to_json(doc));

    std::vector<std::string> meta;
    const auto rows = read_csv(to_csv(doc), meta);
    const auto cols = doc.columns();
    REQUIRE(rows.size() == doc.data.size() + 1);
    REQUIRE(rows[0] == cols);
    for (size_t r = 0; r < doc.data.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            const auto& row = doc.data[r];
            REQUIRE(rows[r + 1][c] == cell(row.contains(cols[c]) ? row[cols[c]] : json()));
        }
    REQUIRE(meta.front() == "kind: " + doc.kind);
    for (const auto& [key, value] : doc.meta.items())
        if (key != "columns") REQUIRE(std::find(meta.begin(), meta.end(), key + ": " + cell(value)) != meta.end());

    const std::string table = to_table(doc);
    for (const auto& row : doc.data)
        for (const auto& [key, value] : row.items())
            if (value.is_string()) REQUIRE(table.find(value.get<std::string>()) != std::string::npos);
}

RepArg rep(const std::string& s) { return rep_from_args(s, std::nullopt); }

}  // namespace

TEST_CASE("argument helpers", "[commands]") {
    CHECK(split_top_level("C(X1,2),V1, 1") == std::vector<std::string>{"C(X1,2)", "V1", "1"});
    CHECK(parse_q_list("3,5, 9") == std::vector<BigInt>{3, 5, 9});
    CHECK_THROWS(parse_q_list("3,6"));
    CHECK_THROWS(parse_q_list("x"));
    CHECK(rep_from_args(std::nullopt, std::string("0,1")).poly == CharPoly::basis(LambdaSpec({0, 1})));
    CHECK(rep("V11").poly == builtin_rep("V11"));
    CHECK_THROWS(rep_from_args(std::nullopt, std::nullopt));
    CHECK_THROWS(rep_from_args(std::string("V1"), std::string("1")));
}

TEST_CASE("Betti documents", "[output]") {
    const OutputDocument doc = cmd_conf_betti({rep("V11"), 13, 14, 3, false});
    CHECK(doc.kind == "table");
    CHECK(doc.meta["grid"] == "conf");
    CHECK(doc.columns() == std::vector<std::string>{"i", "n", "value"});
    bool found = false;
    for (const auto& row : doc.data)
        if (row["i"] == 11 && row["n"] == 14) found = row["value"] == "21";
    CHECK(found);
    check_formats_agree(doc);
    CHECK(to_table(doc).find("21") != std::string::npos);

    const OutputDocument stable = cmd_conf_betti({rep("V2"), 10, 14, 0, true});
    CHECK(stable.meta.contains("recurrence"));
    CHECK(stable.meta["recurrence"]["coefficients"] == json{"2", "-2", "2", "-1"});
    check_formats_agree(stable);

    const OutputDocument tori = cmd_tori_betti({rep("V11"), 6, 6, 0, true});
    CHECK(tori.meta["grid"] == "tori");
    CHECK(tori.meta["recurrence"]["coefficients"] == json{"1", "1", "-1"});
    check_formats_agree(tori);

    CHECK_THROWS(cmd_conf_betti({rep("V1"), 5, kMaxGridN + 1, 0, false}));
    CHECK_THROWS(cmd_conf_betti({rep("V1"), -1, 5, 0, false}));
}

TEST_CASE("count documents", "[output]") {
    CountOptions o;
    o.qs = {3};
    o.rep = rep("1");
    o.max_n = 5;
    const OutputDocument doc = cmd_count(o);
    std::vector<std::string> values;
    for (const auto& row : doc.data) values.push_back(row["value"]);
    CHECK(values == std::vector<std::string>{"1", "3", "6", "18", "54", "162"});
    check_formats_agree(doc);

    o.limits = true;
    o.qs = {2};
    o.rep = rep_from_args(std::nullopt, std::string("0,1"));
    const OutputDocument lim = cmd_count(o);
    CHECK(lim.kind == "limits");
    CHECK(lim.data[0]["expectation"] == "1/5");
    CHECK(lim.meta.contains("outside_hypothesis"));
    check_formats_agree(lim);
}

TEST_CASE("verification documents and exit semantics", "[output]") {
    VerifyOptions o;
    o.side = Side::Conf;
    o.qs = {3, 5};
    o.max_n = 4;
    o.reps = {rep("1"), rep("V1"), rep("V11")};
    o.bruteforce = true;
    const OutputDocument doc = cmd_verify(o);
    CHECK(doc.kind == "verification");
    CHECK(doc.data.size() == 2 * 5 * 3);
    CHECK(all_pass(doc));
    check_formats_agree(doc);
    CHECK(to_table(doc).find("PASS") != std::string::npos);

    OutputDocument broken = doc;
    broken.data[4]["pass"] = false;
    CHECK_FALSE(all_pass(broken));

    o.max_n = 20;
    CHECK_THROWS_AS(cmd_verify(o), GuardExceeded);

    VerifyOptions t;
    t.side = Side::Tori;
    t.qs = {2, 3};
    t.max_n = 4;
    t.reps = {rep("V2")};
    CHECK(all_pass(cmd_verify(t)));
}

TEST_CASE("threaded verification keeps row order", "[output][property]") {
    VerifyOptions o;
    o.side = Side::Conf;
    o.qs = {3, 5, 7};
    o.max_n = 5;
    o.reps = {rep("1"), rep("V1"), rep("V11"), rep("V2")};
    o.bruteforce = true;
    const std::string serial = to_json(cmd_verify(o));
    for (int threads : {2, 3, 8}) {
        o.threads = threads;
        REQUIRE(to_json(cmd_verify(o)) == serial);
    }
}

TEST_CASE("format parsing", "[output]") {
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS(parse_format("xml"));
    CHECK_THROWS(from_json("{\"kind\": 3}"));
    CHECK_THROWS(from_json("not json"));
}
