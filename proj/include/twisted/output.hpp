#pragma once

#include "twisted/conf_betti.hpp"
#include "twisted/poly.hpp"
#include "twisted/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twisted {

/// Result payload shared by every output format.
///
/// kind is one of "table", "recurrence", "verification", "limits". Rows in
/// data are flat objects; exact values are strings "p/q" (or "p"). The column
/// order used by csv and table output is kept in meta["columns"].
struct OutputDocument {
    std::string kind;
    nlohmann::json meta = nlohmann::json::object();
    nlohmann::json data = nlohmann::json::array();

    [[nodiscard]] std::vector<std::string> columns() const;
    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

inline std::string exact(const Rational& r) { return r.str(); }

/// Stable column and recurrence attached to a Betti grid.
struct StableSummary {
    std::vector<Rational> values;
    RecurrenceSpec recurrence;
    RationalFunction generating_function;
};

/// Rows {i, n, value} for every in-support cell with n >= min_n, plus
/// {i, n: "stable", value} rows when a stable summary is given.
OutputDocument betti_document(const BettiTable& table, const std::string& rep_label, int min_n = 0,
                              const std::optional<StableSummary>& stable = std::nullopt);

std::string to_json(const OutputDocument& doc);
OutputDocument from_json(std::string_view text);

/// Meta as '# key: value' lines, then a header and one line per row.
std::string to_csv(const OutputDocument& doc);

/// Human-readable layout: Betti grids as i-by-n tables, other kinds as aligned columns.
std::string to_table(const OutputDocument& doc);

enum class OutputFormat { Table, Csv, Json };
OutputFormat parse_format(std::string_view s);
std::string render(const OutputDocument& doc, OutputFormat fmt);

}  // namespace twisted
