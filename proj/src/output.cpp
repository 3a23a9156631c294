#include "twisted/output.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twisted {

using nlohmann::json;

std::vector<std::string> OutputDocument::columns() const {
    std::vector<std::string> out;
    if (meta.contains("columns"))
        for (const auto& c : meta["columns"]) out.push_back(c.get<std::string>());
    return out;
}

namespace {

json recurrence_json(const RecurrenceSpec& r) {
    json cs = json::array();
    for (const auto& c : r.coefficients) cs.push_back(exact(c));
    return {{"coefficients", cs}, {"valid_from", r.valid_from}};
}

std::string cell_text(const json& v, const std::string& column) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return column == "pass" ? (v.get<bool>() ? "PASS" : "FAIL") : (v.get<bool>() ? "true" : "false");
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string pad_left(const std::string& s, size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

std::string grid_table(const OutputDocument& doc) {
    const int max_i = doc.meta.at("max_i").get<int>();
    const int min_n = doc.meta.at("min_n").get<int>();
    const int max_n = doc.meta.at("max_n").get<int>();
    std::map<std::pair<int, int>, std::string> cells;  // column max_n+1 is the stable column
    bool has_stable = false;
    for (const auto& row : doc.data) {
        const int i = row.at("i").get<int>();
        int col = 0;
        if (row.at("n").is_string()) {
            col = max_n + 1;
            has_stable = true;
        } else {
            col = row.at("n").get<int>();
        }
        cells[{i, col}] = row.at("value").get<std::string>();
    }
    std::vector<int> cols;
    for (int n = min_n; n <= max_n; ++n) cols.push_back(n);
    if (has_stable) cols.push_back(max_n + 1);

    std::map<int, size_t> width;
    for (int c : cols) width[c] = c > max_n ? 6 : std::to_string(c).size();
    for (const auto& [key, text] : cells) width[key.second] = std::max(width[key.second], text.size());
    const size_t lead = std::max<size_t>(5, std::to_string(max_i).size());

    std::ostringstream os;
    if (doc.meta.contains("title")) os << doc.meta["title"].get<std::string>() << "\n";
    os << pad_left("i \\ n", lead) << " |";
    for (int c : cols) os << "  " << pad_left(c > max_n ? "stable" : std::to_string(c), width[c]);
    os << "\n" << std::string(lead + 1, '-') << "+";
    for (int c : cols) os << std::string(width[c] + 2, '-');
    os << "\n";
    for (int i = 0; i <= max_i; ++i) {
        os << pad_left(std::to_string(i), lead) << " |";
        for (int c : cols) {
            auto it = cells.find({i, c});
            os << "  " << pad_left(it == cells.end() ? "" : it->second, width[c]);
        }
        os << "\n";
    }
    if (doc.meta.contains("recurrence")) {
        const auto& r = doc.meta["recurrence"];
        os << "recurrence: a_i =";
        int k = 1;
        for (const auto& c : r["coefficients"]) {
            os << (k == 1 ? " " : " + ") << "(" << c.get<std::string>() << ")*a_{i-" << k << "}";
            ++k;
        }
        if (k == 1) os << " 0";
        os << "  for i >= " << r["valid_from"].get<int>() << "\n";
    }
    if (doc.meta.contains("stable_generating_function"))
        os << "stable generating function: " << doc.meta["stable_generating_function"].get<std::string>() << "\n";
    return os.str();
}

std::string column_table(const OutputDocument& doc) {
    const auto cols = doc.columns();
    std::vector<size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : doc.data) {
        std::vector<std::string> cells;
        for (size_t k = 0; k < cols.size(); ++k) {
            cells.push_back(cell_text(row.contains(cols[k]) ? row[cols[k]] : json(), cols[k]));
            width[k] = std::max(width[k], cells.back().size());
        }
        rows.push_back(std::move(cells));
    }
    std::ostringstream os;
    if (doc.meta.contains("title")) os << doc.meta["title"].get<std::string>() << "\n";
    for (size_t k = 0; k < cols.size(); ++k) os << (k ? "  " : "") << pad_left(cols[k], width[k]);
    os << "\n";
    for (size_t k = 0; k < cols.size(); ++k) os << (k ? "  " : "") << std::string(width[k], '-');
    os << "\n";
    for (const auto& r : rows) {
        for (size_t k = 0; k < cols.size(); ++k) os << (k ? "  " : "") << pad_left(r[k], width[k]);
        os << "\n";
    }
    for (const auto& [key, value] : doc.meta.items()) {
        if (key == "columns" || key == "title") continue;
        os << key << ": " << cell_text(value, key) << "\n";
    }
    return os.str();
}

}  // namespace

OutputDocument betti_document(const BettiTable& table, const std::string& rep_label, int min_n,
                              const std::optional<StableSummary>& stable) {
    const bool conf = table.kind == BettiKind::Conf;
    OutputDocument doc;
    doc.kind = "table";
    doc.meta["grid"] = conf ? "conf" : "tori";
    doc.meta["rep"] = rep_label;
    doc.meta["character_polynomial"] = table.rep.str();
    doc.meta["max_i"] = table.max_i;
    doc.meta["min_n"] = min_n;
    doc.meta["max_n"] = table.max_n;
    doc.meta["columns"] = {"i", "n", "value"};
    doc.meta["title"] = conf ? "alpha_i(n) = dim H^i(Conf_n(C); " + rep_label + ")"
                             : "beta_i(n) = dim H^{2i}(T_n(C); " + rep_label + ")";
    for (int i = 0; i <= table.max_i; ++i)
        for (int n = std::max(min_n, 0); n <= table.max_n; ++n)
            if (table.in_support(i, n)) doc.data.push_back({{"i", i}, {"n", n}, {"value", exact(table.at(i, n))}});
    if (stable) {
        for (size_t i = 0; i < stable->values.size(); ++i)
            doc.data.push_back({{"i", static_cast<int>(i)}, {"n", "stable"}, {"value", exact(stable->values[i])}});
        doc.meta["recurrence"] = recurrence_json(stable->recurrence);
        doc.meta["stable_generating_function"] = stable->generating_function.str("z");
    }
    return doc;
}

std::string to_json(const OutputDocument& doc) {
    const json j = {{"kind", doc.kind}, {"meta", doc.meta}, {"data", doc.data}};
    return j.dump(2) + "\n";
}

OutputDocument from_json(std::string_view text) {
    const json j = json::parse(text);
    if (!j.is_object() || !j.contains("kind") || !j.contains("meta") || !j.contains("data"))
        throw std::invalid_argument("output document needs kind, meta and data");
    OutputDocument doc;
    doc.kind = j["kind"].get<std::string>();
    doc.meta = j["meta"];
    doc.data = j["data"];
    return doc;
}

std::string to_csv(const OutputDocument& doc) {
    std::ostringstream os;
    os << "# kind: " << doc.kind << "\n";
    for (const auto& [key, value] : doc.meta.items()) {
        if (key == "columns") continue;
        os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    const auto cols = doc.columns();
    for (size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
    os << "\n";
    for (const auto& row : doc.data) {
        for (size_t k = 0; k < cols.size(); ++k) {
            const json v = row.contains(cols[k]) ? row[cols[k]] : json();
            os << (k ? "," : "") << csv_quote(v.is_boolean() ? (v.get<bool>() ? "true" : "false") : cell_text(v, ""));
        }
        os << "\n";
    }
    return os.str();
}

std::string to_table(const OutputDocument& doc) {
    if (doc.kind == "table" && doc.meta.contains("grid")) return grid_table(doc);
    return column_table(doc);
}

OutputFormat parse_format(std::string_view s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (table, csv or json)");
}

std::string render(const OutputDocument& doc, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Table: return to_table(doc);
        case OutputFormat::Csv: return to_csv(doc);
        case OutputFormat::Json: return to_json(doc);
    }
    return {};
}

}  // namespace twisted
