#include "roughdxl/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace roughdxl {

namespace {

std::string trim(std::string_view s) {
    auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return std::string(s);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

/// Lowercase, runs of inner whitespace replaced by '_'.
std::string normalize(std::string_view cell) {
    std::string out;
    bool pending_space = false;
    for (char c : trim(cell)) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = true;
            continue;
        }
        if (pending_space) out += '_';
        pending_space = false;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Decision parse_decision(const std::string& cell, std::size_t row) {
    const std::string v = lowercase(cell);
    if (v == "yes" || v == "true") return Decision::yes;
    if (v == "no" || v == "false") return Decision::no;
    if (v == "?") return Decision::undefined;
    throw IngestError(row, "decision value '" + cell + "' is not yes/true, no/false or ?");
}

}  // namespace

IngestError::IngestError(std::size_t row, const std::string& message)
    : std::runtime_error(row ? "row " + std::to_string(row) + ": " + message : message), row_(row) {}

bool DecisionTable::Row::fully_defined() const {
    return decision != Decision::undefined &&
           std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
}

DecisionTable parse_table(std::string_view csv, const std::string& predicate) {
    if (!is_constant_name(predicate) || !std::islower(static_cast<unsigned char>(predicate.front())))
        throw IngestError(0, "'" + predicate + "' is not a valid predicate name");
    if (predicate == "lower" || predicate == "boundary")
        throw IngestError(0, "'" + predicate + "' is reserved for queries and cannot name a predicate");

    DecisionTable table;
    table.predicate = predicate;

    std::istringstream in{std::string(csv)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (trim(line).empty()) continue;

        auto cells = split(line);
        if (!have_header) {
            if (cells.size() < 2)
                throw IngestError(lineno, "header needs at least one attribute and a decision column");
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::string name = normalize(cells[i]);
                if (name.empty()) {
                    throw IngestError(lineno, i + 1 == cells.size() ? "empty decision column name"
                                                                    : "empty attribute name in column " +
                                                                          std::to_string(i + 1));
                }
                if (i + 1 == cells.size()) {
                    table.decision_attribute = std::move(name);
                } else {
                    table.attributes.push_back(std::move(name));
                }
            }
            have_header = true;
            continue;
        }

        if (cells.size() != table.attributes.size() + 1) {
            throw IngestError(lineno, "expected " + std::to_string(table.attributes.size() + 1) + " cells, found " +
                                          std::to_string(cells.size()));
        }
        DecisionTable::Row row;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            if (cells[i] == "?") {
                row.values.emplace_back(std::nullopt);
                continue;
            }
            std::string value = normalize(cells[i]);
            if (!is_constant_name(value)) {
                throw IngestError(lineno, "cell '" + cells[i] + "' in column " + std::to_string(i + 1) +
                                              " is not a valid constant");
            }
            row.values.emplace_back(std::move(value));
        }
        row.decision = parse_decision(cells.back(), lineno);
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw IngestError(0, "missing header line");
    return table;
}

DecisionTable load_table(const std::filesystem::path& path, const std::string& predicate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError(0, "cannot open table file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), predicate);
}

std::set<Literal> to_facts(const DecisionTable& t) {
    std::set<Literal> out;
    for (const auto& row : t.rows) {
        if (!row.fully_defined()) continue;
        Atom a{t.predicate, {}};
        a.args.reserve(row.values.size());
        for (const auto& v : row.values) a.args.push_back(Term::constant(*v));
        out.insert(row.decision == Decision::yes ? positive(std::move(a)) : negative(std::move(a)));
    }
    return out;
}

Program to_program(const DecisionTable& t) {
    Program p;
    for (const auto& l : to_facts(t)) p.add(Rule{l, {}});
    return p;
}

}  // namespace roughdxl
