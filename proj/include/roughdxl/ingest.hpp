#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "roughdxl/core_model.hpp"

namespace roughdxl {

enum class Decision { yes, no, undefined };

/// A binary decision system. Cells are normalized constants; std::nullopt
/// marks an undefined value (`?` in the file).
struct DecisionTable {
    struct Row {
        std::vector<std::optional<std::string>> values;
        Decision decision = Decision::undefined;

        bool fully_defined() const;

        friend bool operator==(const Row&, const Row&) = default;
    };

    std::string predicate;
    std::vector<std::string> attributes;
    std::string decision_attribute;
    std::vector<Row> rows;

    friend bool operator==(const DecisionTable&, const DecisionTable&) = default;
};

/// Load failure; `row` is the 1-based line of the file (0 when not tied to a
/// line).
class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t row, const std::string& message);
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Parses CSV text: the header names the attributes, its last column names
/// the decision. Decisions accept yes/true and no/false in any case; `?`
/// marks an undefined cell. Values are lowercased and inner spaces become
/// `_`. Blank lines are skipped.
DecisionTable parse_table(std::string_view csv, const std::string& predicate);
DecisionTable load_table(const std::filesystem::path& path, const std::string& predicate);

/// Positive literal per fully defined row decided yes, negative literal per
/// row decided no. Rows with an undefined attribute or decision yield
/// nothing; duplicates collapse.
std::set<Literal> to_facts(const DecisionTable& t);

/// The facts as a program (one fact rule each).
Program to_program(const DecisionTable& t);

}  // namespace roughdxl
