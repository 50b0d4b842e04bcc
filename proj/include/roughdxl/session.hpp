#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "roughdxl/core_model.hpp"
#include "roughdxl/engine.hpp"
#include "roughdxl/ingest.hpp"
#include "roughdxl/query.hpp"
#include "roughdxl/rough_semantics.hpp"

namespace roughdxl {

/// Failure to load a program or table; the message carries the file name
/// and, where known, the line and column.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accumulated program plus a lazily materialized rough database. Any
/// change to the program drops the database, so answers never come from a
/// stale model.
class Session {
public:
    /// Adds the rules of `text`. Throws ParseError or ProgramError; the
    /// session is unchanged on failure.
    void load_program_text(std::string_view text);
    /// Throws LoadError.
    void load_program_file(const std::filesystem::path& path);
    /// Adds the facts of a decision table. Throws LoadError.
    void load_table(const std::filesystem::path& path, const std::string& predicate);
    void add_table(const DecisionTable& table);

    const Program& program() const noexcept { return program_; }
    /// Predicates of the program plus those declared by loaded tables.
    Signature signature() const;

    const RoughDatabase& database();
    /// Least model of the renamed program.
    const FactStore& fact_store();
    bool is_materialized() const noexcept { return db_.has_value(); }
    std::size_t materializations() const noexcept { return materializations_; }

    /// Throws ParseError or QueryError.
    Answer query(std::string_view text);

    struct StepResult {
        std::string output;
        std::string diagnostic;
        bool quit = false;
    };

    /// One REPL line: `:load <file>`, `:table <file> <pred>`, `:model`,
    /// `:relations`, `:help`, `:quit`, or a rough query.
    StepResult step(std::string_view line);

private:
    void materialize();
    void invalidate() noexcept;

    Program program_;
    Signature declared_;
    std::optional<FactStore> store_;
    std::optional<RoughDatabase> db_;
    std::size_t materializations_ = 0;
};

}  // namespace roughdxl
