#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "roughdxl/core_model.hpp"
#include "roughdxl/query.hpp"

namespace roughdxl {

/// Diagnostic for program and query text. `line` and `column` are 1-based
/// and point inside the source.
class ParseError : public std::runtime_error {
public:
    enum class Kind { lexical, syntactic, arity_conflict, unsafe_rule };

    ParseError(Kind kind, std::size_t line, std::size_t column, std::string message);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

const char* to_string(ParseError::Kind kind) noexcept;

/// Parses DXL program text:
///
///     program := { rule }
///     rule    := literal [ ":-" literal { "," literal } ] "."
///     literal := [ "~" ] atom
///     atom    := lcname [ "(" term { "," term } ")" ]
///     term    := lcname | number | ucname
///
/// `%` starts a comment that runs to the end of the line. Duplicate rules
/// collapse. Unsafe rules and arity conflicts are reported as ParseError.
Program parse_program(std::string_view source);

/// Parses a rough query:
///
///     query   := qprime | atom "?"
///     qprime  := qsimple { "," qsimple }
///     qsimple := literal | "lower" "(" literal ")" | "boundary" "(" atom ")"
///
/// An optional terminating "." is accepted.
RoughQuery parse_query(std::string_view source);

}  // namespace roughdxl
