#pragma once

#include <string>
#include <string_view>

#include "roughdxl/core_model.hpp"

namespace roughdxl {

/// A predicate of the definite (renamed) program: either the original
/// predicate or the fresh predicate standing for its explicit negation.
struct RenamedPredicate {
    enum class Sign { plus, minus };

    std::string base;
    Sign sign = Sign::plus;

    /// Predicate name used inside the definite program. Minus-forms carry a
    /// marker (U+207B) that the program lexer never accepts, so they cannot
    /// collide with user predicates.
    std::string name() const;

    /// Inverse of name().
    static RenamedPredicate from_name(std::string_view name);

    friend auto operator<=>(const RenamedPredicate&, const RenamedPredicate&) = default;
    friend bool operator==(const RenamedPredicate&, const RenamedPredicate&) = default;
};

inline constexpr std::string_view kMinusMarker = "⁻";

std::string minus_name(std::string_view base);
bool is_minus_name(std::string_view name) noexcept;

/// ~p(t) becomes p⁻(t); positive literals are returned unchanged.
Literal rename_literal(const Literal& l);
/// Inverse of rename_literal for positive literals over renamed predicates.
Literal unrename_literal(const Literal& l);

/// Replaces every negative literal by a positive literal over the minus-form
/// of its predicate. The result has no negative literals.
Program to_definite(const Program& p);

/// Maps a model of the definite program back to DXL literals: p⁻(t)
/// becomes ~p(t). Contradictions are kept.
Model to_dxl_model(const Model& m);

/// Prints the definite program as plain definite clauses, with minus-forms
/// spelled `p_neg` (extended with `_1`, `_2`, ... if the name is taken).
std::string export_definite(const Program& p);

}  // namespace roughdxl
