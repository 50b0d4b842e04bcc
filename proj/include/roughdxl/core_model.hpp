#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace roughdxl {

/// A datalog term: either a constant symbol or a variable. There are no
/// compound terms.
class Term {
public:
    enum class Kind { constant, variable };

    /// Throws std::invalid_argument unless `name` is lexically a constant
    /// (starts with a lowercase letter or a digit).
    static Term constant(std::string name);
    /// Throws std::invalid_argument unless `name` is lexically a variable
    /// (starts with an uppercase letter or underscore).
    static Term variable(std::string name);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool is_constant() const noexcept { return kind_ == Kind::constant; }
    bool is_variable() const noexcept { return kind_ == Kind::variable; }

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

private:
    Term(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
};

bool is_constant_name(std::string_view name) noexcept;
bool is_variable_name(std::string_view name) noexcept;

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const noexcept { return args.size(); }
    bool is_ground() const noexcept;

    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Polarity { positive, negative };

/// A signed atom. Negative polarity is explicit negation, never negation
/// as failure.
struct Literal {
    Polarity polarity = Polarity::positive;
    Atom atom;

    bool is_positive() const noexcept { return polarity == Polarity::positive; }
    bool is_negative() const noexcept { return polarity == Polarity::negative; }
    bool is_ground() const noexcept { return atom.is_ground(); }

    friend auto operator<=>(const Literal&, const Literal&) = default;
    friend bool operator==(const Literal&, const Literal&) = default;
};

Literal positive(Atom atom);
Literal negative(Atom atom);

struct Rule {
    Literal head;
    std::vector<Literal> body;

    bool is_fact() const noexcept { return body.empty(); }

    friend auto operator<=>(const Rule&, const Rule&) = default;
    friend bool operator==(const Rule&, const Rule&) = default;
};

/// First head variable that occurs in no body literal, if any.
std::optional<std::string> unsafe_head_variable(const Rule& rule);

/// Raised when a rule violates safety or a predicate is used with two arities.
class ProgramError : public std::runtime_error {
public:
    enum class Kind { unsafe_rule, arity_conflict };

    ProgramError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Map from predicate name to arity.
using Signature = std::map<std::string, std::size_t>;

/// A finite set of safe rules with program-wide consistent arities.
class Program {
public:
    Program() = default;

    /// Adds a rule (no-op for a duplicate). Throws ProgramError on an unsafe
    /// rule or an arity conflict; the program is unchanged in that case.
    void add(Rule rule);
    /// Adds every rule of `other`; all-or-nothing.
    void merge(const Program& other);

    const std::set<Rule>& rules() const noexcept { return rules_; }
    const Signature& signature() const noexcept { return signature_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }

    /// Predicates that occur under explicit negation somewhere in the program.
    std::set<std::string> negated_predicates() const;

    /// Constants occurring anywhere in the program.
    std::set<std::string> constants() const;

    friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

private:
    void check_arity(const Atom& atom, const Signature& pending) const;

    std::set<Rule> rules_;
    Signature signature_;
};

/// An ordered tuple of constant names.
using GroundTuple = std::vector<std::string>;

/// Variable name to constant binding.
class Valuation {
public:
    Valuation() = default;

    /// Throws std::invalid_argument if `value` is not a constant.
    void bind(const std::string& variable, Term value);
    const Term* lookup(const std::string& variable) const;
    const std::map<std::string, Term>& bindings() const noexcept { return bindings_; }
    bool empty() const noexcept { return bindings_.empty(); }
    std::size_t size() const noexcept { return bindings_.size(); }

    /// Restriction to the given variables.
    Valuation restrict_to(const std::set<std::string>& variables) const;

    friend auto operator<=>(const Valuation&, const Valuation&) = default;
    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    std::map<std::string, Term> bindings_;
};

/// Union of two valuations; absent if they disagree on a shared variable.
std::optional<Valuation> combine(const Valuation& a, const Valuation& b);

/// A finite set of ground literals.
using Model = std::set<Literal>;

Term apply(const Valuation& v, const Term& t);
Atom apply(const Valuation& v, const Atom& a);
Literal apply(const Valuation& v, const Literal& l);

/// One-way matching of `pattern` against a ground atom. Throws
/// std::invalid_argument when the predicates or arities differ or `ground`
/// has variables (a caller bug, distinct from "no match").
std::optional<Valuation> match(const Atom& pattern, const Atom& ground);

/// Extends `base` so that `pattern` matches `tuple`, or returns nothing.
std::optional<Valuation> match_tuple(const std::vector<Term>& pattern, const GroundTuple& tuple,
                                     const Valuation& base = {});

GroundTuple tuple_of(const Atom& ground);
Atom atom_of(const std::string& predicate, const GroundTuple& tuple);

std::set<std::string> variables_of(const Atom& a);
std::set<std::string> variables_of(const Literal& l);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);
std::string to_string(const Valuation& v);
std::string to_string(const GroundTuple& t);

}  // namespace roughdxl
