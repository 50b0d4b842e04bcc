#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "roughdxl/core_model.hpp"

namespace roughdxl {

class FactStore;
class RoughDatabase;

/// `l`, `lower(l)` or `boundary(a)`. For boundary the literal is always
/// positive.
struct SimpleQuery {
    enum class Kind { membership, lower, boundary };

    Kind kind = Kind::membership;
    Literal literal;

    static SimpleQuery membership(Literal l) { return {Kind::membership, std::move(l)}; }
    static SimpleQuery lower(Literal l) { return {Kind::lower, std::move(l)}; }
    static SimpleQuery boundary(Atom a) { return {Kind::boundary, positive(std::move(a))}; }

    friend auto operator<=>(const SimpleQuery&, const SimpleQuery&) = default;
    friend bool operator==(const SimpleQuery&, const SimpleQuery&) = default;
};

/// `a?`: what is known about the instances of an atom.
struct ClassifyQuery {
    Atom atom;

    friend bool operator==(const ClassifyQuery&, const ClassifyQuery&) = default;
};

/// Conjunction of at least two simple queries. Classify queries cannot take
/// part in a conjunction.
struct CompositeQuery {
    std::vector<SimpleQuery> conjuncts;

    friend bool operator==(const CompositeQuery&, const CompositeQuery&) = default;
};

using RoughQuery = std::variant<SimpleQuery, ClassifyQuery, CompositeQuery>;

/// Builds a query from conjuncts: a single one stays simple. Throws
/// std::invalid_argument on an empty list or a boundary over a negative
/// literal.
RoughQuery make_query(std::vector<SimpleQuery> conjuncts);

bool is_ground(const RoughQuery& q);
std::set<std::string> variables_of(const SimpleQuery& q);
std::set<std::string> variables_of(const RoughQuery& q);

/// Raised for queries inconsistent with the database (arity mismatch) or
/// malformed query values.
class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FourValued { top, yes, no, bottom };

using ValuationSet = std::set<Valuation>;

struct ClassifyTriple {
    ValuationSet boundary;   ///< instances in the boundary
    ValuationSet lower;      ///< instances in the lower approximation
    ValuationSet lower_neg;  ///< instances in the lower approximation of the complement

    friend bool operator==(const ClassifyTriple&, const ClassifyTriple&) = default;
};

/// Ground simple and composite queries answer yes/no (bool); non-ground
/// ones answer a valuation set, where the empty set means "no". Ground
/// classify gives a four-valued answer, non-ground classify a triple.
using Answer = std::variant<bool, ValuationSet, FourValued, ClassifyTriple>;

/// Answer semantics over the rough relations of the database. Unknown
/// predicates behave as empty relations; an arity mismatch throws
/// QueryError.
Answer answer(const RoughDatabase& db, const RoughQuery& q);

/// Valuations of the variables of `q` whose instances satisfy it.
ValuationSet answer_valuations(const RoughDatabase& db, const SimpleQuery& q);

/// boundary(a), lower(a), lower(~a).
std::array<SimpleQuery, 3> decompose_classify(const Atom& a);

/// A goal over the renamed program: `positive_test` must hold, `naf_test`
/// (if any) must fail; in both-present mode `joint_test` must hold as well.
struct Goal {
    enum class ConjunctMode { single, both_present };

    Atom positive_test;
    std::optional<Atom> naf_test;
    ConjunctMode conjunct_mode = ConjunctMode::single;
    std::optional<Atom> joint_test;

    friend bool operator==(const Goal&, const Goal&) = default;
};

/// Compiles a simple query to a goal over the renamed predicates:
///
///     q(t)          ->  q(t)
///     ~q(t)         ->  q⁻(t)
///     lower(q(t))   ->  q(t), not q⁻(t)
///     lower(~q(t))  ->  q⁻(t), not q(t)
///     boundary(q(t))->  q(t), q⁻(t)
Goal tau(const SimpleQuery& q);
/// Throws QueryError: only simple queries compile to a single goal.
Goal tau(const RoughQuery& q);

/// Evaluates the compiled goal against the least model of the renamed
/// program. Negation as failure is a lookup of the instantiated naf_test,
/// which is always ground because its variables occur in positive_test.
Answer answer_via_tau(const FactStore& store, const SimpleQuery& q);

std::string to_string(const SimpleQuery& q);
std::string to_string(const RoughQuery& q);
std::string to_string(const Goal& g);
std::string to_string(FourValued v);

/// Text shown for an answer: `yes`/`no`; valuation sets as `{X=2, X=3}`
/// (a valuation of several variables is parenthesised); `true`, `false`,
/// `top`, `bottom` for four-valued answers; triples as three labeled lines.
std::string render(const Answer& a);

}  // namespace roughdxl
