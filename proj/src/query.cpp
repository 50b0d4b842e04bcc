#include "roughdxl/query.hpp"

#include "roughdxl/engine.hpp"
#include "roughdxl/rough_semantics.hpp"
#include "roughdxl/transform.hpp"

namespace roughdxl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_boundary_literal(const SimpleQuery& q) {
    if (q.kind == SimpleQuery::Kind::boundary && q.literal.is_negative())
        throw QueryError("boundary takes an atom, not " + to_string(q.literal));
}

const RoughRelation& relation_for(const RoughDatabase& db, const Atom& a) {
    const RoughRelation& r = db.relation(a.predicate);
    if (db.has_predicate(a.predicate) && r.arity != a.arity()) {
        throw QueryError("predicate " + a.predicate + " has arity " + std::to_string(r.arity) + ", query uses " +
                         to_string(a));
    }
    return r;
}

/// The set of tuples a simple query asks about.
TupleSet region_of(const RoughDatabase& db, const SimpleQuery& q) {
    check_boundary_literal(q);
    const RoughRelation& r = relation_for(db, q.literal.atom);
    const bool neg = q.literal.is_negative();
    switch (q.kind) {
        case SimpleQuery::Kind::membership:
            return neg ? upper(complement(r)) : upper(r);
        case SimpleQuery::Kind::lower:
            return neg ? lower(complement(r)) : lower(r);
        case SimpleQuery::Kind::boundary:
            return boundary(r);
    }
    return {};
}

ValuationSet join(const ValuationSet& left, const ValuationSet& right) {
    ValuationSet out;
    for (const auto& a : left) {
        for (const auto& b : right) {
            if (auto c = combine(a, b)) out.insert(std::move(*c));
        }
    }
    return out;
}

const ValuationSet& unit() {
    static const ValuationSet kUnit{Valuation{}};
    return kUnit;
}

}  // namespace

RoughQuery make_query(std::vector<SimpleQuery> conjuncts) {
    if (conjuncts.empty()) throw std::invalid_argument("a query needs at least one conjunct");
    for (const auto& c : conjuncts) {
        if (c.kind == SimpleQuery::Kind::boundary && c.literal.is_negative())
            throw std::invalid_argument("boundary takes an atom, not " + to_string(c.literal));
    }
    if (conjuncts.size() == 1) return conjuncts.front();
    return CompositeQuery{std::move(conjuncts)};
}

std::set<std::string> variables_of(const SimpleQuery& q) { return variables_of(q.literal); }

std::set<std::string> variables_of(const RoughQuery& q) {
    return std::visit(overloaded{
                          [](const SimpleQuery& s) { return variables_of(s); },
                          [](const ClassifyQuery& c) { return variables_of(c.atom); },
                          [](const CompositeQuery& c) {
                              std::set<std::string> out;
                              for (const auto& s : c.conjuncts) out.merge(variables_of(s));
                              return out;
                          },
                      },
                      q);
}

bool is_ground(const RoughQuery& q) { return variables_of(q).empty(); }

ValuationSet answer_valuations(const RoughDatabase& db, const SimpleQuery& q) {
    const TupleSet region = region_of(db, q);
    const auto& pattern = q.literal.atom.args;
    ValuationSet out;
    if (q.literal.is_ground()) {
        if (region.contains(tuple_of(q.literal.atom))) out.insert(Valuation{});
        return out;
    }
    for (const auto& t : region) {
        if (auto v = match_tuple(pattern, t)) out.insert(std::move(*v));
    }
    return out;
}

std::array<SimpleQuery, 3> decompose_classify(const Atom& a) {
    return {SimpleQuery::boundary(a), SimpleQuery::lower(positive(a)), SimpleQuery::lower(negative(a))};
}

Answer answer(const RoughDatabase& db, const RoughQuery& q) {
    return std::visit(
        overloaded{
            [&](const SimpleQuery& s) -> Answer {
                ValuationSet vs = answer_valuations(db, s);
                if (s.literal.is_ground()) return !vs.empty();
                return vs;
            },
            [&](const ClassifyQuery& c) -> Answer {
                const auto parts = decompose_classify(c.atom);
                if (c.atom.is_ground()) {
                    if (!answer_valuations(db, parts[0]).empty()) return FourValued::top;
                    if (!answer_valuations(db, parts[1]).empty()) return FourValued::yes;
                    if (!answer_valuations(db, parts[2]).empty()) return FourValued::no;
                    return FourValued::bottom;
                }
                return ClassifyTriple{answer_valuations(db, parts[0]), answer_valuations(db, parts[1]),
                                      answer_valuations(db, parts[2])};
            },
            [&](const CompositeQuery& c) -> Answer {
                if (c.conjuncts.size() < 2) throw QueryError("a composite query needs at least two conjuncts");
                ValuationSet acc = unit();
                for (const auto& s : c.conjuncts) {
                    acc = join(acc, answer_valuations(db, s));
                    if (acc.empty()) break;
                }
                // Remaining conjuncts are still validated for arity.
                for (const auto& s : c.conjuncts) relation_for(db, s.literal.atom);
                if (is_ground(q)) return !acc.empty();
                return acc;
            },
        },
        q);
}

Goal tau(const SimpleQuery& q) {
    check_boundary_literal(q);
    const Atom& a = q.literal.atom;
    Atom plus{a.predicate, a.args};
    Atom minus{minus_name(a.predicate), a.args};
    const bool neg = q.literal.is_negative();
    switch (q.kind) {
        case SimpleQuery::Kind::membership:
            return Goal{neg ? minus : plus, std::nullopt, Goal::ConjunctMode::single, std::nullopt};
        case SimpleQuery::Kind::lower:
            return neg ? Goal{minus, plus, Goal::ConjunctMode::single, std::nullopt}
                       : Goal{plus, minus, Goal::ConjunctMode::single, std::nullopt};
        case SimpleQuery::Kind::boundary:
            return Goal{plus, std::nullopt, Goal::ConjunctMode::both_present, minus};
    }
    throw QueryError("unknown simple query kind");
}

Goal tau(const RoughQuery& q) {
    if (const auto* s = std::get_if<SimpleQuery>(&q)) return tau(*s);
    throw QueryError("only simple queries compile to a goal; decompose " + to_string(q) + " first");
}

Answer answer_via_tau(const FactStore& store, const SimpleQuery& q) {
    const Goal goal = tau(q);

    auto check_arity = [&](const Atom& a) {
        const auto& tuples = store.tuples(a.predicate);
        if (!tuples.empty() && tuples.begin()->size() != a.arity())
            throw QueryError("predicate " + a.predicate + " has arity " + std::to_string(tuples.begin()->size()) +
                             ", query uses " + to_string(a));
    };
    check_arity(goal.positive_test);
    if (goal.naf_test) check_arity(*goal.naf_test);
    if (goal.joint_test) check_arity(*goal.joint_test);

    std::vector<Atom> positive_part{goal.positive_test};
    if (goal.conjunct_mode == Goal::ConjunctMode::both_present) positive_part.push_back(*goal.joint_test);

    ValuationSet out;
    for (const auto& v : evaluate_body(positive_part, store)) {
        if (goal.naf_test && store.contains(apply(v, *goal.naf_test))) continue;
        out.insert(v);
    }
    if (q.literal.is_ground()) return !out.empty();
    return out;
}

std::string to_string(const SimpleQuery& q) {
    switch (q.kind) {
        case SimpleQuery::Kind::membership:
            return to_string(q.literal);
        case SimpleQuery::Kind::lower:
            return "lower(" + to_string(q.literal) + ")";
        case SimpleQuery::Kind::boundary:
            return "boundary(" + to_string(q.literal.atom) + ")";
    }
    return {};
}

std::string to_string(const RoughQuery& q) {
    return std::visit(overloaded{
                          [](const SimpleQuery& s) { return to_string(s); },
                          [](const ClassifyQuery& c) { return to_string(c.atom) + "?"; },
                          [](const CompositeQuery& c) {
                              std::string out;
                              for (std::size_t i = 0; i < c.conjuncts.size(); ++i) {
                                  if (i) out += ", ";
                                  out += to_string(c.conjuncts[i]);
                              }
                              return out;
                          },
                      },
                      q);
}

std::string to_string(const Goal& g) {
    std::string out = to_string(g.positive_test);
    if (g.joint_test) out += ", " + to_string(*g.joint_test);
    if (g.naf_test) out += ", not " + to_string(*g.naf_test);
    return out;
}

std::string to_string(FourValued v) {
    switch (v) {
        case FourValued::top:
            return "top";
        case FourValued::yes:
            return "true";
        case FourValued::no:
            return "false";
        case FourValued::bottom:
            return "bottom";
    }
    return {};
}

namespace {

std::string render_set(const ValuationSet& vs) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : vs) {
        if (!first) out += ", ";
        first = false;
        const std::string inner = to_string(v);  // "{X=a, Y=b}"
        const std::string body = inner.substr(1, inner.size() - 2);
        out += v.size() == 1 ? body : "(" + body + ")";
    }
    out += '}';
    return out;
}

}  // namespace

std::string render(const Answer& a) {
    return std::visit(overloaded{
                          [](bool yes) { return std::string(yes ? "yes" : "no"); },
                          [](const ValuationSet& vs) { return vs.empty() ? std::string("no") : render_set(vs); },
                          [](FourValued v) { return to_string(v); },
                          [](const ClassifyTriple& t) {
                              return "boundary: " + render_set(t.boundary) + "\nlower: " + render_set(t.lower) +
                                     "\nlower-neg: " + render_set(t.lower_neg);
                          },
                      },
                      a);
}

}  // namespace roughdxl
