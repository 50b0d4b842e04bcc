#include "roughdxl/core_model.hpp"

#include <algorithm>
#include <cctype>

namespace roughdxl {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool all_name_chars(std::string_view s) {
    return std::all_of(s.begin(), s.end(), is_name_char);
}

}  // namespace

bool is_constant_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    const auto c = static_cast<unsigned char>(name.front());
    return (std::islower(c) || std::isdigit(c)) && all_name_chars(name);
}

bool is_variable_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    const auto c = static_cast<unsigned char>(name.front());
    return (std::isupper(c) || c == '_') && all_name_chars(name);
}

Term Term::constant(std::string name) {
    if (!is_constant_name(name)) throw std::invalid_argument("not a constant name: '" + name + "'");
    return Term(Kind::constant, std::move(name));
}

Term Term::variable(std::string name) {
    if (!is_variable_name(name)) throw std::invalid_argument("not a variable name: '" + name + "'");
    return Term(Kind::variable, std::move(name));
}

bool Atom::is_ground() const noexcept {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_constant(); });
}

Literal positive(Atom atom) { return Literal{Polarity::positive, std::move(atom)}; }
Literal negative(Atom atom) { return Literal{Polarity::negative, std::move(atom)}; }

std::optional<std::string> unsafe_head_variable(const Rule& rule) {
    std::set<std::string> bound;
    for (const auto& b : rule.body) {
        for (const auto& t : b.atom.args)
            if (t.is_variable()) bound.insert(t.name());
    }
    for (const auto& t : rule.head.atom.args) {
        if (t.is_variable() && !bound.contains(t.name())) return t.name();
    }
    return std::nullopt;
}

void Program::check_arity(const Atom& atom, const Signature& pending) const {
    auto conflict = [&](std::size_t known) {
        throw ProgramError(ProgramError::Kind::arity_conflict,
                           "predicate '" + atom.predicate + "' used with arity " +
                               std::to_string(atom.arity()) + " but previously with arity " +
                               std::to_string(known));
    };
    if (auto it = signature_.find(atom.predicate); it != signature_.end() && it->second != atom.arity())
        conflict(it->second);
    if (auto it = pending.find(atom.predicate); it != pending.end() && it->second != atom.arity())
        conflict(it->second);
}

void Program::add(Rule rule) {
    if (auto var = unsafe_head_variable(rule)) {
        throw ProgramError(ProgramError::Kind::unsafe_rule,
                           "unsafe rule '" + to_string(rule) + "': head variable " + *var +
                               " does not occur in the body");
    }
    Signature pending;
    auto note = [&](const Atom& a) {
        check_arity(a, pending);
        pending.emplace(a.predicate, a.arity());
    };
    note(rule.head.atom);
    for (const auto& b : rule.body) note(b.atom);

    signature_.insert(pending.begin(), pending.end());
    rules_.insert(std::move(rule));
}

void Program::merge(const Program& other) {
    Program copy = *this;
    for (const auto& r : other.rules()) copy.add(r);
    *this = std::move(copy);
}

std::set<std::string> Program::negated_predicates() const {
    std::set<std::string> out;
    for (const auto& r : rules_) {
        if (r.head.is_negative()) out.insert(r.head.atom.predicate);
        for (const auto& b : r.body)
            if (b.is_negative()) out.insert(b.atom.predicate);
    }
    return out;
}

std::set<std::string> Program::constants() const {
    std::set<std::string> out;
    auto scan = [&](const Atom& a) {
        for (const auto& t : a.args)
            if (t.is_constant()) out.insert(t.name());
    };
    for (const auto& r : rules_) {
        scan(r.head.atom);
        for (const auto& b : r.body) scan(b.atom);
    }
    return out;
}

void Valuation::bind(const std::string& variable, Term value) {
    if (!value.is_constant())
        throw std::invalid_argument("valuation range must be constants, got " + value.name());
    bindings_.insert_or_assign(variable, std::move(value));
}

const Term* Valuation::lookup(const std::string& variable) const {
    auto it = bindings_.find(variable);
    return it == bindings_.end() ? nullptr : &it->second;
}

Valuation Valuation::restrict_to(const std::set<std::string>& variables) const {
    Valuation out;
    for (const auto& [name, value] : bindings_)
        if (variables.contains(name)) out.bindings_.emplace(name, value);
    return out;
}

std::optional<Valuation> combine(const Valuation& a, const Valuation& b) {
    Valuation out = a;
    for (const auto& [name, value] : b.bindings()) {
        if (const Term* existing = a.lookup(name)) {
            if (*existing != value) return std::nullopt;
        } else {
            out.bind(name, value);
        }
    }
    return out;
}

Term apply(const Valuation& v, const Term& t) {
    if (t.is_variable()) {
        if (const Term* bound = v.lookup(t.name())) return *bound;
    }
    return t;
}

Atom apply(const Valuation& v, const Atom& a) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(apply(v, t));
    return out;
}

Literal apply(const Valuation& v, const Literal& l) { return Literal{l.polarity, apply(v, l.atom)}; }

std::optional<Valuation> match_tuple(const std::vector<Term>& pattern, const GroundTuple& tuple,
                                     const Valuation& base) {
    if (pattern.size() != tuple.size()) return std::nullopt;
    Valuation v = base;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const Term& p = pattern[i];
        if (p.is_constant()) {
            if (p.name() != tuple[i]) return std::nullopt;
        } else if (const Term* bound = v.lookup(p.name())) {
            if (bound->name() != tuple[i]) return std::nullopt;
        } else {
            v.bind(p.name(), Term::constant(tuple[i]));
        }
    }
    return v;
}

std::optional<Valuation> match(const Atom& pattern, const Atom& ground) {
    if (pattern.predicate != ground.predicate || pattern.arity() != ground.arity())
        throw std::invalid_argument("match: " + to_string(pattern) + " and " + to_string(ground) +
                                    " differ in predicate or arity");
    if (!ground.is_ground()) throw std::invalid_argument("match: " + to_string(ground) + " is not ground");
    return match_tuple(pattern.args, tuple_of(ground));
}

GroundTuple tuple_of(const Atom& ground) {
    GroundTuple out;
    out.reserve(ground.args.size());
    for (const auto& t : ground.args) out.push_back(t.name());
    return out;
}

Atom atom_of(const std::string& predicate, const GroundTuple& tuple) {
    Atom out{predicate, {}};
    out.args.reserve(tuple.size());
    for (const auto& c : tuple) out.args.push_back(Term::constant(c));
    return out;
}

std::set<std::string> variables_of(const Atom& a) {
    std::set<std::string> out;
    for (const auto& t : a.args)
        if (t.is_variable()) out.insert(t.name());
    return out;
}

std::set<std::string> variables_of(const Literal& l) { return variables_of(l.atom); }

std::string to_string(const Term& t) { return t.name(); }

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (a.args.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ',';
        out += a.args[i].name();
    }
    out += ')';
    return out;
}

std::string to_string(const Literal& l) { return (l.is_negative() ? "~" : "") + to_string(l.atom); }

std::string to_string(const Rule& r) {
    std::string out = to_string(r.head);
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        out += i ? ", " : " :- ";
        out += to_string(r.body[i]);
    }
    out += '.';
    return out;
}

std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

std::string to_string(const Valuation& v) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, value] : v.bindings()) {
        if (!first) out += ", ";
        first = false;
        out += name + "=" + value.name();
    }
    out += '}';
    return out;
}

std::string to_string(const GroundTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += t[i];
    }
    out += ')';
    return out;
}

}  // namespace roughdxl
