#include "roughdxl/transform.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace roughdxl {

std::string minus_name(std::string_view base) {
    std::string out(base);
    out += kMinusMarker;
    return out;
}

bool is_minus_name(std::string_view name) noexcept {
    return name.size() > kMinusMarker.size() && name.ends_with(kMinusMarker);
}

std::string RenamedPredicate::name() const {
    return sign == Sign::minus ? minus_name(base) : base;
}

RenamedPredicate RenamedPredicate::from_name(std::string_view name) {
    if (is_minus_name(name))
        return {std::string(name.substr(0, name.size() - kMinusMarker.size())), Sign::minus};
    return {std::string(name), Sign::plus};
}

Literal rename_literal(const Literal& l) {
    if (l.is_positive()) return l;
    return positive(Atom{minus_name(l.atom.predicate), l.atom.args});
}

Literal unrename_literal(const Literal& l) {
    if (l.is_negative()) throw std::invalid_argument("unrename_literal: " + to_string(l) + " is negative");
    auto renamed = RenamedPredicate::from_name(l.atom.predicate);
    Atom atom{renamed.base, l.atom.args};
    return renamed.sign == RenamedPredicate::Sign::minus ? negative(std::move(atom)) : positive(std::move(atom));
}

Program to_definite(const Program& p) {
    Program out;
    for (const auto& r : p.rules()) {
        Rule renamed{rename_literal(r.head), {}};
        renamed.body.reserve(r.body.size());
        for (const auto& b : r.body) renamed.body.push_back(rename_literal(b));
        out.add(std::move(renamed));
    }
    return out;
}

Model to_dxl_model(const Model& m) {
    Model out;
    for (const auto& l : m) out.insert(unrename_literal(l));
    return out;
}

std::string export_definite(const Program& p) {
    const Program definite = to_definite(p);

    std::set<std::string> taken;
    for (const auto& [name, arity] : p.signature()) taken.insert(name);

    std::map<std::string, std::string> spelling;
    for (const auto& base : p.negated_predicates()) {
        std::string candidate = base + "_neg";
        for (int k = 1; taken.contains(candidate); ++k) candidate = base + "_neg_" + std::to_string(k);
        taken.insert(candidate);
        spelling.emplace(minus_name(base), candidate);
    }

    auto respell = [&](Literal l) {
        if (auto it = spelling.find(l.atom.predicate); it != spelling.end()) l.atom.predicate = it->second;
        return l;
    };

    std::string out;
    for (const auto& r : definite.rules()) {
        Rule printed{respell(r.head), {}};
        for (const auto& b : r.body) printed.body.push_back(respell(b));
        out += to_string(printed);
        out += '\n';
    }
    return out;
}

}  // namespace roughdxl
