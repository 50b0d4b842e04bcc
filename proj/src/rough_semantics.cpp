#include "roughdxl/rough_semantics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace roughdxl {

TupleSet upper(const RoughRelation& r) { return r.pos; }

TupleSet lower(const RoughRelation& r) {
    TupleSet out;
    std::set_difference(r.pos.begin(), r.pos.end(), r.neg.begin(), r.neg.end(), std::inserter(out, out.end()));
    return out;
}

TupleSet boundary(const RoughRelation& r) {
    TupleSet out;
    std::set_intersection(r.pos.begin(), r.pos.end(), r.neg.begin(), r.neg.end(),
                          std::inserter(out, out.end()));
    return out;
}

RoughRelation complement(const RoughRelation& r) { return RoughRelation{r.predicate, r.arity, r.neg, r.pos}; }

const RoughRelation& RoughDatabase::relation(const std::string& predicate) const {
    static const RoughRelation kEmpty;
    auto it = relations_.find(predicate);
    return it == relations_.end() ? kEmpty : it->second;
}

std::set<std::string> RoughDatabase::constants() const {
    std::set<std::string> out;
    for (const auto& l : model_) {
        for (const auto& t : l.atom.args) out.insert(t.name());
    }
    return out;
}

RoughDatabase build_database(const Model& m, const Signature& predicates) {
    RoughDatabase db;
    for (const auto& [name, arity] : predicates) db.relations_.emplace(name, RoughRelation{name, arity, {}, {}});

    for (const auto& l : m) {
        if (!l.is_ground()) throw std::invalid_argument("build_database: " + to_string(l) + " is not ground");
        auto it = db.relations_.find(l.atom.predicate);
        if (it == db.relations_.end())
            throw std::invalid_argument("build_database: predicate of " + to_string(l) + " is not declared");
        if (it->second.arity != l.atom.arity())
            throw std::invalid_argument("build_database: " + to_string(l) + " disagrees with declared arity " +
                                        std::to_string(it->second.arity));
        auto& region = l.is_positive() ? it->second.pos : it->second.neg;
        region.insert(tuple_of(l.atom));
    }
    db.model_ = m;
    return db;
}

namespace {

std::string render(const std::string& predicate, const GroundTuple& t, bool negated) {
    std::string out = negated ? "~" : "";
    out += predicate;
    if (!t.empty()) out += to_string(t);
    return out;
}

}  // namespace

std::string dump_regions(const RoughDatabase& db) {
    std::string out;
    for (const auto& [name, r] : db.relations()) {
        TupleSet all = r.pos;
        all.insert(r.neg.begin(), r.neg.end());
        for (const auto& t : all) {
            if (r.pos.contains(t)) out += render(name, t, false) + "\n";
            if (r.neg.contains(t)) out += render(name, t, true) + "\n";
        }
    }
    return out;
}

std::string summarize_relations(const RoughDatabase& db) {
    std::string out;
    for (const auto& [name, r] : db.relations()) {
        out += name + "/" + std::to_string(r.arity) + " pos=" + std::to_string(r.pos.size()) +
               " neg=" + std::to_string(r.neg.size()) + " lower=" + std::to_string(lower(r).size()) +
               " boundary=" + std::to_string(boundary(r).size()) + "\n";
    }
    return out;
}

}  // namespace roughdxl
