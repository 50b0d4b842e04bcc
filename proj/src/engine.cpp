#include "roughdxl/engine.hpp"

#include <functional>
#include <stdexcept>

namespace roughdxl {

FactStore::FactStore(const FactStore& other) : by_predicate_(other.by_predicate_), size_(other.size_) {
    rebuild_index();
}

FactStore& FactStore::operator=(const FactStore& other) {
    if (this != &other) {
        by_predicate_ = other.by_predicate_;
        size_ = other.size_;
        rebuild_index();
    }
    return *this;
}

void FactStore::rebuild_index() {
    index_.clear();
    for (const auto& [predicate, tuples] : by_predicate_) {
        for (const auto& t : tuples) {
            for (std::size_t i = 0; i < t.size(); ++i) index_[{predicate, i, t[i]}].push_back(&t);
        }
    }
}

bool FactStore::insert(const std::string& predicate, GroundTuple tuple) {
    auto [it, inserted] = by_predicate_[predicate].insert(std::move(tuple));
    if (!inserted) return false;
    const GroundTuple& stored = *it;
    for (std::size_t i = 0; i < stored.size(); ++i) index_[{predicate, i, stored[i]}].push_back(&stored);
    ++size_;
    return true;
}

bool FactStore::insert(const Literal& fact) {
    if (!fact.is_positive() || !fact.is_ground())
        throw std::invalid_argument("fact store accepts ground positive atoms only, got " + to_string(fact));
    return insert(fact.atom.predicate, tuple_of(fact.atom));
}

bool FactStore::contains(const std::string& predicate, const GroundTuple& tuple) const {
    auto it = by_predicate_.find(predicate);
    return it != by_predicate_.end() && it->second.contains(tuple);
}

bool FactStore::contains(const Atom& ground) const { return contains(ground.predicate, tuple_of(ground)); }

const std::set<GroundTuple>& FactStore::tuples(const std::string& predicate) const {
    static const std::set<GroundTuple> kEmpty;
    auto it = by_predicate_.find(predicate);
    return it == by_predicate_.end() ? kEmpty : it->second;
}

const std::vector<const GroundTuple*>& FactStore::lookup(const std::string& predicate, std::size_t position,
                                                         const std::string& constant) const {
    static const std::vector<const GroundTuple*> kEmpty;
    auto it = index_.find(IndexKey{predicate, position, constant});
    return it == index_.end() ? kEmpty : it->second;
}

Model FactStore::to_model() const {
    Model out;
    for (const auto& [predicate, tuples] : by_predicate_) {
        for (const auto& t : tuples) out.insert(positive(atom_of(predicate, t)));
    }
    return out;
}

FactStore FactStore::from_model(const Model& m) {
    FactStore out;
    for (const auto& l : m) out.insert(l);
    return out;
}

namespace {

/// The stores a body atom is matched against (their union).
using Source = std::vector<const FactStore*>;

void join(std::span<const Atom> body, std::span<const Source> sources, std::size_t at, const Valuation& v,
          const std::function<void(const Valuation&)>& emit) {
    if (at == body.size()) {
        emit(v);
        return;
    }
    const Atom& atom = body[at];

    // First argument already fixed by a constant or a bound variable selects
    // an index bucket; otherwise scan the whole extension.
    std::optional<std::pair<std::size_t, std::string>> key;
    for (std::size_t i = 0; i < atom.args.size() && !key; ++i) {
        const Term& t = atom.args[i];
        if (t.is_constant()) {
            key.emplace(i, t.name());
        } else if (const Term* bound = v.lookup(t.name())) {
            key.emplace(i, bound->name());
        }
    }

    auto visit = [&](const GroundTuple& tuple) {
        if (auto extended = match_tuple(atom.args, tuple, v)) join(body, sources, at + 1, *extended, emit);
    };
    for (const FactStore* store : sources[at]) {
        if (key) {
            for (const GroundTuple* t : store->lookup(atom.predicate, key->first, key->second)) visit(*t);
        } else {
            for (const GroundTuple& t : store->tuples(atom.predicate)) {
                if (t.size() == atom.args.size()) visit(t);
            }
        }
    }
}

void require_definite(const Program& p) {
    for (const auto& r : p.rules()) {
        bool negative = r.head.is_negative();
        for (const auto& b : r.body) negative = negative || b.is_negative();
        if (negative)
            throw std::invalid_argument("program is not definite: " + to_string(r) +
                                        " (apply to_definite first)");
    }
}

std::vector<Atom> body_atoms(const Rule& r) {
    std::vector<Atom> out;
    out.reserve(r.body.size());
    for (const auto& b : r.body) out.push_back(b.atom);
    return out;
}

}  // namespace

std::set<Valuation> evaluate_body(std::span<const Atom> body, const FactStore& store) {
    std::vector<Source> sources(body.size(), Source{&store});
    std::set<Valuation> out;
    join(body, sources, 0, Valuation{}, [&](const Valuation& v) { out.insert(v); });
    return out;
}

Model immediate_consequence(const Program& p, const Model& m) {
    require_definite(p);
    for (const auto& l : m) {
        if (!l.is_positive() || !l.is_ground())
            throw std::invalid_argument("immediate_consequence: model literal " + to_string(l) +
                                        " is not a ground atom");
    }
    const FactStore store = FactStore::from_model(m);
    Model out;
    for (const auto& r : p.rules()) {
        const auto body = body_atoms(r);
        for (const auto& v : evaluate_body(body, store)) out.insert(positive(apply(v, r.head.atom)));
    }
    return out;
}

FactStore least_fact_store(const Program& p, EvaluationStats* stats) {
    require_definite(p);

    struct Compiled {
        Atom head;
        std::vector<Atom> body;
    };
    std::vector<Compiled> rules;
    FactStore old;
    FactStore delta;
    EvaluationStats local;

    for (const auto& r : p.rules()) {
        if (r.is_fact()) {
            delta.insert(r.head);
            ++local.derivations;
        } else {
            rules.push_back({r.head.atom, body_atoms(r)});
        }
    }
    local.rounds = 1;

    while (!delta.empty()) {
        FactStore next;
        for (const auto& rule : rules) {
            for (std::size_t i = 0; i < rule.body.size(); ++i) {
                if (delta.tuples(rule.body[i].predicate).empty()) continue;
                // Atoms before the delta position read the old facts and
                // atoms after it read everything, so each combination that
                // uses at least one new fact is joined exactly once.
                std::vector<Source> sources;
                sources.reserve(rule.body.size());
                for (std::size_t j = 0; j < rule.body.size(); ++j) {
                    if (j < i) {
                        sources.push_back({&old});
                    } else if (j == i) {
                        sources.push_back({&delta});
                    } else {
                        sources.push_back({&old, &delta});
                    }
                }
                join(rule.body, sources, 0, Valuation{}, [&](const Valuation& v) {
                    GroundTuple t = tuple_of(apply(v, rule.head));
                    if (old.contains(rule.head.predicate, t) || delta.contains(rule.head.predicate, t)) return;
                    if (next.insert(rule.head.predicate, std::move(t))) ++local.derivations;
                });
            }
        }
        for (const auto& [predicate, tuples] : delta.by_predicate()) {
            for (const auto& t : tuples) old.insert(predicate, t);
        }
        delta = std::move(next);
        ++local.rounds;
    }

    if (stats) *stats = local;
    return old;
}

Model least_model(const Program& p) { return least_fact_store(p).to_model(); }

}  // namespace roughdxl
