#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "roughdxl/core_model.hpp"

namespace roughdxl {

/// Ground facts grouped by predicate, with a per-position index from
/// (predicate, argument position, constant) to the tuples carrying it.
class FactStore {
public:
    FactStore() = default;
    FactStore(const FactStore& other);
    FactStore& operator=(const FactStore& other);
    FactStore(FactStore&&) noexcept = default;
    FactStore& operator=(FactStore&&) noexcept = default;

    /// Returns true if the tuple was not yet present.
    bool insert(const std::string& predicate, GroundTuple tuple);
    /// Inserts a ground positive atom. Throws std::invalid_argument otherwise.
    bool insert(const Literal& fact);

    bool contains(const std::string& predicate, const GroundTuple& tuple) const;
    bool contains(const Atom& ground) const;

    /// Extension of `predicate`; empty for unknown predicates.
    const std::set<GroundTuple>& tuples(const std::string& predicate) const;

    /// Tuples of `predicate` whose argument at `position` equals `constant`.
    const std::vector<const GroundTuple*>& lookup(const std::string& predicate, std::size_t position,
                                                  const std::string& constant) const;

    const std::map<std::string, std::set<GroundTuple>>& by_predicate() const noexcept { return by_predicate_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// All facts as positive literals.
    Model to_model() const;
    static FactStore from_model(const Model& m);

    friend bool operator==(const FactStore& a, const FactStore& b) { return a.by_predicate_ == b.by_predicate_; }

private:
    void rebuild_index();

    using IndexKey = std::tuple<std::string, std::size_t, std::string>;

    std::map<std::string, std::set<GroundTuple>> by_predicate_;
    std::map<IndexKey, std::vector<const GroundTuple*>> index_;
    std::size_t size_ = 0;
};

/// All valuations of the body's variables under which every atom matches a
/// stored tuple. Atoms are joined left to right.
std::set<Valuation> evaluate_body(std::span<const Atom> body, const FactStore& store);

/// One application of the immediate-consequence operator of a definite
/// program to `m`. Throws std::invalid_argument if `p` has negative
/// literals or `m` is not a set of ground positive literals.
Model immediate_consequence(const Program& p, const Model& m);

struct EvaluationStats {
    std::size_t rounds = 0;
    std::size_t derivations = 0;
};

/// Least Herbrand model of a definite program, computed by semi-naive
/// iteration. Throws std::invalid_argument if `p` has negative literals.
FactStore least_fact_store(const Program& p, EvaluationStats* stats = nullptr);
Model least_model(const Program& p);

}  // namespace roughdxl
