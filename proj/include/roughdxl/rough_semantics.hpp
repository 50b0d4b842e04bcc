#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "roughdxl/core_model.hpp"

namespace roughdxl {

using TupleSet = std::set<GroundTuple>;

/// A rough relation (pos, neg). The regions may overlap; the overlap is the
/// boundary.
struct RoughRelation {
    std::string predicate;
    std::size_t arity = 0;
    TupleSet pos;
    TupleSet neg;

    friend bool operator==(const RoughRelation&, const RoughRelation&) = default;
};

TupleSet upper(const RoughRelation& r);
/// pos - neg
TupleSet lower(const RoughRelation& r);
/// pos ∩ neg
TupleSet boundary(const RoughRelation& r);
RoughRelation complement(const RoughRelation& r);

/// The rough relations denoted by every predicate of a DXL program, read
/// off its least model. Immutable once built.
class RoughDatabase {
public:
    RoughDatabase() = default;

    /// Relation for `predicate`; an empty relation when the predicate is
    /// unknown to the database.
    const RoughRelation& relation(const std::string& predicate) const;
    bool has_predicate(const std::string& predicate) const { return relations_.contains(predicate); }

    const std::map<std::string, RoughRelation>& relations() const noexcept { return relations_; }
    const Model& model() const noexcept { return model_; }

    /// Every constant appearing in some region.
    std::set<std::string> constants() const;

    friend RoughDatabase build_database(const Model& m, const Signature& predicates);

private:
    std::map<std::string, RoughRelation> relations_;
    Model model_;
};

/// pos(p) = { t | p(t) ∈ m }, neg(p) = { t | ~p(t) ∈ m } for every declared
/// predicate, including those with empty regions. Throws std::invalid_argument
/// if `m` has a non-ground literal, an undeclared predicate, or an arity
/// that disagrees with `predicates`.
RoughDatabase build_database(const Model& m, const Signature& predicates);

/// One literal per line (`p(a,b)` / `~p(a,b)`), sorted by predicate, then
/// tuple, positive before negative.
std::string dump_regions(const RoughDatabase& db);

/// One line per predicate: `p/n pos=.. neg=.. lower=.. boundary=..`.
std::string summarize_relations(const RoughDatabase& db);

}  // namespace roughdxl
