#pragma once

// Reference implementations used only by tests. They share nothing with the
// engine's join or the region algebra: matching goes through core `match`
// over literal sets, and query answers are found by enumerating groundings.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "roughdxl/core_model.hpp"
#include "roughdxl/query.hpp"

namespace roughdxl::testing {

/// One naive application of the immediate-consequence operator, matching
/// bodies literal by literal against `m` with nested loops.
Model naive_step(const Program& definite, const Model& m);

/// Limit of naive_step from the empty model.
Model naive_least_model(const Program& definite);

/// Answer of a simple query by enumerating every assignment of its
/// variables to `universe`, testing each ground instance directly against
/// the DXL model's literals.
ValuationSet enumerate_answers(const Model& dxl_model, const SimpleQuery& q,
                               const std::set<std::string>& universe);

/// D+ and D- read straight off the raw rows.
std::pair<std::set<GroundTuple>, std::set<GroundTuple>> specified_regions(const RawTable& t);

}  // namespace roughdxl::testing
