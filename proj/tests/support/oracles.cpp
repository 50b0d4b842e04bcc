#include "oracles.hpp"

#include <functional>

namespace roughdxl::testing {

namespace {

void match_body(const std::vector<Literal>& body, std::size_t at, const Valuation& v, const Model& m,
                const std::function<void(const Valuation&)>& emit) {
    if (at == body.size()) {
        emit(v);
        return;
    }
    const Atom partial = apply(v, body[at].atom);
    for (const auto& l : m) {
        if (l.atom.predicate != partial.predicate || l.atom.arity() != partial.arity()) continue;
        auto found = match(partial, l.atom);
        if (!found) continue;
        auto merged = combine(v, *found);
        if (merged) match_body(body, at + 1, *merged, m, emit);
    }
}

}  // namespace

Model naive_step(const Program& definite, const Model& m) {
    Model out;
    for (const auto& r : definite.rules()) {
        match_body(r.body, 0, Valuation{}, m, [&](const Valuation& v) { out.insert(apply(v, r.head)); });
    }
    return out;
}

Model naive_least_model(const Program& definite) {
    Model m;
    while (true) {
        Model next = naive_step(definite, m);
        if (next == m) return m;
        m = std::move(next);
    }
}

ValuationSet enumerate_answers(const Model& dxl_model, const SimpleQuery& q,
                               const std::set<std::string>& universe) {
    const auto vars = variables_of(q.literal);
    const std::vector<std::string> names(vars.begin(), vars.end());
    const std::vector<std::string> values(universe.begin(), universe.end());

    ValuationSet out;
    if (!names.empty() && values.empty()) return out;

    std::vector<std::size_t> idx(names.size(), 0);
    while (true) {
        Valuation v;
        for (std::size_t i = 0; i < names.size(); ++i) v.bind(names[i], Term::constant(values[idx[i]]));
        const Atom ground = apply(v, q.literal.atom);
        const bool in_pos = dxl_model.contains(positive(ground));
        const bool in_neg = dxl_model.contains(negative(ground));
        const bool negated = q.literal.is_negative();
        bool holds = false;
        switch (q.kind) {
            case SimpleQuery::Kind::membership:
                holds = negated ? in_neg : in_pos;
                break;
            case SimpleQuery::Kind::lower:
                holds = negated ? (in_neg && !in_pos) : (in_pos && !in_neg);
                break;
            case SimpleQuery::Kind::boundary:
                holds = in_pos && in_neg;
                break;
        }
        if (holds) out.insert(v);

        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

std::pair<std::set<GroundTuple>, std::set<GroundTuple>> specified_regions(const RawTable& t) {
    std::set<GroundTuple> plus;
    std::set<GroundTuple> minus;
    for (const auto& row : t.rows) {
        if (!row.decision) continue;
        GroundTuple tuple;
        bool defined = true;
        for (const auto& v : row.values) {
            if (!v) {
                defined = false;
                break;
            }
            tuple.push_back(*v);
        }
        if (!defined) continue;
        (*row.decision ? plus : minus).insert(std::move(tuple));
    }
    return {plus, minus};
}

}  // namespace roughdxl::testing
