#include <gtest/gtest.h>

#include "example_data.hpp"
#include "generators.hpp"
#include "roughdxl/engine.hpp"
#include "roughdxl/rough_semantics.hpp"
#include "roughdxl/transform.hpp"

namespace roughdxl {
namespace {

Term c(const std::string& n) { return Term::constant(n); }

RoughDatabase flu_database() {
    const Program p = testing::flu_program();
    return build_database(to_dxl_model(least_model(to_definite(p))), p.signature());
}

TEST(BuildDatabase, FluRegions) {
    const RoughDatabase db = flu_database();
    const RoughRelation& flu = db.relation("flu");
    EXPECT_EQ(flu.arity, 4u);
    EXPECT_EQ(flu.pos.size(), 4u);
    EXPECT_EQ(flu.neg.size(), 5u);
}

TEST(BuildDatabase, EmptyModelDeclaredPredicate) {
    const RoughDatabase db = build_database({}, {{"p", 1}});
    ASSERT_TRUE(db.has_predicate("p"));
    EXPECT_TRUE(db.relation("p").pos.empty());
    EXPECT_TRUE(db.relation("p").neg.empty());
    EXPECT_TRUE(db.relation("unknown").pos.empty());
}

TEST(BuildDatabase, ContradictionLandsInBothRegions) {
    const RoughDatabase db =
        build_database({positive(Atom{"p", {c("a")}}), negative(Atom{"p", {c("a")}})}, {{"p", 1}});
    EXPECT_EQ(db.relation("p").pos, (TupleSet{{"a"}}));
    EXPECT_EQ(db.relation("p").neg, (TupleSet{{"a"}}));
}

TEST(BuildDatabase, RejectsArityMismatch) {
    EXPECT_THROW(build_database({positive(Atom{"p", {c("a")}})}, {{"p", 2}}), std::invalid_argument);
    EXPECT_THROW(build_database({positive(Atom{"q", {c("a")}})}, {{"p", 1}}), std::invalid_argument);
}

TEST(Regions, Flu) {
    const RoughDatabase db = flu_database();
    const RoughRelation& flu = db.relation("flu");
    const TupleSet yes_rows{{"subfev", "no", "yes", "yes"},
                            {"subfev", "yes", "no", "no"},
                            {"high", "yes", "no", "no"},
                            {"high", "yes", "yes", "yes"}};
    EXPECT_EQ(upper(flu), yes_rows);
    EXPECT_EQ(lower(flu), (TupleSet{{"high", "yes", "yes", "yes"}}));
    EXPECT_EQ(lower(complement(flu)), (TupleSet{{"normal", "no", "no", "no"}, {"high", "no", "no", "no"}}));
    EXPECT_EQ(boundary(flu), (TupleSet{{"subfev", "no", "yes", "yes"},
                                       {"subfev", "yes", "no", "no"},
                                       {"high", "yes", "no", "no"}}));
}

TEST(Regions, EdgeCases) {
    const RoughRelation empty{"r", 1, {}, {}};
    EXPECT_TRUE(upper(empty).empty());
    EXPECT_TRUE(lower(empty).empty());

    const TupleSet t{{"a"}, {"b"}};
    const RoughRelation both{"r", 1, t, t};
    EXPECT_EQ(upper(both), t);
    EXPECT_EQ(boundary(both), t);
    EXPECT_TRUE(lower(both).empty());

    const RoughRelation crisp{"r", 1, {{"a"}}, {{"b"}}};
    EXPECT_TRUE(boundary(crisp).empty());
    EXPECT_EQ(lower(RoughRelation{"r", 1, t, {}}), t);

    const RoughRelation swapped = complement(crisp);
    EXPECT_EQ(swapped.pos, crisp.neg);
    EXPECT_EQ(swapped.neg, crisp.pos);
}

TEST(RegionProperty, Algebra) {
    testing::Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const RoughRelation r = testing::random_relation(rng, 1 + i % 3, 3);
        const TupleSet lo = lower(r);
        const TupleSet bd = boundary(r);
        TupleSet both = lo;
        both.insert(bd.begin(), bd.end());
        EXPECT_EQ(both, upper(r));
        for (const auto& t : lo) EXPECT_FALSE(bd.contains(t));
        EXPECT_EQ(complement(complement(r)), r);
        EXPECT_EQ(boundary(complement(r)), bd);
        EXPECT_EQ(upper(complement(r)), r.neg);
    }
}

TEST(RegionProperty, FactsOnlyRoundTrip) {
    testing::Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        const RoughRelation r = testing::random_relation(rng, 2, 4);
        Program p;
        for (const auto& t : r.pos) p.add(Rule{positive(atom_of("r", t)), {}});
        for (const auto& t : r.neg) p.add(Rule{negative(atom_of("r", t)), {}});
        const RoughDatabase db =
            build_database(to_dxl_model(least_model(to_definite(p))), Signature{{"r", 2}});
        EXPECT_EQ(db.relation("r"), r);
    }
}

TEST(DumpRegions, CanonicalOrder) {
    const RoughDatabase db = build_database(
        {positive(Atom{"q", {}}), negative(Atom{"p", {c("b")}}), positive(Atom{"p", {c("b")}}),
         positive(Atom{"p", {c("a")}})},
        {{"p", 1}, {"q", 0}, {"z", 1}});
    EXPECT_EQ(dump_regions(db), "p(a)\np(b)\n~p(b)\nq\n");
    EXPECT_EQ(summarize_relations(db),
              "p/1 pos=2 neg=1 lower=1 boundary=1\n"
              "q/0 pos=1 neg=0 lower=1 boundary=0\n"
              "z/1 pos=0 neg=0 lower=0 boundary=0\n");
}

}  // namespace
}  // namespace roughdxl
