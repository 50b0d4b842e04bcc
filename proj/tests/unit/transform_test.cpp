#include <gtest/gtest.h>

#include "generators.hpp"
#include "roughdxl/parser.hpp"
#include "roughdxl/transform.hpp"

namespace roughdxl {
namespace {

Term c(const std::string& n) { return Term::constant(n); }

bool has_negative(const Program& p) {
    for (const auto& r : p.rules()) {
        if (r.head.is_negative()) return true;
        for (const auto& b : r.body)
            if (b.is_negative()) return true;
    }
    return false;
}

TEST(ToDefinite, RenamesNegatedHeadAndBody) {
    const Program p = parse_program("~ft(Id) :- ~patient(Id,Age,Sex,Fev,C,Ha,Mp).");
    const Program d = to_definite(p);
    ASSERT_EQ(d.size(), 1u);
    const Rule& r = *d.rules().begin();
    EXPECT_TRUE(r.head.is_positive());
    EXPECT_EQ(r.head.atom.predicate, minus_name("ft"));
    EXPECT_EQ(r.body[0].atom.predicate, minus_name("patient"));
    EXPECT_EQ(r.body[0].atom.args.size(), 7u);
    EXPECT_EQ(to_string(r), "ft⁻(Id) :- patient⁻(Id,Age,Sex,Fev,C,Ha,Mp).");
}

TEST(ToDefinite, IdentityWithoutNegation) {
    const Program p = parse_program("q(X) :- r(X), s(X). r(a). s(a).");
    EXPECT_EQ(to_definite(p), p);
}

TEST(ToDefinite, SingleNegativeFact) {
    const Program d = to_definite(parse_program("~p."));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.rules().begin()->head, positive(Atom{minus_name("p"), {}}));
}

TEST(ToDxlModel, Examples) {
    const Model renamed{positive(Atom{minus_name("flu"), {c("normal"), c("no"), c("no"), c("no")}})};
    EXPECT_EQ(to_dxl_model(renamed), (Model{negative(Atom{"flu", {c("normal"), c("no"), c("no"), c("no")}})}));
    EXPECT_TRUE(to_dxl_model({}).empty());
    const Model both{positive(Atom{"p", {c("a")}}), positive(Atom{minus_name("p"), {c("a")}})};
    EXPECT_EQ(to_dxl_model(both), (Model{positive(Atom{"p", {c("a")}}), negative(Atom{"p", {c("a")}})}));
}

TEST(RenamedPredicate, NamesRoundTripAndCannotBeParsed) {
    const RenamedPredicate minus{"ft", RenamedPredicate::Sign::minus};
    EXPECT_EQ(RenamedPredicate::from_name(minus.name()), minus);
    EXPECT_EQ(RenamedPredicate::from_name("ft").sign, RenamedPredicate::Sign::plus);
    EXPECT_THROW(parse_program(minus.name() + "(a)."), ParseError);
}

TEST(ExportDefinite, SpellsMinusFormsAndAvoidsCollisions) {
    const std::string out = export_definite(parse_program("~p(a). q(X) :- ~p(X). p_neg(b)."));
    EXPECT_NE(out.find("p_neg_1(a)."), std::string::npos) << out;
    EXPECT_NE(out.find("q(X) :- p_neg_1(X)."), std::string::npos) << out;
    EXPECT_NE(out.find("p_neg(b)."), std::string::npos) << out;
    // The export is ordinary definite-clause text.
    const Program reparsed = parse_program(out);
    EXPECT_FALSE(has_negative(reparsed));
    EXPECT_EQ(reparsed.size(), 3u);
}

TEST(TransformProperty, NoNegativesAndShapePreserved) {
    testing::Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const Program p = testing::random_program(rng);
        const Program d = to_definite(p);
        ASSERT_FALSE(has_negative(d));
        ASSERT_EQ(d.size(), p.size());

        std::multiset<std::size_t> lens_p;
        std::multiset<std::size_t> lens_d;
        for (const auto& r : p.rules()) lens_p.insert(r.body.size());
        for (const auto& r : d.rules()) lens_d.insert(r.body.size());
        EXPECT_EQ(lens_p, lens_d);

        // Predicates of P' are the plus-forms of all predicates plus
        // minus-forms exactly for the negated ones.
        std::set<std::string> expected;
        auto note = [&](const Literal& l) {
            expected.insert(l.is_negative() ? minus_name(l.atom.predicate) : l.atom.predicate);
        };
        for (const auto& r : p.rules()) {
            note(r.head);
            for (const auto& b : r.body) note(b);
        }
        std::set<std::string> got;
        for (const auto& [name, arity] : d.signature()) got.insert(name);
        EXPECT_EQ(got, expected);
        for (const auto& base : p.negated_predicates()) EXPECT_TRUE(got.contains(minus_name(base)));
    }
}

TEST(TransformProperty, LiteralRenamingIsABijection) {
    testing::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const Program p = testing::random_program(rng);
        Model literals;
        for (const auto& r : p.rules())
            if (r.is_fact()) literals.insert(r.head);
        Model renamed;
        for (const auto& l : literals) renamed.insert(rename_literal(l));
        EXPECT_EQ(renamed.size(), literals.size());
        EXPECT_EQ(to_dxl_model(renamed), literals);
    }
}

}  // namespace
}  // namespace roughdxl
