#include <gtest/gtest.h>

#include "qsocle/error.hpp"
#include "qsocle/statements.hpp"

using namespace qsocle;

namespace {

StatementParams aa1(ParameterMap values) {
    return StatementParams{std::nullopt, std::move(values)};
}

StatementParams with_h(NumericalSemigroup h, ParameterMap values) {
    return StatementParams{std::move(h), std::move(values)};
}

void expect_holds(const VerificationOutcome& o) {
    EXPECT_TRUE(o.hypotheses_met);
    EXPECT_EQ(o.conclusion_holds, true);
    EXPECT_FALSE(o.counterexample.has_value()) << o.counterexample->description;
}

}  // namespace

TEST(Statements, NamesRoundTrip) {
    for (StatementId id : kAllStatements) EXPECT_EQ(parse_statement_id(to_string(id)), id);
    EXPECT_THROW(parse_statement_id("LEMMA_X"), UnknownStatement);
}

TEST(Statements, NonCmA) {
    const auto o = check_statement(StatementId::NonCmA, aa1({{"a", 5}, {"ell", 2}}));
    expect_holds(o);
    const auto unmet = check_statement(StatementId::NonCmA, aa1({{"a", 4}, {"ell", 2}}));
    EXPECT_FALSE(unmet.hypotheses_met);
    EXPECT_FALSE(unmet.conclusion_holds.has_value());
}

TEST(Statements, CmIffAtRNotExtreme) {
    expect_holds(check_statement(StatementId::CmIff, aa1({{"a", 5}, {"r", 1}})));
    expect_holds(check_statement(StatementId::CmIff, aa1({{"a", 5}, {"r", 2}})));
    EXPECT_FALSE(check_statement(StatementId::CmIff, aa1({{"a", 6}, {"r", 1}})).hypotheses_met);
}

TEST(Statements, MainTheoremHypotheses) {
    const NumericalSemigroup h2{7, 10, 18, 22};
    EXPECT_FALSE(check_statement(StatementId::MainTheorem, with_h(h2, {{"q", 3}, {"s", 21}})).hypotheses_met);
    const NumericalSemigroup h1{10, 13, 16, 17, 19};
    expect_holds(check_statement(StatementId::MainTheorem, with_h(h1, {{"q", 3}, {"s", 26}})));
    EXPECT_FALSE(check_statement(StatementId::MainTheorem, with_h(NumericalSemigroup{3, 4, 5}, {{"q", 1}, {"s", 3}}))
                     .hypotheses_met);
}

TEST(Statements, MalformedParameters) {
    EXPECT_THROW(check_statement(StatementId::NonCmA, aa1({{"a", 5}})), InvalidParameters);
    EXPECT_THROW(check_statement(StatementId::MainTheorem, aa1({{"q", 3}, {"s", 7}})), InvalidParameters);
    EXPECT_THROW(check_statement(StatementId::MainTheorem, with_h(NumericalSemigroup{7, 10, 18, 22}, {{"q", 3}, {"s", 8}})),
                 InvalidParameters);
}

TEST(Statements, SingleChecks) {
    const NumericalSemigroup h1{10, 13, 16, 17, 19};
    expect_holds(check_statement(StatementId::ReflectionLemma, with_h(h1, {{"alpha", 41}})));
    EXPECT_FALSE(check_statement(StatementId::ReflectionLemma, with_h(h1, {{"alpha", 40}})).hypotheses_met);
    expect_holds(check_statement(StatementId::IntegralityLemma, with_h(h1, {{"q", 3}, {"s", 13}})));
    expect_holds(check_statement(StatementId::GorensteinQ2, with_h(h1, {{"s", 16}})));
    expect_holds(check_statement(StatementId::GmtCorollary, with_h(h1, {{"s", 16}})));
    expect_holds(check_statement(StatementId::Aa1Membership, aa1({{"a", 6}, {"ell", 3}})));
    expect_holds(check_statement(StatementId::Aa1C1C2Iff, aa1({{"a", 6}, {"q", 7}})));
    expect_holds(check_statement(StatementId::Aa1IntegralEquiv, aa1({{"a", 6}, {"q", 6}, {"s", 13}})));
    expect_holds(check_statement(StatementId::Aa1Corollary, aa1({{"a", 6}, {"q", 3}, {"s", 18}})));
    expect_holds(check_statement(StatementId::GeneratorFormula, aa1({{"a", 5}, {"q", 4}, {"s", 11}})));
    expect_holds(check_statement(StatementId::ReductionFormula, aa1({{"a", 8}, {"ell", 3}})));
    expect_holds(check_statement(StatementId::ReductionFormula, aa1({{"a", 8}, {"ell", 3}, {"r", 0}})));
    expect_holds(check_statement(StatementId::ReductionBound, aa1({{"a", 8}, {"ell", 3}, {"r", 1}})));
    expect_holds(check_statement(StatementId::NonCmB, aa1({{"a", 7}, {"ell", 3}, {"r", 2}})));
}

TEST(Statements, SmallSweepsAreClean) {
    SweepBounds bounds;
    bounds.a_max = 7;
    bounds.family_conductor = 30;
    bounds.max_conductor = 60;
    bounds.random_semigroups = 10;
    for (StatementId id : kAllStatements) {
        const SweepResult result = sweep(id, bounds);
        EXPECT_EQ(result.summary.fails, 0u) << to_string(id);
        EXPECT_GT(result.summary.holds, 0u) << to_string(id);
        EXPECT_EQ(result.summary.total(), result.outcomes.size());
        const SweepSummary again = summarize(result.outcomes);
        EXPECT_EQ(again.holds, result.summary.holds);
        for (const auto& o : result.outcomes) {
            if (!o.hypotheses_met) EXPECT_FALSE(o.conclusion_holds.has_value());
            if (o.conclusion_holds == false) EXPECT_TRUE(o.counterexample.has_value());
        }
    }
}

TEST(Statements, SweepIsDeterministic) {
    SweepBounds bounds;
    bounds.a_max = 6;
    const auto a = sweep(StatementId::ReductionBound, bounds);
    const auto b = sweep(StatementId::ReductionBound, bounds);
    ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) EXPECT_EQ(a.outcomes[i].parameters, b.outcomes[i].parameters);
}

TEST(Statements, ExplicitSemigroupOverride) {
    SweepBounds bounds;
    bounds.semigroups = {NumericalSemigroup{10, 13, 16, 17, 19}};
    const auto result = sweep(StatementId::MainTheorem, bounds);
    EXPECT_EQ(result.summary.fails, 0u);
    EXPECT_GT(result.summary.holds, 0u);
    for (const auto& o : result.outcomes) EXPECT_EQ(o.semigroup, (std::vector<Exponent>{10, 13, 16, 17, 19}));
}
