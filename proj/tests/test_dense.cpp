#include <gtest/gtest.h>

#include "qsocle/dense.hpp"
#include "qsocle/error.hpp"
#include "qsocle/quasisocle.hpp"

using namespace qsocle;

TEST(Dense, ClosureInvariant) {
    const std::vector<Exponent> gens{7, 10, 18, 22};
    const std::vector<Exponent> seeds{7, 18, 20, 22};
    const auto d = DenseIdeal::closure(gens, seeds, 120);
    for (Exponent n = 0; n < d.bound(); ++n)
        for (Exponent g : gens)
            if (d.test(n) && n + g < d.bound()) EXPECT_TRUE(d.test(n + g));
    // 33 is the last exponent outside the ideal, well before min + c = 41.
    EXPECT_EQ(d.tail_all_ones_from(), 34);
    EXPECT_FALSE(d.test(33));
    EXPECT_EQ(d.truncated(50).bound(), 50);
}

TEST(Dense, ConductorNeedsAWideEnoughSieve) {
    const std::vector<Exponent> gens{10, 13, 16, 17, 19};
    EXPECT_EQ(dense_conductor(gens, 200), 42);
    EXPECT_THROW(dense_conductor(gens, 45), InsufficientBound);
}

TEST(Dense, ProductOfTable2Ideal) {
    const NumericalSemigroup h{7, 10, 18, 22};
    const SemigroupIdeal i(h, {7, 18, 20, 22});
    EXPECT_TRUE(oracle_compare(i, i, OracleOp::Product, oracle_bound(i, i)));
}

TEST(Dense, ColonReproducesTable1Row) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    const SemigroupIdeal q = SemigroupIdeal::principal(h, 16);
    const SemigroupIdeal m3 = max_ideal_power(h, 3);
    EXPECT_TRUE(oracle_compare(q, m3, OracleOp::Colon, oracle_bound(q, m3)));

    const Exponent window = 200;
    const auto& gens = h.generators();
    const DenseIdeal expected = DenseIdeal::closure(gens, std::vector<Exponent>{16, 19, 23, 30, 32, 34, 37}, window);
    const DenseIdeal dense_m3 = DenseIdeal::closure(gens, m3.generators(), 200);
    const DenseIdeal dense_q = DenseIdeal::closure(gens, std::vector<Exponent>{16}, window + 200);
    const DenseIdeal got = dense_colon(dense_semigroup(gens, window), dense_q, dense_m3, 200, window);
    EXPECT_EQ(got, expected);
}

TEST(Dense, IdentityAndBounds) {
    const NumericalSemigroup h{5, 6};
    const SemigroupIdeal i(h, {10, 11});
    EXPECT_TRUE(oracle_compare(i, i, OracleOp::Equality, oracle_bound(i, i)));
    EXPECT_THROW(oracle_compare(i, i, OracleOp::Product, 5), InsufficientBound);
    EXPECT_THROW(oracle_compare(i, SemigroupIdeal::principal(NumericalSemigroup{2, 3}, 2), OracleOp::Product, 100),
                 AmbientMismatch);
}

TEST(Dense, OracleDetectsWrongResults) {
    const NumericalSemigroup h{5, 6};
    const auto gens = h.generators();
    const SemigroupIdeal i(h, {10, 11});
    const DenseIdeal right = DenseIdeal::closure(gens, power(i, 2).generators(), 100);
    const DenseIdeal wrong = DenseIdeal::closure(gens, std::vector<Exponent>{20, 21}, 100);
    EXPECT_EQ(dense_product(DenseIdeal::closure(gens, i.generators(), 100), DenseIdeal::closure(gens, i.generators(), 100)),
              right);
    EXPECT_NE(right, wrong);
}

TEST(Dense, OpNames) {
    for (OracleOp op : {OracleOp::Product, OracleOp::Colon, OracleOp::Intersection, OracleOp::Equality})
        EXPECT_EQ(parse_oracle_op(to_string(op)), op);
    EXPECT_THROW(parse_oracle_op("sum"), ParseError);
}

TEST(Dense, CampaignIsCleanAndDeterministic) {
    const auto a = run_oracle_campaign(1, 80, 120);
    const auto b = run_oracle_campaign(1, 80, 120);
    EXPECT_EQ(a.cases, 80u);
    EXPECT_TRUE(a.disagreements.empty());
    EXPECT_EQ(a.per_op, b.per_op);
    for (std::size_t n : a.per_op) EXPECT_EQ(n, 20u);
}
