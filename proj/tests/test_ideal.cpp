#include <gtest/gtest.h>

#include <random>

#include "qsocle/dense.hpp"
#include "qsocle/error.hpp"
#include "qsocle/families.hpp"
#include "qsocle/ideal.hpp"
#include "qsocle/quasisocle.hpp"

using namespace qsocle;

namespace {

const NumericalSemigroup kH1{10, 13, 16, 17, 19};
const NumericalSemigroup kH2{7, 10, 18, 22};

using Gens = std::vector<Exponent>;

}  // namespace

TEST(Ideal, MinimalGenerators) {
    const NumericalSemigroup h{5, 6};
    EXPECT_EQ(ideal_from_generators(h, Gens{10, 15, 16}).generators(), Gens{10});
    EXPECT_EQ((SemigroupIdeal(kH2, {7, 18, 20, 22})).generators(), (Gens{7, 18, 20, 22}));
    EXPECT_EQ((SemigroupIdeal(kH1, {16, 19, 23, 30, 32, 34, 37})).generators(), (Gens{16, 19, 23, 30, 34, 37}));
}

TEST(Ideal, Construction) {
    EXPECT_THROW(SemigroupIdeal(kH2, Gens{}), ZeroIdealUnsupported);
    EXPECT_THROW((SemigroupIdeal(kH2, {7, 8})), NotInSemigroup);
    EXPECT_TRUE(SemigroupIdeal::unit(kH2).is_unit());
    EXPECT_TRUE(SemigroupIdeal::principal(kH2, 14).is_principal());
    EXPECT_EQ(SemigroupIdeal::maximal(kH2).generators(), kH2.generators());
    EXPECT_EQ((SemigroupIdeal(kH2, {7, 18, 20, 22})).to_string(), "(7,18,20,22)");
}

TEST(Ideal, Membership) {
    const SemigroupIdeal i(kH2, {7, 18, 20, 22});
    EXPECT_TRUE(i.contains(7));
    EXPECT_TRUE(i.contains(17));
    EXPECT_FALSE(i.contains(10));
    EXPECT_FALSE(i.contains(0));
    EXPECT_TRUE(i.contains(i.tail_start()));
    EXPECT_TRUE(i.contains(SemigroupIdeal::principal(kH2, 7)));
    EXPECT_FALSE(SemigroupIdeal::principal(kH2, 7).contains(i));
}

TEST(Ideal, ProductAndPower) {
    const SemigroupIdeal i(kH2, {7, 18, 20, 22});
    EXPECT_EQ(power(i, 2).generators(), (Gens{14, 25, 27, 29, 40}));
    EXPECT_EQ(product(i, i), power(i, 2));
    EXPECT_TRUE(power(i, 0).is_unit());
    EXPECT_EQ(max_ideal_power(kH1, 3).generators().front(), 30);
    EXPECT_EQ(shift(i, 7), product(SemigroupIdeal::principal(kH2, 7), i));
}

TEST(Ideal, ColonReproducesQuasiSocle) {
    const SemigroupIdeal m3 = max_ideal_power(kH2, 3);
    EXPECT_EQ(colon(SemigroupIdeal::principal(kH2, 7), m3).generators(), (Gens{7, 18, 20, 22}));
    const SemigroupIdeal i = colon(SemigroupIdeal::principal(kH1, 16), max_ideal_power(kH1, 3));
    EXPECT_EQ(i, (SemigroupIdeal(kH1, {16, 19, 23, 30, 32, 34, 37})));
}

TEST(Ideal, Intersection) {
    const NumericalSemigroup h{5, 6};
    EXPECT_EQ(intersect(SemigroupIdeal(h, {10, 11}), SemigroupIdeal(h, {12})).generators(), (Gens{17, 30}));
    EXPECT_EQ(intersect(SemigroupIdeal(h, {10}), SemigroupIdeal(h, {12})).generators(), (Gens{22, 30}));
    const SemigroupIdeal q = SemigroupIdeal::principal(kH2, 22);
    const SemigroupIdeal i = quasi_socle(kH2, 22, 3);
    EXPECT_EQ(power(i, 2), shift(i, 22));
}

TEST(Ideal, QuotientLength) {
    const SemigroupIdeal i = quasi_socle(kH1, 16, 3);
    const SemigroupIdeal i2 = power(i, 2);
    EXPECT_EQ(length_quotient(i2, shift(i, 16)), 2);
    EXPECT_EQ(length_quotient(i, i), 0);
    EXPECT_THROW(length_quotient(shift(i, 16), i2), NotASubideal);
}

TEST(Ideal, EqualityAcrossRings) {
    const SemigroupIdeal a = SemigroupIdeal::principal(kH1, 10);
    const SemigroupIdeal b = SemigroupIdeal::principal(kH2, 10);
    EXPECT_FALSE(a == b);
    EXPECT_THROW(equals(a, b), AmbientMismatch);
    EXPECT_THROW(product(a, b), AmbientMismatch);
}

TEST(Ideal, IntegralClosureOfPrincipal) {
    const NumericalSemigroup h{5, 6};
    EXPECT_EQ(principal_integral_closure(h, 10).generators(), (Gens{10, 11, 12}));
}

TEST(IdealProperty, ArithmeticMatchesDenseOracle) {
    std::mt19937_64 rng(42);
    for (const auto& h : random_semigroups(5, 25, 2, 12, 120)) {
        auto draw = [&] {
            std::uniform_int_distribution<Exponent> pick(0, h.conductor() + 2 * h.multiplicity());
            Gens gens;
            while (gens.size() < 3) {
                const Exponent n = pick(rng);
                if (h.contains(n)) gens.push_back(n);
            }
            return ideal_from_generators(h, gens);
        };
        for (int k = 0; k < 4; ++k) {
            const SemigroupIdeal i = draw();
            const SemigroupIdeal j = draw();
            const Exponent bound = oracle_bound(i, j);
            for (OracleOp op : {OracleOp::Product, OracleOp::Colon, OracleOp::Intersection, OracleOp::Equality})
                EXPECT_TRUE(oracle_compare(i, j, op, bound)) << h.to_string() << " " << i.to_string() << " "
                                                             << j.to_string() << " " << to_string(op);
        }
    }
}

TEST(IdealProperty, ColonIsLargestMultiplier) {
    for (const auto& h : random_semigroups(8, 20, 3, 10, 100)) {
        const SemigroupIdeal q = SemigroupIdeal::principal(h, h.multiplicity() * 2);
        const SemigroupIdeal m2 = max_ideal_power(h, 2);
        const SemigroupIdeal i = colon(q, m2);
        EXPECT_TRUE(q.contains(product(i, m2)));
        for (Exponent n = 0; n < i.tail_start(); ++n) {
            if (!h.contains(n) || i.contains(n)) continue;
            EXPECT_FALSE(q.contains(product(SemigroupIdeal::principal(h, n), m2))) << h.to_string() << " n=" << n;
        }
    }
}

TEST(IdealProperty, ProductIsCommutativeAndAssociative) {
    const SemigroupIdeal a(kH1, {13, 17});
    const SemigroupIdeal b(kH1, {10, 19});
    const SemigroupIdeal c(kH1, {16});
    EXPECT_EQ(product(a, b), product(b, a));
    EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
}
