#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "qsocle/dense.hpp"
#include "qsocle/error.hpp"
#include "qsocle/families.hpp"
#include "qsocle/semigroup.hpp"

using namespace qsocle;

TEST(Semigroup, FirstExampleInvariants) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    EXPECT_EQ(h.multiplicity(), 10);
    EXPECT_EQ(h.frobenius(), 41);
    EXPECT_EQ(h.conductor(), 42);
    EXPECT_TRUE(h.is_symmetric());
    const auto inv = h.invariants();
    EXPECT_EQ(inv.genus, 21u);
    EXPECT_EQ(inv.gaps.back(), 41);
    EXPECT_EQ(h.apery_set(10), (std::vector<Exponent>{0, 51, 32, 13, 34, 35, 16, 17, 38, 19}));
}

TEST(Semigroup, SecondExampleInvariants) {
    const NumericalSemigroup h{7, 10, 18, 22};
    EXPECT_EQ(h.conductor(), 34);
    EXPECT_TRUE(h.is_symmetric());
    EXPECT_FALSE(h.contains(33));
    EXPECT_TRUE(h.contains(34));
    EXPECT_TRUE(h.contains(1000));
}

TEST(Semigroup, TwoGeneratedConductor) {
    for (Exponent a = 2; a <= 30; ++a) {
        const NumericalSemigroup h{a, a + 1};
        EXPECT_EQ(h.conductor(), a * (a - 1)) << "a=" << a;
        EXPECT_TRUE(h.is_symmetric());
    }
}

TEST(Semigroup, AperySetOfFiveSix) {
    const NumericalSemigroup h{5, 6};
    EXPECT_EQ(h.apery_set(5), (std::vector<Exponent>{0, 6, 12, 18, 24}));
    EXPECT_THROW(h.apery_set(7), InvalidAperyBase);
    EXPECT_THROW(h.apery_set(0), InvalidAperyBase);
}

TEST(Semigroup, MinimalizesSilently) {
    const NumericalSemigroup h{10, 20, 13, 23, 16, 17, 19};
    EXPECT_EQ(h.generators(), (std::vector<Exponent>{10, 13, 16, 17, 19}));
    EXPECT_EQ(h, (NumericalSemigroup{10, 13, 16, 17, 19}));
}

TEST(Semigroup, NaturalNumbers) {
    const NumericalSemigroup h{1};
    EXPECT_EQ(h.frobenius(), -1);
    EXPECT_EQ(h.conductor(), 0);
    EXPECT_TRUE(h.contains(0));
    EXPECT_FALSE(h.contains(-1));
    EXPECT_TRUE(h.is_symmetric());
}

TEST(Semigroup, RejectsBadGenerators) {
    EXPECT_THROW(NumericalSemigroup(std::vector<Exponent>{}), EmptyGenerators);
    EXPECT_THROW((NumericalSemigroup{0, 3}), InvalidGenerator);
    EXPECT_THROW((NumericalSemigroup{-2, 3}), InvalidGenerator);
    EXPECT_THROW((NumericalSemigroup{4, 6}), NotCofinite);
}

TEST(Semigroup, ParseAndPrint) {
    const auto h = NumericalSemigroup::parse("<7,10,18,22>");
    EXPECT_EQ(h.to_string(), "<7,10,18,22>");
    EXPECT_EQ(NumericalSemigroup::parse("7, 10, 18, 22"), h);
    EXPECT_THROW(NumericalSemigroup::parse("<7,x>"), ParseError);
    EXPECT_THROW(NumericalSemigroup::parse(""), Error);
}

TEST(Semigroup, NonSymmetric) {
    const NumericalSemigroup h{3, 4, 5};
    EXPECT_EQ(h.frobenius(), 2);
    EXPECT_FALSE(h.is_symmetric());
}

TEST(Semigroup, ReflectionWindow) {
    const NumericalSemigroup h{7, 10, 18, 22};
    EXPECT_TRUE(h.reflection_window_is_symmetric(h.frobenius()));
    EXPECT_THROW((NumericalSemigroup{2, 3}).reflection_window_is_symmetric(5), HypothesisNotMet);
    EXPECT_THROW(h.reflection_window_is_symmetric(5), HypothesisNotMet);
}

TEST(SemigroupProperty, MembershipAgreesWithSieve) {
    for (const auto& h : random_semigroups(7, 40, 2, 15, 200)) {
        const Exponent bound = h.conductor() + 3 * h.multiplicity();
        const DenseIdeal dense = dense_semigroup(h.generators(), bound);
        for (Exponent n = 0; n < bound; ++n) ASSERT_EQ(h.contains(n), dense.test(n)) << h.to_string() << " n=" << n;
        EXPECT_EQ(dense_conductor(h.generators(), bound), h.conductor());
    }
}

TEST(SemigroupProperty, SymmetryMatchesGenusCount) {
    for (const auto& h : random_semigroups(11, 60, 3, 12, 150)) {
        const auto inv = h.invariants();
        EXPECT_EQ(inv.symmetric, 2 * static_cast<Exponent>(inv.genus) == h.conductor()) << h.to_string();
    }
}

TEST(SemigroupProperty, AperySetIsLeastPerResidue) {
    for (const auto& h : random_semigroups(3, 30, 2, 12, 150)) {
        const auto apery = h.apery_set(h.multiplicity());
        for (std::size_t r = 0; r < apery.size(); ++r) {
            const Exponent w = apery[r];
            EXPECT_TRUE(h.contains(w));
            EXPECT_EQ(w % h.multiplicity(), static_cast<Exponent>(r));
            if (w >= h.multiplicity()) EXPECT_FALSE(h.contains(w - h.multiplicity()));
        }
        EXPECT_EQ(*std::max_element(apery.begin(), apery.end()) - h.multiplicity(), h.frobenius());
    }
}

TEST(Families, SymmetricEnumerationCounts) {
    // Counts by Frobenius number 1, 3, ..., 11 from exhaustive subset search: 1, 1, 2, 3, 3, 6.
    const auto family = all_symmetric_semigroups(12);
    std::map<Exponent, int> by_frobenius;
    for (const auto& h : family) {
        EXPECT_TRUE(h.is_symmetric());
        ++by_frobenius[h.frobenius()];
    }
    EXPECT_EQ(by_frobenius[1], 1);
    EXPECT_EQ(by_frobenius[3], 1);
    EXPECT_EQ(by_frobenius[5], 2);
    EXPECT_EQ(by_frobenius[7], 3);
    EXPECT_EQ(by_frobenius[9], 3);
    EXPECT_EQ(by_frobenius[11], 6);
}

TEST(Families, GorensteinFamilyIsSymmetricAndContainsExamples) {
    GorensteinFamilyOptions options;
    options.max_conductor = 60;
    const auto family = gorenstein_family(options);
    for (const auto& h : family) EXPECT_TRUE(h.is_symmetric()) << h.to_string();
    for (const auto& h : example_semigroups())
        EXPECT_NE(std::find(family.begin(), family.end(), h), family.end());
}

TEST(Families, RandomSemigroupsAreDeterministic) {
    const auto a = random_semigroups(99, 10, 3, 9, 100);
    const auto b = random_semigroups(99, 10, 3, 9, 100);
    EXPECT_EQ(a, b);
    for (const auto& h : a) {
        EXPECT_GE(h.multiplicity(), 3);
        EXPECT_LE(h.conductor(), 100);
    }
}
