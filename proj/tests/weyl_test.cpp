#include "support/oracle.hpp"

#include "support/printers.hpp"

#include "thetadirac/error.hpp"
#include "thetadirac/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace thetadirac;

TEST(WeylApply, Examples) {
    const GroupKind C2(Family::C, 2);
    EXPECT_EQ(apply(C2, WeylElement::identity(2), Weight{3, 1}), (Weight{3, 1}));
    EXPECT_EQ(apply(C2, WeylElement{{1, 0}, {1, -1}}, Weight{3, 1}), (Weight{1, -3}));
    const GroupKind A3(Family::A, 3);
    EXPECT_EQ(apply(A3, WeylElement{{1, 2, 0}, {1, 1, 1}}, Weight{1, 0, -1}), (Weight{-1, 1, 0}));
}

TEST(WeylApply, RejectsElementsOutsideTheGroup) {
    EXPECT_THROW(validate(GroupKind(Family::A, 2), WeylElement{{0, 1}, {1, -1}}), DomainError);
    EXPECT_THROW(validate(GroupKind(Family::D, 2), WeylElement{{0, 1}, {1, -1}}), DomainError);
    EXPECT_THROW(validate(GroupKind(Family::C, 2), WeylElement{{0, 0}, {1, 1}}), DomainError);
    EXPECT_NO_THROW(validate(GroupKind(Family::D, 2), WeylElement{{1, 0}, {-1, -1}}));
}

TEST(WeylEnumerate, Counts) {
    EXPECT_EQ(enumerate(GroupKind(Family::A, 3)).size(), 6u);
    EXPECT_EQ(enumerate(GroupKind(Family::C, 2)).size(), 8u);
    EXPECT_EQ(enumerate(GroupKind(Family::D, 3)).size(), 24u);
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int r = 1; r <= 4; ++r) {
            const GroupKind k(f, r);
            EXPECT_EQ(enumerate(k).size(), weyl_order(k)) << k.name();
            EXPECT_EQ(enumerate(k).size(), oracle::group(k).size()) << k.name();
        }
    }
}

TEST(WeylEnumerate, ElementsAreDistinctAndValid) {
    const GroupKind D4(Family::D, 4);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& g : enumerate(D4)) {
        EXPECT_NO_THROW(validate(D4, g));
        EXPECT_TRUE(seen.emplace(g.permutation, g.signs).second);
    }
}

TEST(WeylEnumerate, RefusesRanksAboveTheBound) {
    EXPECT_THROW(enumerate(GroupKind(Family::A, 9)), DomainError);
    EXPECT_THROW(enumerate(GroupKind(Family::C, 4), 3), DomainError);
}

TEST(PairEquivalent, Examples) {
    const GroupKind A2(Family::A, 2);
    EXPECT_TRUE(pair_equivalent(A2, {Weight{1, 0}, Weight{0, 1}}, {Weight{1, 0}, Weight{0, 1}}));
    EXPECT_TRUE(pair_equivalent(A2, {Weight{1, 0}, Weight{5, 7}}, {Weight{0, 1}, Weight{7, 5}}));
    EXPECT_FALSE(pair_equivalent(A2, {Weight{1, 0}, Weight{5, 7}}, {Weight{0, 1}, Weight{5, 7}}));
    EXPECT_FALSE(oracle::same_pair_orbit(A2, Weight{1, 0}, Weight{5, 7}, Weight{0, 1}, Weight{5, 7}));
}

TEST(PairEquivalent, DiagonalActionIsNotTwoIndependentOrbits) {
    // Each weight alone is in the other's orbit, but no single element moves both.
    const GroupKind C2(Family::C, 2);
    const WeightPair p{Weight{1, 2}, Weight{1, 2}};
    const WeightPair q{Weight{1, 2}, Weight{-1, 2}};
    EXPECT_TRUE(orbit_equivalent(C2, p.second, q.second));
    EXPECT_FALSE(pair_equivalent(C2, p, q));
}

TEST(PairEquivalent, TypeDTracksSignParity) {
    const GroupKind D2(Family::D, 2);
    EXPECT_FALSE(pair_equivalent(D2, {Weight{1, 2}, Weight{3, 4}}, {Weight{1, -2}, Weight{3, -4}}));
    EXPECT_TRUE(pair_equivalent(D2, {Weight{1, 0}, Weight{3, 0}}, {Weight{1, 0}, Weight{-3, 0}}) ==
                oracle::same_pair_orbit(D2, Weight{1, 0}, Weight{3, 0}, Weight{1, 0}, Weight{-3, 0}));
    EXPECT_TRUE(pair_equivalent(D2, {Weight{1, 0}, Weight{3, 0}}, {Weight{-1, 0}, Weight{-3, 0}}));
    const GroupKind B2(Family::B, 2);
    EXPECT_TRUE(pair_equivalent(B2, {Weight{1, 2}, Weight{3, 4}}, {Weight{1, -2}, Weight{3, -4}}));
}

TEST(PairEquivalent, RankMismatchThrows) {
    EXPECT_THROW(pair_equivalent(GroupKind(Family::A, 2), {Weight{1}, Weight{1}}, {Weight{1}, Weight{1}}),
                 DomainError);
}
