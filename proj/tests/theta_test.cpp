#include "support/printers.hpp"

#include "thetadirac/error.hpp"
#include "thetadirac/theta.hpp"

#include <gtest/gtest.h>

using namespace thetadirac;

namespace {

ZhelParam gl(int n, Weight mu, Weight nu) { return ZhelParam::from_mu_nu(GroupKind::gl(n), mu, nu); }

ZhelParam d2_even() { return unipotent_param(UnipotentDescriptor::type_d(1, 1, Parity::Even)); }

}  // namespace

TEST(DualPair, TextRoundTrip) {
    for (const char* text : {"II:1,2", "I:O4,Sp4", "I:O5,Sp6", "I:Sp4,O9"}) {
        EXPECT_EQ(DualPair::parse(text).to_string(), text);
    }
    EXPECT_EQ(DualPair::parse("I:O5,Sp6"), DualPair::orthogonal_to_symplectic(2, 1, 3));
    EXPECT_EQ(DualPair::parse("I:Sp4,O8").target_kind(), GroupKind(Family::D, 4));
    EXPECT_THROW(DualPair::parse("II:3,2"), DomainError);
    EXPECT_THROW(DualPair::parse("I:O4,O4"), ParseError);
    EXPECT_THROW(DualPair::parse("III:1,2"), ParseError);
    EXPECT_THROW(DualPair::parse("II:1"), ParseError);
}

TEST(LiftTypeII, Examples) {
    const auto a = lift_typeII(1, 2, gl(1, Weight{0}, Weight{5}));
    ASSERT_TRUE(a.lifted());
    EXPECT_TRUE(a.dual);
    EXPECT_EQ(a.param->mu(), (Weight{0, 0}));
    EXPECT_EQ(a.param->nu(), (Weight{5, 0}));

    const auto p = gl(3, Weight{2, -1, 0}, Weight{1, Rat(1, 2), 4});
    const auto same = lift_typeII(3, 3, p);
    EXPECT_TRUE(same.dual);
    EXPECT_TRUE(equivalent(*same.param, p));

    const auto b = lift_typeII(2, 4, gl(2, Weight{1, -1}, Weight{7, 9}));
    EXPECT_EQ(b.param->mu(), (Weight{1, 0, 0, -1}));
    EXPECT_EQ(b.param->nu(), (Weight{7, 1, -1, 9}));
    EXPECT_TRUE(b.dual);

    EXPECT_THROW(lift_typeII(3, 2, gl(3, Weight{0, 0, 0}, Weight{0, 0, 0})), DomainError);
    EXPECT_THROW(lift_typeII(2, 3, gl(1, Weight{0}, Weight{0})), DomainError);
}

TEST(LiftTypeII, SortsMuDescendingAroundTheInsertion) {
    const auto out = lift_typeII(3, 5, gl(3, Weight{-2, 0, 3}, Weight{1, 2, 3}));
    EXPECT_EQ(out.param->mu(), (Weight{3, 0, 0, 0, -2}));
    EXPECT_EQ(out.param->nu(), (Weight{3, 2, 1, -1, 1}));
}

TEST(LiftTypeI, DTailToSymplectic) {
    const auto pair = DualPair::orthogonal_to_symplectic(2, 0, 2);
    const auto out = lift_typeI(pair, d2_even());
    ASSERT_TRUE(out.lifted());
    EXPECT_FALSE(out.dual);
    EXPECT_EQ(out.param->kind(), GroupKind::sp(2));
    EXPECT_EQ(out.param->mu(), (Weight{0, 0}));
    EXPECT_EQ(out.param->nu(), (Weight{1, 0}));
    EXPECT_FALSE(out.param->epsilon());

    const auto wider = lift_typeI(DualPair::orthogonal_to_symplectic(2, 0, 3), d2_even());
    EXPECT_EQ(wider.param->nu(), (Weight{1, 2, 0}));
}

TEST(LiftTypeI, NegativeEpsilonNeedsRoom) {
    const GroupKind B2(Family::B, 2);
    const auto p = ZhelParam::from_mu_nu(B2, Weight{0, 0}, Weight{3, 5}, -1);
    EXPECT_EQ(lift_typeI(DualPair::orthogonal_to_symplectic(2, 1, 2), p).status, LiftStatus::NotInCorrespondence);
    const auto out = lift_typeI(DualPair::orthogonal_to_symplectic(2, 1, 3), p);
    ASSERT_TRUE(out.lifted());
    EXPECT_EQ(out.param->mu(), (Weight{1, 0, 0}));
    EXPECT_EQ(out.param->nu(), (Weight{0, 3, 5}));
}

TEST(LiftTypeI, AllMuPositiveForcesQZero) {
    const GroupKind B2(Family::B, 2);
    // nu contains tau = 1, but with k = m there is no free coordinate to hold it.
    const auto p = ZhelParam::from_mu_nu(B2, Weight{1, 2}, Weight{1, 3}, 1);
    const auto out = lift_typeI(DualPair::orthogonal_to_symplectic(2, 1, 2), p);
    ASSERT_TRUE(out.lifted());
    EXPECT_EQ(out.param->mu(), (Weight{2, 1}));
    EXPECT_EQ(out.param->nu(), (Weight{3, 1}));
}

TEST(LiftTypeI, Errors) {
    const auto pair = DualPair::orthogonal_to_symplectic(2, 1, 2);
    EXPECT_THROW(lift_typeI(pair, d2_even()), DomainError);
    EXPECT_THROW(lift_typeI(DualPair::symplectic_to_orthogonal(2, 2, 0), d2_even()), DomainError);
}

TEST(LiftSymplecticSource, InvertsTheForwardLift) {
    const auto pc = unipotent_param(UnipotentDescriptor::type_c(2, Parity::Even));
    const auto pair = DualPair::symplectic_to_orthogonal(2, 2, 0);
    const auto out = lift(pair, pc);
    ASSERT_TRUE(out.lifted());
    EXPECT_EQ(out.param->kind(), GroupKind(Family::D, 2));
    const auto back = lift_typeI(DualPair::orthogonal_to_symplectic(2, 0, 2), *out.param);
    ASSERT_TRUE(back.lifted());
    EXPECT_TRUE(equivalent(*back.param, pc));
}

TEST(LiftSymplecticSource, ReportsMissingPreimage) {
    // (mu, nu) = (2, 0) on Sp2 comes straight from O2.
    const GroupKind C1 = GroupKind::sp(1);
    EXPECT_TRUE(lift(DualPair::symplectic_to_orthogonal(1, 1, 0), ZhelParam::from_mu_nu(C1, Weight{2}, Weight{0})).lifted());
    // From O2 the forward lift would append a column (0, 2) or (1, +-1); neither is present.
    const auto q = ZhelParam::from_mu_nu(GroupKind::sp(2), Weight{1, 1}, Weight{0, 0});
    const auto out = lift(DualPair::symplectic_to_orthogonal(2, 1, 0), q);
    EXPECT_EQ(out.status, LiftStatus::NotInCorrespondence);
    EXPECT_FALSE(out.param);
}

TEST(LambdaTilde, Examples) {
    EXPECT_EQ(lambda_tilde(DualPair::type_ii(1, 2)), (Weight{0}));
    EXPECT_EQ(lambda_tilde(DualPair::type_ii(2, 4)), (Weight{Rat(1, 2), Rat(-1, 2)}));
    EXPECT_EQ(lambda_tilde(DualPair::type_ii(3, 3)), Weight{});
    EXPECT_EQ(lambda_tilde(DualPair::orthogonal_to_symplectic(2, 0, 2)), Weight{});
    EXPECT_EQ(lambda_tilde(DualPair::orthogonal_to_symplectic(2, 0, 4)), (Weight{2, 1}));
    EXPECT_EQ(lambda_tilde(DualPair::orthogonal_to_symplectic(2, 1, 4)), (Weight{Rat(3, 2), Rat(1, 2)}));
    EXPECT_EQ(lambda_tilde(DualPair::symplectic_to_orthogonal(2, 4, 0)), (Weight{1, 0}));
    EXPECT_EQ(lambda_tilde(DualPair::symplectic_to_orthogonal(2, 5, 1)), (Weight{Rat(5, 2), Rat(3, 2), Rat(1, 2)}));
    EXPECT_THROW(lambda_tilde(DualPair::symplectic_to_orthogonal(3, 1, 0)), DomainError);
    EXPECT_THROW(lambda_tilde(DualPair::orthogonal_to_symplectic(3, 0, 2)), DomainError);
}

TEST(InfcharCheck, TypeII) {
    const auto p = gl(2, Weight{1, 0}, Weight{3, Rat(1, 2)});
    EXPECT_TRUE(infchar_check(DualPair::type_ii(2, 2), p, contragredient(p), true));

    const auto src = gl(1, Weight{0}, Weight{5});
    const auto pair = DualPair::type_ii(1, 2);
    const auto out = lift(pair, src);
    const auto target = contragredient(*out.param);
    EXPECT_TRUE(infchar_check(pair, src, target, true));
    const auto bent = contragredient(
        ZhelParam::from_mu_nu(GroupKind::gl(2), out.param->mu(), out.param->nu() + Weight{1, 0}));
    EXPECT_FALSE(infchar_check(pair, src, bent, true));
}

TEST(InfcharCheck, TypeIBothDirections) {
    const auto pair = DualPair::orthogonal_to_symplectic(2, 0, 3);
    const auto out = lift(pair, d2_even());
    EXPECT_TRUE(infchar_check(pair, d2_even(), *out.param, false));

    const auto pc = unipotent_param(UnipotentDescriptor::type_c(2, Parity::Even));
    const auto back = DualPair::symplectic_to_orthogonal(2, 3, 1);
    const auto o = lift(back, pc);
    ASSERT_TRUE(o.lifted());
    EXPECT_TRUE(infchar_check(back, pc, *o.param, false));
}

TEST(InfcharCheck, RankMismatchThrows) {
    EXPECT_THROW(infchar_check(DualPair::type_ii(1, 2), gl(2, Weight{0, 0}, Weight{0, 0}),
                               gl(2, Weight{0, 0}, Weight{0, 0}), false),
                 DomainError);
}

TEST(LiftDirac, TypeIITrivialSource) {
    const auto src = gl(1, Weight{0}, Weight{0});
    const auto pair = DualPair::type_ii(1, 3);
    const auto h = lift_dirac(pair, src);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->multiplicity, 2u);
    EXPECT_EQ(h->highest_weight, (Weight{0, 0, 0}));
    const auto independent = dirac_cohomology(GroupKind::gl(3), contragredient(*lift(pair, src).param));
    ASSERT_TRUE(independent);
    EXPECT_EQ(*independent, *h);
}

TEST(LiftDirac, OrthogonalEvenToSymplectic) {
    const auto pair = DualPair::orthogonal_to_symplectic(2, 0, 2);
    const auto h = lift_dirac(pair, d2_even());
    ASSERT_TRUE(h);
    EXPECT_EQ(h->multiplicity, 2u);
    EXPECT_EQ(h->highest_weight, (Weight{-1, -1}));
    // b = 1 needs n = m; one step further the dichotomy says empty.
    EXPECT_FALSE(lift_dirac(DualPair::orthogonal_to_symplectic(2, 0, 3), d2_even()));
    // The lifted parameter has a zero in lambda, so it is not itself recognised.
    EXPECT_FALSE(decompose(GroupKind::sp(2), *lift(pair, d2_even()).param));
}

TEST(LiftDirac, OddOrthogonalIsAlwaysEmpty) {
    const auto src = unipotent_param(UnipotentDescriptor::type_b(1, 1));
    for (int n = 2; n <= 4; ++n) {
        EXPECT_FALSE(lift_dirac(DualPair::orthogonal_to_symplectic(2, 1, n), src)) << n;
    }
}

TEST(LiftDirac, RequiresADiracSeriesSource) {
    EXPECT_THROW(lift_dirac(DualPair::type_ii(1, 2), gl(1, Weight{0}, Weight{1})), DomainError);
}
