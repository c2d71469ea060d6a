#pragma once

#include "thetadirac/group_kind.hpp"
#include "thetadirac/weight.hpp"
#include "thetadirac/weyl.hpp"

#include <optional>

namespace thetadirac {

/**
 * Zhelobenko parameter (lambda1, lambda2) of an irreducible Harish-Chandra
 * module of a complex classical group viewed as a real group.
 *
 * Equivalently (mu, nu) with mu = lambda1 - lambda2 and nu = lambda1 + lambda2.
 * mu is always integral. Orthogonal kinds (B, D) carry a sign epsilon = +-1;
 * other kinds carry none. Instances are immutable.
 */
class ZhelParam {
public:
    static ZhelParam from_lambda(const GroupKind& kind, Weight lambda1, Weight lambda2,
                                 std::optional<int> epsilon = std::nullopt);
    static ZhelParam from_mu_nu(const GroupKind& kind, const Weight& mu, const Weight& nu,
                                std::optional<int> epsilon = std::nullopt);

    const GroupKind& kind() const { return kind_; }
    const Weight& lambda1() const { return lambda1_; }
    const Weight& lambda2() const { return lambda2_; }
    std::optional<int> epsilon() const { return epsilon_; }

    Weight mu() const { return lambda1_ - lambda2_; }
    Weight nu() const { return lambda1_ + lambda2_; }
    WeightPair lambdas() const { return {lambda1_, lambda2_}; }

    /// "kind=C2 mu=0,0 nu=3,1" plus " eps=+1" for orthogonal kinds.
    std::string to_string() const;

    friend bool operator==(const ZhelParam&, const ZhelParam&) = default;

private:
    ZhelParam(GroupKind kind, Weight lambda1, Weight lambda2, std::optional<int> epsilon)
        : kind_(kind), lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)), epsilon_(epsilon) {}

    GroupKind kind_;
    Weight lambda1_;
    Weight lambda2_;
    std::optional<int> epsilon_;
};

/// Same module: one Weyl element carries both lambdas, and epsilon agrees.
bool equivalent(const ZhelParam& p, const ZhelParam& q);

/// Some w fixes mu and negates nu (parameters are real, so conj(nu) = nu).
bool hermitian_exists(const ZhelParam& p);

/// (lambda1, lambda2) -> (-lambda1, -lambda2); epsilon is left unchanged.
ZhelParam contragredient(const ZhelParam& p);

/**
 * Parses `kind=<A|B|C|D><rank> mu=<w> nu=<w> [eps=<+1|-1>] [tau=<0|1>]`, or
 * the same with lambda1=/lambda2= in place of mu=/nu=. Group aliases such as
 * Sp4 and O5 are accepted for kind. A missing eps on an orthogonal kind
 * defaults to +1; tau, when given, must match the kind.
 */
ZhelParam parse_param(std::string_view text);

}  // namespace thetadirac
