#pragma once

#include "thetadirac/dirac.hpp"
#include "thetadirac/group_kind.hpp"
#include "thetadirac/weight.hpp"
#include "thetadirac/zhel.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace thetadirac {

enum class PairType { I, II };

/**
 * A reductive dual pair together with the direction of the lift.
 *
 *   II:          (GL_m, GL_n), 1 <= m <= n, lifting GL_m -> GL_n
 *   I, O -> Sp:  (O_{2m+tau}, Sp_{2n})
 *   I, Sp -> O:  (Sp_{2m}, O_{2n+tau})
 *
 * For type I the orthogonal side is stored as (rank, tau).
 */
class DualPair {
public:
    static DualPair type_ii(int m, int n);
    static DualPair orthogonal_to_symplectic(int orthogonal_rank, int tau, int symplectic_rank);
    static DualPair symplectic_to_orthogonal(int symplectic_rank, int orthogonal_rank, int tau);

    PairType type() const { return type_; }
    bool source_is_orthogonal() const { return type_ == PairType::I && source_orthogonal_; }

    /// Rank of the source and target groups (m and n in every case).
    int source_rank() const { return source_rank_; }
    int target_rank() const { return target_rank_; }
    int tau() const { return tau_; }

    GroupKind source_kind() const;
    GroupKind target_kind() const;

    /// "II:1,2", "I:O4,Sp4", "I:Sp4,O5".
    std::string to_string() const;
    /// Inverse of to_string. Throws ParseError or DomainError.
    static DualPair parse(std::string_view text);

    friend bool operator==(const DualPair&, const DualPair&) = default;

private:
    DualPair(PairType type, bool source_orthogonal, int source_rank, int target_rank, int tau)
        : type_(type), source_orthogonal_(source_orthogonal), source_rank_(source_rank),
          target_rank_(target_rank), tau_(tau) {}

    PairType type_;
    bool source_orthogonal_;
    int source_rank_;
    int target_rank_;
    int tau_;
};

enum class LiftStatus { Lifted, NotInCorrespondence };

struct LiftOutcome {
    LiftStatus status = LiftStatus::NotInCorrespondence;
    std::optional<ZhelParam> param;
    /// The lifted representation is the contragredient of `param`.
    bool dual = false;

    bool lifted() const { return status == LiftStatus::Lifted; }
};

/// GL_m -> GL_n. Always lifts; the result is stated as a contragredient.
LiftOutcome lift_typeII(int m, int n, const ZhelParam& p);

/// O_{2m+tau} -> Sp_{2n} for a parameter carrying epsilon.
LiftOutcome lift_typeI(const DualPair& pair, const ZhelParam& p);

/**
 * Sp_{2m} -> O_{2n+tau}: the orthogonal parameter whose O -> Sp lift is p,
 * found by inverting the forward construction over epsilon and the chain
 * length q. NotInCorrespondence when no preimage exists.
 */
LiftOutcome lift_symplectic_source(const DualPair& pair, const ZhelParam& p);

/// Dispatches on the pair type and direction.
LiftOutcome lift(const DualPair& pair, const ZhelParam& p);

/// The weight concatenated to the source infinitesimal character; length n - m.
Weight lambda_tilde(const DualPair& pair);

/**
 * True iff (lambda1(source).lt, lambda2(source).lt) is diagonally Weyl
 * equivalent to the lambdas of target, where lt = lambda_tilde(pair). When
 * target_is_dual is set the target is replaced by its contragredient first.
 * Orthogonal targets are compared under the full signed permutation group.
 */
bool infchar_check(const DualPair& pair, const ZhelParam& source, const ZhelParam& target, bool target_is_dual);

/**
 * Dirac cohomology of the lift of a Dirac series member.
 *
 * Type II: 2^floor(n/2) V(dominant(2 lambda1) - rho) for the dualised lift.
 * Type I, O_{2m} -> Sp_{2n}: non-empty iff some Levi witness of p has a
 * D tail (a, b) with b = n - m + 1. Every other type I case is empty.
 * Throws DomainError when p is not in the Dirac series.
 */
std::optional<DiracCohomology> lift_dirac(const DualPair& pair, const ZhelParam& p);

}  // namespace thetadirac
