#pragma once

#include "thetadirac/group_kind.hpp"
#include "thetadirac/unipotent.hpp"
#include "thetadirac/weight.hpp"
#include "thetadirac/zhel.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace thetadirac {

/// A GL_size factor of the Levi: an A-family unipotent twisted by det^character.
struct GLBlock {
    int size = 1;
    UnipotentDescriptor descriptor = UnipotentDescriptor::type_a(1, 0);
    std::int64_t character = 0;

    friend bool operator==(const GLBlock&, const GLBlock&) = default;
};

/// Throws DomainError for an illegal descriptor or a non-integral character.
GLBlock make_gl_block(int a, int b, const Rat& character);

struct LeviDecomposition {
    std::vector<GLBlock> blocks;
    std::optional<UnipotentDescriptor> tail;
    GroupKind ambient = GroupKind::gl(1);

    /// "blocks=[(3,2,1,0),(1,1,0,-2)] tail=(D,1,1,even)"; tail=none when absent.
    std::string to_string() const;

    friend bool operator==(const LeviDecomposition&, const LeviDecomposition&) = default;
};

/**
 * The parameter induced from d: block columns (c, nu_j) followed by the
 * tail's pattern. Throws DomainError if the ranks do not add up.
 */
ZhelParam assemble(const LeviDecomposition& d);

struct DiracCohomology {
    std::uint64_t multiplicity = 1;
    Weight highest_weight;

    friend bool operator==(const DiracCohomology&, const DiracCohomology&) = default;
};

/**
 * Visits every Levi decomposition of p, up to the order of the blocks.
 * Nothing is visited unless lambda1 and lambda2 are both regular. The
 * visitor may return false to stop. Epsilon is not consulted.
 */
void for_each_decomposition(const GroupKind& kind, const ZhelParam& p,
                            const std::function<bool(const LeviDecomposition&)>& visit);

/// Some witness that p lies in the Dirac series, if one exists.
std::optional<LeviDecomposition> decompose(const GroupKind& kind, const ZhelParam& p);

/// 2^floor(rank/2) copies of V(dominant(2 lambda1) - rho), for Dirac series members only.
std::optional<DiracCohomology> dirac_cohomology(const GroupKind& kind, const ZhelParam& p);

}  // namespace thetadirac
