#pragma once

#include "thetadirac/group_kind.hpp"
#include "thetadirac/weight.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace thetadirac {

/// Ranks above this are refused by the exhaustive enumerators.
inline constexpr int kDefaultEnumerationBound = 8;

/**
 * A signed permutation acting on standard coordinates.
 *
 * Coordinate i of g.w is signs[i] * w[permutation^{-1}(i)], i.e. the entry
 * at position j moves to position permutation[j]. Indices are 0-based.
 * Family A admits only +1 signs and family D only an even number of -1.
 */
struct WeylElement {
    std::vector<int> permutation;
    std::vector<int> signs;

    static WeylElement identity(int rank);

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// Throws DomainError if g is not an element of W(kind).
void validate(const GroupKind& kind, const WeylElement& g);

Weight apply(const GroupKind& kind, const WeylElement& g, const Weight& w);

/// |W(kind)|: r! for A, 2^r r! for B/C, 2^(r-1) r! for D.
std::uint64_t weyl_order(const GroupKind& kind);

/// Visits every element of W(kind) exactly once; the visitor may return false to stop early.
void for_each_weyl_element(const GroupKind& kind, const std::function<bool(const WeylElement&)>& visit,
                           int bound = kDefaultEnumerationBound);

std::vector<WeylElement> enumerate(const GroupKind& kind, int bound = kDefaultEnumerationBound);

using WeightPair = std::pair<Weight, Weight>;

/// Single-weight orbit equality, decided through dominant_normalize.
bool orbit_equivalent(const GroupKind& kind, const Weight& a, const Weight& b);

/**
 * Canonical representative of a pair of weights under the diagonal action
 * g.(x, y) = (g.x, g.y).
 *
 * The columns (x_i, y_i) are sign-normalised as a unit (B/C/D) and sorted.
 * For D the parity of the sign changes spent is kept unless a (0, 0) column
 * can absorb it.
 */
struct PairCanonicalForm {
    std::vector<std::pair<Rat, Rat>> columns;
    int parity = 0;

    friend bool operator==(const PairCanonicalForm&, const PairCanonicalForm&) = default;
};

/// Sign-normalises one column for the given family; returns true if it was negated.
bool canonicalize_column(Family family, std::pair<Rat, Rat>& column);

PairCanonicalForm pair_canonical_form(const GroupKind& kind, const WeightPair& p);

/// True iff a single Weyl element maps p.first to q.first and p.second to q.second.
bool pair_equivalent(const GroupKind& kind, const WeightPair& p, const WeightPair& q);

}  // namespace thetadirac
