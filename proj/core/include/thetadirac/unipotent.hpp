#pragma once

#include "thetadirac/group_kind.hpp"
#include "thetadirac/weight.hpp"
#include "thetadirac/zhel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetadirac {

enum class Parity { Even, Odd };

/**
 * Names one unipotent representation with nonzero Dirac cohomology.
 *
 *   A: partition {a, b} of the rank, a > b >= 0, a - b odd (so the rank is odd)
 *   B: 0 < a <= b, a + b = rank
 *   C: the oscillator pieces, parity even or odd
 *   D: 0 < a <= b, a + b = rank, parity even or odd
 */
struct UnipotentDescriptor {
    Family family = Family::A;
    int rank = 0;
    int a = 0;
    int b = 0;
    std::optional<Parity> parity;

    static UnipotentDescriptor type_a(int a, int b) { return {Family::A, a + b, a, b, std::nullopt}; }
    static UnipotentDescriptor type_b(int a, int b) { return {Family::B, a + b, a, b, std::nullopt}; }
    static UnipotentDescriptor type_c(int rank, Parity p) { return {Family::C, rank, 0, 0, p}; }
    static UnipotentDescriptor type_d(int a, int b, Parity p) { return {Family::D, a + b, a, b, p}; }

    GroupKind kind() const { return {family, rank}; }

    /// "A(2,1)", "C2:even", "D(1,1):odd".
    std::string to_string() const;

    friend bool operator==(const UnipotentDescriptor&, const UnipotentDescriptor&) = default;
};

/// Throws DomainError if d violates its family's shape rules.
void validate(const UnipotentDescriptor& d);

/// nu of the spherical GL_{a+b} unipotent: (a-1, a-3, .., b | b-1, .., -b+1 | -b, .., -a+1).
Weight gl_unipotent_nu(int a, int b);

/// The (mu, nu) pattern of d; orthogonal kinds carry epsilon = +1.
ZhelParam unipotent_param(const UnipotentDescriptor& d);

/// The descriptor whose pattern is equivalent to p, if any.
std::optional<UnipotentDescriptor> classify(const GroupKind& kind, const ZhelParam& p);

/// Every legal descriptor of the kind, each exactly once.
std::vector<UnipotentDescriptor> enumerate_family(const GroupKind& kind);

}  // namespace thetadirac
