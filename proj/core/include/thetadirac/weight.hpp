#pragma once

#include "thetadirac/group_kind.hpp"
#include "thetadirac/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetadirac {

/**
 * An exact coordinate vector in the standard basis e_1..e_r.
 *
 * Houses infinitesimal characters (lambda), Zhelobenko data (mu, nu) and
 * the half-sums rho. Arithmetic requires equal length. The empty weight is
 * representable; it only arises as a concatenation unit.
 */
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rat> coords) : coords_(coords) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<Rat>(rank)); }

    std::size_t rank() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }

    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }

    std::span<const Rat> coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_integral() const;

    Weight operator-() const;
    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator*(const Rat& s, const Weight& w);
    friend Weight operator/(const Weight& w, const Rat& s);

    /// this . other (coordinates of `other` appended).
    Weight concat(const Weight& other) const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

    /// Comma separated, e.g. "3,1/2,-5/2".
    std::string to_string() const;

    /// Inverse of to_string; blanks around commas are ignored.
    static Weight parse(std::string_view text);

private:
    std::vector<Rat> coords_;
};

/// Throws DomainError unless w.rank() == kind.rank().
void require_rank(const GroupKind& kind, const Weight& w);

/// Half-sum of positive roots in standard coordinates.
Weight rho(const GroupKind& kind);

/// True iff w is fixed by no reflection of the Weyl group of `kind`.
bool is_regular(const GroupKind& kind, const Weight& w);

/// True iff w lies in the closed dominant chamber (D: last coordinate may be negative).
bool is_dominant(const GroupKind& kind, const Weight& w);

/// The unique dominant representative of the Weyl orbit of w.
Weight dominant_normalize(const GroupKind& kind, const Weight& w);

}  // namespace thetadirac
