#pragma once

// Multisets of (mu_i, nu_i) columns, shared by the Levi search and the parameter lifts.

#include "thetadirac/weight.hpp"
#include "thetadirac/weyl.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace thetadirac::detail {

using Column = std::pair<Rat, Rat>;
using Multiset = std::vector<Column>;  // kept sorted

struct Piece {
    Multiset columns;
    int parity = 0;  // negations spent while canonicalising, mod 2
};

inline Piece make_piece(Family family, const Weight& mu, const Weight& nu) {
    Piece piece;
    for (std::size_t i = 0; i < mu.rank(); ++i) {
        Column c{mu[i], nu[i]};
        if (canonicalize_column(family, c)) piece.parity ^= 1;
        piece.columns.push_back(c);
    }
    std::sort(piece.columns.begin(), piece.columns.end());
    return piece;
}

/// ms minus sub, or nullopt if sub is not contained in ms. Both sorted.
inline std::optional<Multiset> remove_all(const Multiset& ms, const Multiset& sub) {
    Multiset rest;
    rest.reserve(ms.size());
    std::size_t j = 0;
    for (const auto& c : ms) {
        if (j < sub.size() && c == sub[j]) {
            ++j;
        } else {
            if (j < sub.size() && sub[j] < c) return std::nullopt;
            rest.push_back(c);
        }
    }
    if (j != sub.size()) return std::nullopt;
    return rest;
}

}  // namespace thetadirac::detail
