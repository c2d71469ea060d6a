#include "thetadirac/weyl.hpp"

#include "thetadirac/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace thetadirac {

WeylElement WeylElement::identity(int rank) {
    WeylElement g;
    g.permutation.resize(rank);
    std::iota(g.permutation.begin(), g.permutation.end(), 0);
    g.signs.assign(rank, 1);
    return g;
}

void validate(const GroupKind& kind, const WeylElement& g) {
    const auto r = static_cast<std::size_t>(kind.rank());
    if (g.permutation.size() != r || g.signs.size() != r) {
        throw DomainError("Weyl element has the wrong rank for " + kind.name());
    }
    std::vector<bool> hit(r, false);
    for (int p : g.permutation) {
        if (p < 0 || static_cast<std::size_t>(p) >= r || hit[p]) {
            throw DomainError("Weyl element permutation is not a bijection");
        }
        hit[p] = true;
    }
    int negatives = 0;
    for (int s : g.signs) {
        if (s != 1 && s != -1) throw DomainError("Weyl element signs must be +1 or -1");
        negatives += s == -1;
    }
    if (kind.family() == Family::A && negatives != 0) {
        throw DomainError("sign changes are not in the Weyl group of type A");
    }
    if (kind.family() == Family::D && negatives % 2 != 0) {
        throw DomainError("type D Weyl elements need an even number of sign changes");
    }
}

Weight apply(const GroupKind& kind, const WeylElement& g, const Weight& w) {
    require_rank(kind, w);
    validate(kind, g);
    Weight out = Weight::zero(w.rank());
    for (std::size_t j = 0; j < w.rank(); ++j) {
        const int target = g.permutation[j];
        out[target] = g.signs[target] == 1 ? w[j] : -w[j];
    }
    return out;
}

std::uint64_t weyl_order(const GroupKind& kind) {
    std::uint64_t order = 1;
    for (int i = 2; i <= kind.rank(); ++i) order *= static_cast<std::uint64_t>(i);
    switch (kind.family()) {
    case Family::A: return order;
    case Family::B:
    case Family::C: return order << kind.rank();
    case Family::D: return order << (kind.rank() - 1);
    }
    return order;
}

void for_each_weyl_element(const GroupKind& kind, const std::function<bool(const WeylElement&)>& visit,
                           int bound) {
    const int r = kind.rank();
    if (r > bound) {
        throw DomainError("refusing to enumerate W(" + kind.name() + "): rank exceeds bound " +
                          std::to_string(bound));
    }
    const std::uint32_t masks = kind.family() == Family::A ? 1u : (1u << r);
    WeylElement g = WeylElement::identity(r);
    do {
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            if (kind.family() == Family::D && std::popcount(mask) % 2 != 0) continue;
            for (int i = 0; i < r; ++i) g.signs[i] = (mask >> i) & 1u ? -1 : 1;
            if (!visit(g)) return;
        }
    } while (std::next_permutation(g.permutation.begin(), g.permutation.end()));
}

std::vector<WeylElement> enumerate(const GroupKind& kind, int bound) {
    std::vector<WeylElement> out;
    if (kind.rank() <= bound) out.reserve(weyl_order(kind));
    for_each_weyl_element(kind, [&](const WeylElement& g) {
        out.push_back(g);
        return true;
    }, bound);
    return out;
}

bool orbit_equivalent(const GroupKind& kind, const Weight& a, const Weight& b) {
    return dominant_normalize(kind, a) == dominant_normalize(kind, b);
}

bool canonicalize_column(Family family, std::pair<Rat, Rat>& column) {
    if (family == Family::A) return false;
    const int lead = column.first.is_zero() ? column.second.sign() : column.first.sign();
    if (lead >= 0) return false;
    column.first = -column.first;
    column.second = -column.second;
    return true;
}

PairCanonicalForm pair_canonical_form(const GroupKind& kind, const WeightPair& p) {
    require_rank(kind, p.first);
    require_rank(kind, p.second);
    PairCanonicalForm form;
    bool absorbs = false;
    for (std::size_t i = 0; i < p.first.rank(); ++i) {
        std::pair<Rat, Rat> column{p.first[i], p.second[i]};
        form.parity ^= canonicalize_column(kind.family(), column) ? 1 : 0;
        absorbs = absorbs || (column.first.is_zero() && column.second.is_zero());
        form.columns.push_back(column);
    }
    if (kind.family() != Family::D || absorbs) form.parity = 0;
    std::sort(form.columns.begin(), form.columns.end());
    return form;
}

bool pair_equivalent(const GroupKind& kind, const WeightPair& p, const WeightPair& q) {
    return pair_canonical_form(kind, p) == pair_canonical_form(kind, q);
}

}  // namespace thetadirac
