#include "thetadirac/dirac.hpp"

#include "columns.hpp"

#include "thetadirac/error.hpp"
#include "thetadirac/weyl.hpp"

#include <algorithm>
#include <set>

namespace thetadirac {

namespace {

using detail::Column;
using detail::make_piece;
using detail::Multiset;
using detail::Piece;
using detail::remove_all;

void require_same_kind(const GroupKind& kind, const ZhelParam& p) {
    if (p.kind() != kind) throw DomainError("parameter of " + p.kind().name() + " used as " + kind.name());
}

struct BlockCandidate {
    GLBlock block;
    Piece piece;
};

class Search {
public:
    Search(const GroupKind& kind, bool track_parity, const std::function<bool(const LeviDecomposition&)>& visit)
        : kind_(kind), track_parity_(track_parity), visit_(visit) {}

    // Returns false once the visitor asked to stop.
    bool run(const Multiset& all, int parity) {
        if (!blocks(all, track_parity_ ? parity : 0)) return false;
        if (kind_.family() == Family::A) return true;
        for (int t = 1; t <= kind_.rank(); ++t) {
            for (const auto& d : enumerate_family(GroupKind(kind_.family(), t))) {
                const ZhelParam tp = unipotent_param(d);
                Piece piece = make_piece(kind_.family(), tp.mu(), tp.nu());
                auto rest = remove_all(all, piece.columns);
                if (!rest) continue;
                tail_ = d;
                const bool go_on = blocks(*rest, track_parity_ ? (parity ^ piece.parity) : 0);
                tail_.reset();
                if (!go_on) return false;
            }
        }
        return true;
    }

private:
    // Covers ms with GL blocks whose negation count has the given parity.
    bool blocks(const Multiset& ms, int parity) {
        if (ms.empty()) {
            if (parity != 0) return true;
            return emit();
        }
        const auto key = std::make_pair(ms, parity);
        if (dead_.contains(key)) return true;

        const Column head = ms.front();
        bool found = false;
        bool go_on = true;
        for (const auto& cand : candidates(head, static_cast<int>(ms.size()))) {
            auto rest = remove_all(ms, cand.piece.columns);
            if (!rest) continue;
            const std::size_t before = emitted_;
            chosen_.push_back(cand.block);
            go_on = blocks(*rest, track_parity_ ? (parity ^ cand.piece.parity) : 0);
            chosen_.pop_back();
            if (emitted_ != before) found = true;
            if (!go_on) break;
        }
        if (go_on && !found) dead_.insert(key);
        return go_on;
    }

    // Every block containing `head`, of size at most `limit`.
    std::vector<BlockCandidate> candidates(const Column& head, int limit) {
        std::vector<BlockCandidate> out;
        std::vector<Rat> chars{head.first};
        if (kind_.family() != Family::A && !head.first.is_zero()) chars.push_back(-head.first);
        for (int size = 1; size <= limit; size += 2) {
            for (const auto& d : enumerate_family(GroupKind::gl(size))) {
                const Weight nu = gl_unipotent_nu(d.a, d.b);
                for (const Rat& c : chars) {
                    Weight mu(std::vector<Rat>(size, c));
                    Piece piece = make_piece(kind_.family(), mu, nu);
                    if (!std::binary_search(piece.columns.begin(), piece.columns.end(), head)) continue;
                    out.push_back({GLBlock{size, d, c.num()}, std::move(piece)});
                }
            }
        }
        return out;
    }

    bool emit() {
        ++emitted_;
        LeviDecomposition d{chosen_, tail_, kind_};
        return visit_(d);
    }

    GroupKind kind_;
    bool track_parity_;
    const std::function<bool(const LeviDecomposition&)>& visit_;
    std::vector<GLBlock> chosen_;
    std::optional<UnipotentDescriptor> tail_;
    std::set<std::pair<Multiset, int>> dead_;
    std::size_t emitted_ = 0;
};

std::string tail_string(const std::optional<UnipotentDescriptor>& t) {
    if (!t) return "none";
    const std::string f(1, family_letter(t->family));
    const std::string par = t->parity == Parity::Odd ? "odd" : "even";
    switch (t->family) {
    case Family::C: return "(" + f + "," + par + ")";
    case Family::D: return "(" + f + "," + std::to_string(t->a) + "," + std::to_string(t->b) + "," + par + ")";
    default: return "(" + f + "," + std::to_string(t->a) + "," + std::to_string(t->b) + ")";
    }
}

}  // namespace

GLBlock make_gl_block(int a, int b, const Rat& character) {
    const auto d = UnipotentDescriptor::type_a(a, b);
    validate(d);
    if (!character.is_integer()) {
        throw DomainError("unitary character must be an integral power of det, got " + character.to_string());
    }
    return GLBlock{a + b, d, character.num()};
}

std::string LeviDecomposition::to_string() const {
    std::string s = "blocks=[";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        if (i) s += ",";
        s += "(" + std::to_string(b.size) + "," + std::to_string(b.descriptor.a) + "," +
             std::to_string(b.descriptor.b) + "," + std::to_string(b.character) + ")";
    }
    return s + "] tail=" + tail_string(tail);
}

ZhelParam assemble(const LeviDecomposition& d) {
    Weight mu;
    Weight nu;
    for (const auto& b : d.blocks) {
        validate(b.descriptor);
        if (b.descriptor.rank != b.size) throw DomainError("block size does not match its descriptor");
        mu = mu.concat(Weight(std::vector<Rat>(b.size, Rat(b.character))));
        nu = nu.concat(gl_unipotent_nu(b.descriptor.a, b.descriptor.b));
    }
    if (d.tail) {
        if (d.ambient.family() == Family::A || d.tail->family != d.ambient.family()) {
            throw DomainError("tail family does not match " + d.ambient.name());
        }
        const ZhelParam tp = unipotent_param(*d.tail);
        mu = mu.concat(tp.mu());
        nu = nu.concat(tp.nu());
    }
    if (static_cast<int>(mu.rank()) != d.ambient.rank()) {
        throw DomainError("Levi factors have total rank " + std::to_string(mu.rank()) + ", expected " +
                          std::to_string(d.ambient.rank()));
    }
    const std::optional<int> eps = d.ambient.is_orthogonal() ? std::optional<int>(1) : std::nullopt;
    return ZhelParam::from_mu_nu(d.ambient, mu, nu, eps);
}

void for_each_decomposition(const GroupKind& kind, const ZhelParam& p,
                            const std::function<bool(const LeviDecomposition&)>& visit) {
    require_same_kind(kind, p);
    if (!is_regular(kind, p.lambda1()) || !is_regular(kind, p.lambda2())) return;

    const Piece whole = make_piece(kind.family(), p.mu(), p.nu());
    const bool absorbing =
        std::find(whole.columns.begin(), whole.columns.end(), Column{Rat(0), Rat(0)}) != whole.columns.end();
    const bool track_parity = kind.family() == Family::D && !absorbing;

    // Every witness is re-checked against the full pair equivalence before it is reported.
    const std::function<bool(const LeviDecomposition&)> checked = [&](const LeviDecomposition& d) {
        const ZhelParam q = assemble(d);
        if (!pair_equivalent(kind, q.lambdas(), p.lambdas())) return true;
        return visit(d);
    };
    Search(kind, track_parity, checked).run(whole.columns, whole.parity);
}

std::optional<LeviDecomposition> decompose(const GroupKind& kind, const ZhelParam& p) {
    std::optional<LeviDecomposition> found;
    for_each_decomposition(kind, p, [&](const LeviDecomposition& d) {
        found = d;
        return false;
    });
    return found;
}

std::optional<DiracCohomology> dirac_cohomology(const GroupKind& kind, const ZhelParam& p) {
    if (!decompose(kind, p)) return std::nullopt;
    DiracCohomology h;
    h.multiplicity = std::uint64_t{1} << (kind.rank() / 2);
    h.highest_weight = dominant_normalize(kind, Rat(2) * p.lambda1()) - rho(kind);
    return h;
}

}  // namespace thetadirac
