#include "thetadirac/theta.hpp"

#include "columns.hpp"

#include "thetadirac/error.hpp"
#include "thetadirac/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace thetadirac {

namespace {

using detail::Multiset;

void require_kind(const GroupKind& expected, const ZhelParam& p, const char* role) {
    if (p.kind() != expected) {
        throw DomainError(std::string(role) + " parameter lives on " + p.kind().group_name() + ", expected " +
                          expected.group_name());
    }
}

// first, first - 2, ..., down to last inclusive; empty when first < last.
std::vector<Rat> run_down(int first, int last) {
    std::vector<Rat> out;
    for (int v = first; v >= last; v -= 2) out.emplace_back(v);
    return out;
}

void append(std::vector<Rat>& out, const std::vector<Rat>& more) {
    out.insert(out.end(), more.begin(), more.end());
}

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed pair '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

DualPair DualPair::type_ii(int m, int n) {
    if (m < 1 || m > n) {
        throw DomainError("type II pair needs 1 <= m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    return DualPair(PairType::II, false, m, n, 0);
}

DualPair DualPair::orthogonal_to_symplectic(int orthogonal_rank, int tau, int symplectic_rank) {
    if (orthogonal_rank < 1 || symplectic_rank < 1) throw DomainError("type I ranks must be positive");
    if (tau != 0 && tau != 1) throw DomainError("tau must be 0 or 1");
    return DualPair(PairType::I, true, orthogonal_rank, symplectic_rank, tau);
}

DualPair DualPair::symplectic_to_orthogonal(int symplectic_rank, int orthogonal_rank, int tau) {
    if (orthogonal_rank < 1 || symplectic_rank < 1) throw DomainError("type I ranks must be positive");
    if (tau != 0 && tau != 1) throw DomainError("tau must be 0 or 1");
    return DualPair(PairType::I, false, symplectic_rank, orthogonal_rank, tau);
}

GroupKind DualPair::source_kind() const {
    if (type_ == PairType::II) return GroupKind::gl(source_rank_);
    return source_orthogonal_ ? GroupKind::orthogonal(source_rank_, tau_) : GroupKind::sp(source_rank_);
}

GroupKind DualPair::target_kind() const {
    if (type_ == PairType::II) return GroupKind::gl(target_rank_);
    return source_orthogonal_ ? GroupKind::sp(target_rank_) : GroupKind::orthogonal(target_rank_, tau_);
}

std::string DualPair::to_string() const {
    if (type_ == PairType::II) return "II:" + std::to_string(source_rank_) + "," + std::to_string(target_rank_);
    return "I:" + source_kind().group_name() + "," + target_kind().group_name();
}

DualPair DualPair::parse(std::string_view text) {
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon) {
        throw ParseError("pair must look like II:m,n or I:O<d>,Sp<2n> or I:Sp<2m>,O<d>, got '" + std::string(text) + "'");
    }
    const auto type = text.substr(0, colon);
    const auto left = text.substr(colon + 1, comma - colon - 1);
    const auto right = text.substr(comma + 1);
    if (type == "II") return type_ii(parse_int(left, text), parse_int(right, text));
    if (type != "I") throw ParseError("unknown pair type in '" + std::string(text) + "'");
    const GroupKind a = GroupKind::parse(left);
    const GroupKind b = GroupKind::parse(right);
    if (a.is_orthogonal() && b.family() == Family::C) {
        return orthogonal_to_symplectic(a.rank(), *a.tau(), b.rank());
    }
    if (a.family() == Family::C && b.is_orthogonal()) {
        return symplectic_to_orthogonal(a.rank(), b.rank(), *b.tau());
    }
    throw ParseError("type I pair needs one orthogonal and one symplectic group: '" + std::string(text) + "'");
}

LiftOutcome lift_typeII(int m, int n, const ZhelParam& p) {
    const DualPair pair = DualPair::type_ii(m, n);
    require_kind(pair.source_kind(), p, "source");

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    const Weight mu1 = p.mu();
    const Weight nu1 = p.nu();
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return mu1[i] > mu1[j]; });
    const int l = static_cast<int>(std::count_if(mu1.begin(), mu1.end(), [](const Rat& x) { return x.sign() < 0; }));

    std::vector<Rat> mu2;
    std::vector<Rat> nu2;
    for (int i = 0; i < m - l; ++i) {
        mu2.push_back(mu1[order[i]]);
        nu2.push_back(nu1[order[i]]);
    }
    for (int i = 0; i < n - m; ++i) mu2.emplace_back(0);
    append(nu2, run_down(n - m - 1, -(n - m) + 1));
    for (int i = m - l; i < m; ++i) {
        mu2.push_back(mu1[order[i]]);
        nu2.push_back(nu1[order[i]]);
    }
    return {LiftStatus::Lifted, ZhelParam::from_mu_nu(pair.target_kind(), Weight(mu2), Weight(nu2)), true};
}

LiftOutcome lift_typeI(const DualPair& pair, const ZhelParam& p) {
    if (!pair.source_is_orthogonal()) throw DomainError("forward type I lift needs an orthogonal source");
    require_kind(pair.source_kind(), p, "source");
    if (!p.epsilon()) throw DomainError("orthogonal source parameter carries no epsilon");
    const int eps = *p.epsilon();
    const int m = pair.source_rank();
    const int n = pair.target_rank();
    const int tau = pair.tau();

    // O is disconnected, so any signed permutation may be used to reach mu >= 0, sorted descending.
    std::vector<std::pair<Rat, Rat>> cols;
    for (int i = 0; i < m; ++i) {
        Rat a = p.mu()[i];
        Rat b = p.nu()[i];
        if (a.sign() < 0) {
            a = -a;
            b = -b;
        }
        cols.emplace_back(a, b);
    }
    std::stable_sort(cols.begin(), cols.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    const int k = static_cast<int>(std::count_if(cols.begin(), cols.end(), [](const auto& c) { return c.first.sign() > 0; }));

    // Largest q such that tau, 2 + tau, ..., 2q - 2 + tau all occur among the free |nu|.
    std::vector<bool> used(m, false);
    int q = 0;
    while (q < m - k) {
        const Rat want(2 * q + tau);
        int hit = -1;
        for (int i = k; i < m; ++i) {
            if (!used[i] && cols[i].second.abs() == want) {
                hit = i;
                break;
            }
        }
        if (hit < 0) break;
        used[hit] = true;
        ++q;
    }

    if (2 * n < 2 * m - 2 * eps * q + (1 - eps) * tau) return {LiftStatus::NotInCorrespondence, std::nullopt, false};

    const int ones = (1 - eps) * (2 * q + tau) / 2;
    std::vector<Rat> mu2;
    std::vector<Rat> nu2;
    for (int i = 0; i < k; ++i) {
        mu2.push_back(cols[i].first);
        nu2.push_back(cols[i].second);
    }
    for (int i = 0; i < ones; ++i) mu2.emplace_back(1);
    if (ones > 0) append(nu2, run_down(2 * q - 1 + tau, 2 * eps * q + 1 + eps * tau));
    for (int i = k; i < m; ++i) {
        if (!used[i]) nu2.push_back(cols[i].second);
    }
    append(nu2, run_down(2 * n - 2 * m - tau, -eps * (2 * q + tau) + 2));
    while (static_cast<int>(mu2.size()) < n) mu2.emplace_back(0);
    if (static_cast<int>(nu2.size()) != n) {
        throw DomainError("lifted nu has length " + std::to_string(nu2.size()) + ", expected " + std::to_string(n));
    }
    return {LiftStatus::Lifted, ZhelParam::from_mu_nu(pair.target_kind(), Weight(mu2), Weight(nu2)), false};
}

LiftOutcome lift_symplectic_source(const DualPair& pair, const ZhelParam& p) {
    if (pair.type() != PairType::I || pair.source_is_orthogonal()) {
        throw DomainError("symplectic-source lift needs a pair (Sp, O)");
    }
    require_kind(pair.source_kind(), p, "source");
    const int sp_rank = pair.source_rank();
    const int o_rank = pair.target_rank();
    const int tau = pair.tau();
    const DualPair forward = DualPair::orthogonal_to_symplectic(o_rank, tau, sp_rank);
    const Multiset all = detail::make_piece(Family::C, p.mu(), p.nu()).columns;

    for (int eps : {1, -1}) {
        for (int q = 0; q <= o_rank; ++q) {
            // The columns the forward lift appends after the source data.
            std::vector<Rat> rm_nu = run_down(2 * sp_rank - 2 * o_rank - tau, -eps * (2 * q + tau) + 2);
            std::vector<Rat> rm_mu_coords(rm_nu.size(), Rat(0));
            if (eps < 0) {
                auto chain = run_down(2 * q - 1 + tau, -2 * q + 1 - tau);
                rm_mu_coords.insert(rm_mu_coords.end(), chain.size(), Rat(1));
                append(rm_nu, chain);
            }
            const auto removed = detail::make_piece(Family::C, Weight(rm_mu_coords), Weight(rm_nu)).columns;
            const auto rest = detail::remove_all(all, removed);
            if (!rest || static_cast<int>(rest->size()) != o_rank - q) continue;

            std::vector<Rat> mu1;
            std::vector<Rat> nu1;
            std::vector<Rat> free_nu;
            for (const auto& [a, b] : *rest) {
                if (a.is_zero()) {
                    free_nu.push_back(b);
                } else {
                    mu1.push_back(a);
                    nu1.push_back(b);
                }
            }
            append(nu1, free_nu);
            for (int j = q - 1; j >= 0; --j) nu1.emplace_back(2 * j + tau);
            while (static_cast<int>(mu1.size()) < o_rank) mu1.emplace_back(0);

            const ZhelParam source = ZhelParam::from_mu_nu(pair.target_kind(), Weight(mu1), Weight(nu1), eps);
            const LiftOutcome image = lift_typeI(forward, source);
            if (image.lifted() && pair_equivalent(p.kind(), image.param->lambdas(), p.lambdas())) {
                return {LiftStatus::Lifted, source, false};
            }
        }
    }
    return {LiftStatus::NotInCorrespondence, std::nullopt, false};
}

LiftOutcome lift(const DualPair& pair, const ZhelParam& p) {
    if (pair.type() == PairType::II) return lift_typeII(pair.source_rank(), pair.target_rank(), p);
    if (pair.source_is_orthogonal()) return lift_typeI(pair, p);
    return lift_symplectic_source(pair, p);
}

Weight lambda_tilde(const DualPair& pair) {
    const int m = pair.source_rank();
    const int n = pair.target_rank();
    if (n < m) {
        throw DomainError("pair " + pair.to_string() + " has target rank below source rank");
    }
    // Length n - m, step -1, ending at `last`.
    Rat last;
    if (pair.type() == PairType::II) {
        last = Rat(-(n - m - 1), 2);
    } else if (pair.source_is_orthogonal()) {
        last = Rat(2 - pair.tau(), 2);
    } else {
        last = Rat(pair.tau(), 2);
    }
    std::vector<Rat> out;
    for (int i = n - m - 1; i >= 0; --i) out.push_back(last + Rat(i));
    return Weight(std::move(out));
}

bool infchar_check(const DualPair& pair, const ZhelParam& source, const ZhelParam& target, bool target_is_dual) {
    require_kind(pair.source_kind(), source, "source");
    require_kind(pair.target_kind(), target, "target");
    const ZhelParam t = target_is_dual ? contragredient(target) : target;
    const Weight lt = lambda_tilde(pair);
    const WeightPair expected{source.lambda1().concat(lt), source.lambda2().concat(lt)};
    const GroupKind tk = pair.target_kind();
    const GroupKind compare_in = tk.is_orthogonal() ? GroupKind(Family::B, tk.rank()) : tk;
    return pair_equivalent(compare_in, expected, t.lambdas());
}

std::optional<DiracCohomology> lift_dirac(const DualPair& pair, const ZhelParam& p) {
    const GroupKind src = pair.source_kind();
    require_kind(src, p, "source");
    if (!decompose(src, p)) {
        throw DomainError("source " + p.to_string() + " is not in the Dirac series");
    }
    const GroupKind tgt = pair.target_kind();
    const auto cohomology_of = [&](const ZhelParam& q) {
        return DiracCohomology{std::uint64_t{1} << (tgt.rank() / 2),
                               dominant_normalize(tgt, Rat(2) * q.lambda1()) - rho(tgt)};
    };

    if (pair.type() == PairType::II) {
        const LiftOutcome out = lift_typeII(pair.source_rank(), pair.target_rank(), p);
        return cohomology_of(contragredient(*out.param));
    }
    if (!pair.source_is_orthogonal() || pair.tau() != 0) return std::nullopt;

    const int want_b = pair.target_rank() - pair.source_rank() + 1;
    bool hit = false;
    for_each_decomposition(src, p, [&](const LeviDecomposition& d) {
        hit = d.tail && d.tail->family == Family::D && d.tail->b == want_b;
        return !hit;
    });
    if (!hit) return std::nullopt;
    const LiftOutcome out = lift_typeI(pair, p);
    if (!out.lifted()) return std::nullopt;
    return cohomology_of(*out.param);
}

}  // namespace thetadirac
