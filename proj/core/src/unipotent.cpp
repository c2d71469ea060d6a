#include "thetadirac/unipotent.hpp"

#include "thetadirac/error.hpp"

namespace thetadirac {

namespace {

// Arithmetic progression from `first` down to `last` (inclusive) in steps of `step`.
void append_run(std::vector<Rat>& out, int first, int last, int step) {
    for (int v = first; v >= last; v -= step) out.emplace_back(v);
}

const char* parity_name(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

}  // namespace

std::string UnipotentDescriptor::to_string() const {
    std::string s(1, family_letter(family));
    switch (family) {
    case Family::A:
    case Family::B: return s + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Family::C: return s + std::to_string(rank) + ":" + parity_name(parity.value_or(Parity::Even));
    case Family::D:
        return s + "(" + std::to_string(a) + "," + std::to_string(b) + "):" + parity_name(parity.value_or(Parity::Even));
    }
    return s;
}

void validate(const UnipotentDescriptor& d) {
    auto fail = [&](const std::string& why) { throw DomainError("invalid unipotent descriptor " + d.to_string() + ": " + why); };
    if (d.rank < 1) fail("rank must be positive");
    switch (d.family) {
    case Family::A:
        if (d.parity) fail("type A takes no parity");
        if (d.a + d.b != d.rank || d.b < 0 || d.a <= d.b) fail("need a > b >= 0 with a + b = rank");
        if ((d.a - d.b) % 2 == 0) fail("need a = b + 1 mod 2");
        break;
    case Family::B:
        if (d.parity) fail("type B takes no parity");
        if (d.a + d.b != d.rank || d.a <= 0 || d.a > d.b) fail("need 0 < a <= b with a + b = rank");
        break;
    case Family::C:
        if (!d.parity) fail("type C needs a parity");
        if (d.a != 0 || d.b != 0) fail("type C takes no partition");
        break;
    case Family::D:
        if (!d.parity) fail("type D needs a parity");
        if (d.a + d.b != d.rank || d.a <= 0 || d.a > d.b) fail("need 0 < a <= b with a + b = rank");
        break;
    }
}

Weight gl_unipotent_nu(int a, int b) {
    std::vector<Rat> nu;
    if (b == 0) {
        append_run(nu, a - 1, -a + 1, 2);
    } else {
        append_run(nu, a - 1, b, 2);
        append_run(nu, b - 1, -b + 1, 1);
        append_run(nu, -b, -a + 1, 2);
    }
    return Weight(std::move(nu));
}

ZhelParam unipotent_param(const UnipotentDescriptor& d) {
    validate(d);
    const GroupKind kind = d.kind();
    Weight mu = Weight::zero(d.rank);
    std::vector<Rat> nu;
    switch (d.family) {
    case Family::A:
        return ZhelParam::from_mu_nu(kind, mu, gl_unipotent_nu(d.a, d.b));
    case Family::B:
        for (int v = -2 * d.b + 1; v <= -1; v += 2) nu.emplace_back(v);
        for (int v = -2 * d.a; v <= -2; v += 2) nu.emplace_back(v);
        return ZhelParam::from_mu_nu(kind, mu, Weight(std::move(nu)), 1);
    case Family::C:
        append_run(nu, 2 * d.rank - 1, 1, 2);
        if (d.parity == Parity::Odd) mu[d.rank - 1] = 1;
        return ZhelParam::from_mu_nu(kind, mu, Weight(std::move(nu)));
    case Family::D:
        append_run(nu, 2 * d.a - 1, 1, 2);
        append_run(nu, 2 * d.b - 2, 0, 2);
        if (d.parity == Parity::Odd) mu[d.rank - 1] = 1;
        return ZhelParam::from_mu_nu(kind, mu, Weight(std::move(nu)), 1);
    }
    throw DomainError("unreachable family");
}

std::optional<UnipotentDescriptor> classify(const GroupKind& kind, const ZhelParam& p) {
    if (p.kind() != kind) throw DomainError("parameter of " + p.kind().name() + " classified as " + kind.name());
    for (const auto& d : enumerate_family(kind)) {
        if (equivalent(unipotent_param(d), p)) return d;
    }
    return std::nullopt;
}

std::vector<UnipotentDescriptor> enumerate_family(const GroupKind& kind) {
    const int r = kind.rank();
    std::vector<UnipotentDescriptor> out;
    switch (kind.family()) {
    case Family::A:
        for (int a = r; 2 * a > r; --a) {
            if ((2 * a - r) % 2 == 1) out.push_back(UnipotentDescriptor::type_a(a, r - a));
        }
        break;
    case Family::B:
        for (int a = 1; 2 * a <= r; ++a) out.push_back(UnipotentDescriptor::type_b(a, r - a));
        break;
    case Family::C:
        out.push_back(UnipotentDescriptor::type_c(r, Parity::Even));
        out.push_back(UnipotentDescriptor::type_c(r, Parity::Odd));
        break;
    case Family::D:
        for (int a = 1; 2 * a <= r; ++a) {
            out.push_back(UnipotentDescriptor::type_d(a, r - a, Parity::Even));
            out.push_back(UnipotentDescriptor::type_d(a, r - a, Parity::Odd));
        }
        break;
    }
    return out;
}

}  // namespace thetadirac
