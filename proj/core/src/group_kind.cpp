#include "thetadirac/group_kind.hpp"

#include "thetadirac/error.hpp"

#include <charconv>

namespace thetadirac {

char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

GroupKind::GroupKind(Family family, int rank) : family_(family), rank_(rank) {
    if (rank < 1) throw DomainError("group rank must be positive, got " + std::to_string(rank));
}

GroupKind GroupKind::orthogonal(int dimension) {
    if (dimension < 2) throw DomainError("O_m needs m >= 2, got " + std::to_string(dimension));
    return {dimension % 2 == 1 ? Family::B : Family::D, dimension / 2};
}

GroupKind GroupKind::orthogonal(int rank, int tau) {
    if (tau != 0 && tau != 1) throw DomainError("tau must be 0 or 1");
    return {tau == 1 ? Family::B : Family::D, rank};
}

std::optional<int> GroupKind::tau() const {
    if (family_ == Family::B) return 1;
    if (family_ == Family::D) return 0;
    return std::nullopt;
}

std::string GroupKind::name() const {
    return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

std::string GroupKind::group_name() const {
    switch (family_) {
    case Family::A: return "GL" + std::to_string(rank_);
    case Family::B: return "O" + std::to_string(2 * rank_ + 1);
    case Family::C: return "Sp" + std::to_string(2 * rank_);
    case Family::D: return "O" + std::to_string(2 * rank_);
    }
    return {};
}

GroupKind GroupKind::parse(std::string_view text) {
    auto number = [&](std::string_view digits) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed group '" + std::string(text) + "'");
        }
        return v;
    };
    if (text.starts_with("GL")) return gl(number(text.substr(2)));
    if (text.starts_with("Sp")) {
        int dim = number(text.substr(2));
        if (dim % 2 != 0) throw ParseError("Sp needs an even dimension: '" + std::string(text) + "'");
        return sp(dim / 2);
    }
    if (text.starts_with("O")) return orthogonal(number(text.substr(1)));
    if (text.empty()) throw ParseError("empty group name");
    int rank = number(text.substr(1));
    switch (text.front()) {
    case 'A': return {Family::A, rank};
    case 'B': return {Family::B, rank};
    case 'C': return {Family::C, rank};
    case 'D': return {Family::D, rank};
    default: throw ParseError("unknown group family in '" + std::string(text) + "'");
    }
}

}  // namespace thetadirac
