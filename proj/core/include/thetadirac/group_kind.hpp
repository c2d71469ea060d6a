#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace thetadirac {

enum class Family { A, B, C, D };

char family_letter(Family f);

/**
 * A classical complex group, identified by its root-system family and rank.
 *
 *   A_r  -> GL_r
 *   B_r  -> O_{2r+1}   (tau = 1)
 *   C_r  -> Sp_{2r}
 *   D_r  -> O_{2r}     (tau = 0)
 *
 * Orthogonal groups are modelled by (rank, tau) rather than by the dimension
 * of the form; tau is derived from the family and is absent for A and C.
 */
class GroupKind {
public:
    GroupKind(Family family, int rank);

    static GroupKind gl(int n) { return {Family::A, n}; }
    static GroupKind sp(int rank) { return {Family::C, rank}; }
    /// O_m for the given form dimension m >= 2.
    static GroupKind orthogonal(int dimension);
    static GroupKind orthogonal(int rank, int tau);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::optional<int> tau() const;
    bool is_orthogonal() const { return family_ == Family::B || family_ == Family::D; }

    /// "C2", "D4", ...
    std::string name() const;
    /// "Sp4", "O8", "GL3", ...
    std::string group_name() const;

    /// Accepts A3/B2/C2/D4 as well as GL3, Sp4 and O5 (the latter resolved to B/D by parity).
    static GroupKind parse(std::string_view text);

    friend bool operator==(const GroupKind&, const GroupKind&) = default;

private:
    Family family_;
    int rank_;
};

}  // namespace thetadirac
