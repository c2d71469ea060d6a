#include "thetadirac/weight.hpp"

#include "thetadirac/error.hpp"

#include <algorithm>
#include <set>

namespace thetadirac {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) {
        throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
    }
}

}  // namespace

bool Weight::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r.is_integer(); });
}

Weight Weight::operator-() const {
    Weight out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Weight operator+(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    Weight out = a;
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] += b[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    Weight out = a;
    for (std::size_t i = 0; i < a.rank(); ++i) out[i] -= b[i];
    return out;
}

Weight operator*(const Rat& s, const Weight& w) {
    Weight out = w;
    for (auto& c : out.coords_) c *= s;
    return out;
}

Weight operator/(const Weight& w, const Rat& s) {
    Weight out = w;
    for (auto& c : out.coords_) c /= s;
    return out;
}

Weight Weight::concat(const Weight& other) const {
    Weight out = *this;
    out.coords_.insert(out.coords_.end(), other.coords_.begin(), other.coords_.end());
    return out;
}

std::string Weight::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += coords_[i].to_string();
    }
    return s;
}

Weight Weight::parse(std::string_view text) {
    std::vector<Rat> coords;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coords.push_back(Rat::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Weight(std::move(coords));
}

void require_rank(const GroupKind& kind, const Weight& w) {
    if (w.rank() != static_cast<std::size_t>(kind.rank())) {
        throw DomainError("rank mismatch: " + kind.name() + " expects " + std::to_string(kind.rank()) +
                          " coordinates, got " + std::to_string(w.rank()));
    }
}

Weight rho(const GroupKind& kind) {
    const int r = kind.rank();
    std::vector<Rat> c(r);
    for (int i = 0; i < r; ++i) {
        switch (kind.family()) {
        case Family::A: c[i] = Rat(r - 1 - 2 * i, 2); break;
        case Family::B: c[i] = Rat(2 * (r - i) - 1, 2); break;
        case Family::C: c[i] = Rat(r - i); break;
        case Family::D: c[i] = Rat(r - 1 - i); break;
        }
    }
    return Weight(std::move(c));
}

bool is_regular(const GroupKind& kind, const Weight& w) {
    require_rank(kind, w);
    if (kind.family() == Family::A) {
        std::set<Rat> seen(w.begin(), w.end());
        return seen.size() == w.rank();
    }
    std::set<Rat> abs_values;
    int zeros = 0;
    for (const Rat& c : w) {
        abs_values.insert(c.abs());
        zeros += c.is_zero();
    }
    if (abs_values.size() != w.rank()) return false;
    if (kind.family() == Family::D) return zeros <= 1;
    return zeros == 0;
}

bool is_dominant(const GroupKind& kind, const Weight& w) {
    require_rank(kind, w);
    const std::size_t r = w.rank();
    if (kind.family() == Family::D) {
        for (std::size_t i = 0; i + 2 < r; ++i) {
            if (w[i] < w[i + 1]) return false;
        }
        return r < 2 || w[r - 2] >= w[r - 1].abs();
    }
    for (std::size_t i = 0; i + 1 < r; ++i) {
        if (w[i] < w[i + 1]) return false;
    }
    if (kind.family() == Family::A) return true;
    return w[r - 1].sign() >= 0;
}

Weight dominant_normalize(const GroupKind& kind, const Weight& w) {
    require_rank(kind, w);
    std::vector<Rat> c(w.begin(), w.end());
    if (kind.family() == Family::A) {
        std::sort(c.begin(), c.end(), std::greater<>());
        return Weight(std::move(c));
    }
    int flips = 0;
    bool has_zero = false;
    for (auto& x : c) {
        flips += x.sign() < 0;
        has_zero = has_zero || x.is_zero();
        x = x.abs();
    }
    std::sort(c.begin(), c.end(), std::greater<>());
    if (kind.family() == Family::D && flips % 2 == 1 && !has_zero) c.back() = -c.back();
    return Weight(std::move(c));
}

}  // namespace thetadirac
