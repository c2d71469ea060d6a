#include "thetadirac/rational.hpp"

#include "thetadirac/error.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace thetadirac {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    *this = from_wide(n, d);
}

Rat Rat::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
}

Rat Rat::operator-() const {
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rat operator+(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return Rat::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return Rat::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    return a + (-b);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rat::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rat::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s, text));
    std::int64_t n = parse_int(trim(s.substr(0, slash)), text);
    std::string_view ds = trim(s.substr(slash + 1));
    if (!ds.empty() && (ds.front() == '-' || ds.front() == '+')) {
        throw ParseError("malformed rational '" + std::string(text) + "': signed denominator");
    }
    std::int64_t d = parse_int(ds, text);
    if (d == 0) throw ParseError("malformed rational '" + std::string(text) + "': zero denominator");
    return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace thetadirac
