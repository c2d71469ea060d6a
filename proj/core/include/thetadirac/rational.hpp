#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace thetadirac {

/**
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always stored in lowest terms with a positive denominator; zero is 0/1.
 * Intermediate products are formed in 128 bits and any result that does
 * not fit back into 64 bits throws std::overflow_error rather than wrapping.
 */
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
    Rat(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Accepts an optionally signed integer or "p/q"; surrounding blanks are ignored.
    static Rat parse(std::string_view text);

private:
    static Rat from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace thetadirac
