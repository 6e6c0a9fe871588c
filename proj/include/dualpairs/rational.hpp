#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dualpairs {

__extension__ typedef __int128 wide_int;

// Exact rational with 64-bit numerator/denominator, always normalized
// (gcd(num, den) == 1, den > 0). Arithmetic throws std::overflow_error
// instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    // Exact conversion of a binary64 value; empty if it is not finite or
    // would not fit the 64-bit representation.
    static std::optional<Rational> from_double(double x);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);

private:
    static Rational from_wide(wide_int n, wide_int d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace dualpairs
