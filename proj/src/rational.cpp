#include "dualpairs/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dualpairs {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr wide_int kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::from_wide(wide_int n, wide_int d) {
    if (d == 0) throw std::domain_error("rational division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const wide_int g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

std::optional<Rational> Rational::from_double(double x) {
    if (!std::isfinite(x)) return std::nullopt;
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    // 53-bit integer mantissa.
    const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    int e = exp - 53;
    wide_int num = m;
    wide_int den = 1;
    if (e >= 0) {
        if (e > 62) return std::nullopt;
        num <<= e;
    } else {
        // Strip trailing zero bits before choosing the denominator.
        while (e < 0 && num != 0 && (num & 1) == 0) {
            num >>= 1;
            ++e;
        }
        if (num == 0) return Rational{};
        if (-e > 62) return std::nullopt;
        den = static_cast<wide_int>(1) << (-e);
    }
    if (num > kMax || num < -kMax) return std::nullopt;
    return from_wide(num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide_int>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = from_wide(static_cast<wide_int>(num_) * o.den_ + static_cast<wide_int>(o.num_) * den_,
                      static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_wide(static_cast<wide_int>(num_) * o.num_, static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    *this = from_wide(static_cast<wide_int>(num_) * o.den_, static_cast<wide_int>(den_) * o.num_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<wide_int>(a.num_) * b.den_ < static_cast<wide_int>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dualpairs
