#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qreg/bigint.hpp"
#include "qreg/errors.hpp"

namespace qreg {

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}           // NOLINT: implicit by design
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        // a/b + c/d with g = gcd(b,d): a*(d/g) + c*(b/g) over b*(d/g)
        BigInt g = big_gcd(den_, o.den_);
        BigInt dg = o.den_ / g;
        return Rational(num_ * dg + o.num_ * (den_ / g), den_ * dg);
    }

    Rational operator-(const Rational& o) const {
        BigInt g = big_gcd(den_, o.den_);
        BigInt dg = o.den_ / g;
        return Rational(num_ * dg - o.num_ * (den_ / g), den_ * dg);
    }

    Rational operator*(const Rational& o) const {
        // cross-cancel before multiplying to keep intermediates small
        BigInt g1 = big_gcd(big_abs(num_), o.den_);
        BigInt g2 = big_gcd(big_abs(o.num_), den_);
        return Rational(unchecked{}, (num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
    }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero("Rational: division by zero");
        return *this * o.inverse();
    }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("Rational: inverse of zero");
        if (num_ > 0) return Rational(unchecked{}, den_, num_);
        return Rational(unchecked{}, -den_, -num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // max(|num|, den): the usual naive height, used for deterministic tie-breaks.
    BigInt height() const {
        BigInt a = big_abs(num_);
        return a > den_ ? a : den_;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // True iff the value is the square of a rational; returns the nonnegative root.
    std::optional<Rational> exact_sqrt() const {
        if (is_negative()) return std::nullopt;
        auto rn = exact_isqrt(num_);
        if (!rn) return std::nullopt;
        auto rd = exact_isqrt(den_);
        if (!rd) return std::nullopt;
        return Rational(unchecked{}, std::move(*rn), std::move(*rd));
    }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with optional leading sign.
    static Rational from_string(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct unchecked {};
    Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw division_by_zero("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = big_gcd(big_abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::from_string(const std::string& text) {
    auto bad = [&] { return parse_error("Rational: cannot parse \"" + text + "\""); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    auto strip_plus = [](const std::string& s) {
        return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    try {
        if (slash == std::string::npos) {
            check_int(text, true);
            return Rational(BigInt(strip_plus(text)));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        check_int(num, true);
        check_int(den, false);
        return Rational(BigInt(strip_plus(num)), BigInt(den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline Rational operator+(int a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(int a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(int a, const Rational& b) { return Rational(a) * b; }

} // namespace qreg
