#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

namespace qreg {

using BigInt = boost::multiprecision::cpp_int;
using Index = std::uint64_t;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) {
    return boost::multiprecision::abs(a);
}

// Floor of the square root of a nonnegative integer.
inline BigInt big_isqrt(const BigInt& a) {
    return boost::multiprecision::sqrt(a);
}

// Exact integer square root, if one exists.
inline std::optional<BigInt> exact_isqrt(const BigInt& a) {
    if (a < 0) return std::nullopt;
    BigInt r = big_isqrt(a);
    if (r * r == a) return r;
    return std::nullopt;
}

} // namespace qreg
