#pragma once

#include <cstdint>
#include <vector>

#include "qreg/bigint.hpp"
#include "qreg/errors.hpp"

namespace qreg {

/**
 * Base-q digit word, least-significant digit first. The word produced by
 * to_digits for n >= 1 has a nonzero last (most significant) digit; n = 0 is
 * the empty word. Words with leading zeros are legal inputs elsewhere.
 */
struct DigitWord {
    unsigned base = 2;
    std::vector<std::uint32_t> digits;  // digits[0] is the least significant

    std::size_t size() const { return digits.size(); }
};

// Proper base-q expansion of n (empty for n = 0).
DigitWord to_digits(Index n, unsigned base);

// Value of a digit word; leading zeros are tolerated.
Index from_digits(const DigitWord& word);

// Reverse the proper expansion of n and re-read it in base q; 0 maps to 0.
// Not injective on multiples of q: their reversals drop trailing zeros.
Index digit_reverse(Index n, unsigned base);

// Sum of base-q digits of n.
unsigned digit_sum(Index n, unsigned base);

inline void require_base(unsigned base) {
    if (base < 2) throw invalid_base("base must be at least 2, got " + std::to_string(base));
}

} // namespace qreg
