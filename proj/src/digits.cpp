#include "qreg/digits.hpp"

namespace qreg {

DigitWord to_digits(Index n, unsigned base) {
    require_base(base);
    DigitWord w;
    w.base = base;
    while (n > 0) {
        w.digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return w;
}

Index from_digits(const DigitWord& word) {
    require_base(word.base);
    Index value = 0;
    for (auto it = word.digits.rbegin(); it != word.digits.rend(); ++it) {
        if (*it >= word.base)
            throw invalid_digit("digit " + std::to_string(*it) + " out of range for base " +
                                std::to_string(word.base));
        value = value * word.base + *it;
    }
    return value;
}

Index digit_reverse(Index n, unsigned base) {
    require_base(base);
    Index reversed = 0;
    while (n > 0) {
        reversed = reversed * base + n % base;
        n /= base;
    }
    return reversed;
}

unsigned digit_sum(Index n, unsigned base) {
    require_base(base);
    unsigned s = 0;
    while (n > 0) {
        s += static_cast<unsigned>(n % base);
        n /= base;
    }
    return s;
}

} // namespace qreg
