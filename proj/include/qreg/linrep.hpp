#pragma once

#include <vector>

#include "qreg/digits.hpp"
#include "qreg/errors.hpp"
#include "qreg/mat2.hpp"
#include "qreg/ring.hpp"

namespace qreg {

/**
 * Rank-2 linear representation of a base-q sequence: one 2x2 matrix per
 * digit and a seed vector (alpha, beta). The sequence value is
 *
 *   x(n) = (1,0) * A(e0) * A(e1) * ... * A(e_{v-1}) * (alpha, beta)^T
 *
 * over the proper expansion n = (e_{v-1} ... e1 e0) in base q, with the
 * empty product for n = 0, so x(0) = alpha.
 */
template <class R>
struct LinearRep {
    unsigned base;
    std::vector<Mat2<R>> matrices;  // exactly `base` entries, indexed by digit
    Vec2<R> seed;                   // (alpha, beta)

    LinearRep(unsigned q, std::vector<Mat2<R>> mats, Vec2<R> s)
        : base(q), matrices(std::move(mats)), seed(std::move(s)) {
        require_base(base);
        if (matrices.size() != base)
            throw invalid_input("LinearRep: need exactly " + std::to_string(base) +
                                " matrices, got " + std::to_string(matrices.size()));
    }

    const Mat2<R>& matrix(std::uint32_t digit) const {
        if (digit >= base)
            throw invalid_digit("LinearRep: digit " + std::to_string(digit) +
                                " out of range for base " + std::to_string(base));
        return matrices[digit];
    }
};

/**
 * (x(n), x(n+1)-slot) via the vector recursion v(q*n + e) = A(e) * v(n),
 * v(0) = seed. Two ring multiplications per matrix row per digit, O(log n)
 * total. The second component tracks x(n+1) whenever the representation was
 * built from a pair recurrence.
 */
template <class R>
Vec2<R> eval_pair(const LinearRep<R>& rep, Index n) {
    if (n == 0) return rep.seed;
    DigitWord w = to_digits(n, rep.base);
    Vec2<R> v = rep.seed;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it)
        v = rep.matrices[*it] * v;
    return v;
}

template <class R>
R eval(const LinearRep<R>& rep, Index n) {
    return eval_pair(rep, n).v1;
}

/**
 * Literal word evaluation (1,0) * A(w[0]) * ... * A(w[last]) * seed for an
 * arbitrary digit word, leading zeros included. Coincides with eval(value)
 * only when the word is a proper expansion.
 */
template <class R>
R word_value(const LinearRep<R>& rep, const DigitWord& w) {
    Vec2<R> v = rep.seed;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it)
        v = rep.matrix(*it) * v;
    return v.v1;
}

/**
 * Brute-force oracle: x(0..N-1) computed bottom-up with memoized pairs,
 * one matrix application per index and no matrix words. Cross-validates
 * eval at O(N) ring operations total.
 */
template <class R>
std::vector<R> recurrence_oracle(const LinearRep<R>& rep, Index count) {
    if (count < 1) throw invalid_input("recurrence_oracle: need N >= 1");
    std::vector<Vec2<R>> pairs;
    pairs.reserve(count);
    pairs.push_back(rep.seed);
    for (Index n = 1; n < count; ++n)
        pairs.push_back(rep.matrices[n % rep.base] * pairs[n / rep.base]);
    std::vector<R> values;
    values.reserve(count);
    for (auto& p : pairs) values.push_back(std::move(p.v1));
    return values;
}

/// Entrywise ring change, e.g. lifting a rational representation into a
/// quadratic extension before checking a certificate that lives there.
template <class S, class R, class Fn>
LinearRep<S> map_rep(const LinearRep<R>& rep, Fn&& fn) {
    std::vector<Mat2<S>> mats;
    mats.reserve(rep.matrices.size());
    for (const auto& m : rep.matrices)
        mats.push_back(Mat2<S>{fn(m.m11), fn(m.m12), fn(m.m21), fn(m.m22)});
    return LinearRep<S>(rep.base, std::move(mats), Vec2<S>{fn(rep.seed.v1), fn(rep.seed.v2)});
}

inline LinearRep<QuadExt> lift_to_quadext(const LinearRep<Rational>& rep,
                                          const Rational& radicand) {
    return map_rep<QuadExt>(rep, [&](const Rational& x) { return to_quadext(x, radicand); });
}

} // namespace qreg
