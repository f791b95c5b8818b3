#pragma once

#include <optional>
#include <vector>

#include "qreg/digits.hpp"
#include "qreg/linrep.hpp"
#include "qreg/mat2.hpp"
#include "qreg/parallel.hpp"
#include "qreg/ring.hpp"

namespace qreg {

/**
 * Digit-reversal certificate S = [[a,b],[c,d]] for a rank-2 linear
 * representation. A valid certificate has det S = 1 with a and b nonzero and
 * makes the per-digit residual (below) vanish for every digit matrix; that
 * forces x(n) = x(reverse(n)) for all n >= 1.
 */
template <class R>
struct Certificate {
    R a, b, c, d;

    R det() const { return a * d - b * c; }

    Mat2<R> matrix() const { return {a, b, c, d}; }

    // adjugate; the actual inverse once det = 1 holds
    Mat2<R> inverse_matrix() const { return {d, -b, -c, a}; }
};

template <class S, class R, class Fn>
Certificate<S> map_certificate(const Certificate<R>& cert, Fn&& fn) {
    return {fn(cert.a), fn(cert.b), fn(cert.c), fn(cert.d)};
}

inline Certificate<QuadExt> lift_to_quadext(const Certificate<Rational>& cert,
                                            const Rational& radicand) {
    return map_certificate<QuadExt>(cert,
                                    [&](const Rational& x) { return to_quadext(x, radicand); });
}

/**
 * The certificate condition for one digit:
 *
 *   a*b*(a1*beta - a3*alpha - a4*beta) + a2*(beta + 2*b*c*beta - c*d*alpha)
 *
 * where A(digit) = [[a1,a2],[a3,a4]]. Zero for every digit iff S certifies
 * digit-reversal invariance.
 */
template <class R>
R residual(const LinearRep<R>& rep, const Certificate<R>& cert, std::uint32_t digit) {
    const Mat2<R>& m = rep.matrix(digit);
    const R& alpha = rep.seed.v1;
    const R& beta = rep.seed.v2;
    R two = from_rational_like(alpha, Rational(2));
    R left = cert.a * cert.b * (m.m11 * beta - m.m21 * alpha - m.m22 * beta);
    R right = m.m12 * (beta + two * cert.b * cert.c * beta - cert.c * cert.d * alpha);
    return left + right;
}

/**
 * Structured outcome of a certificate check: every per-digit residual, the
 * determinant, and the hypothesis re-validation. A violated hypothesis makes
 * the report fail; it does not throw.
 */
template <class R>
struct ResidualReport {
    std::vector<R> residuals;
    R det;
    bool det_ok = false;
    bool nonzero_ab = false;
    bool pass = false;
};

template <class R>
ResidualReport<R> check(const LinearRep<R>& rep, const Certificate<R>& cert,
                        std::optional<double> tol = std::nullopt) {
    ResidualReport<R> report{{}, cert.det()};
    R one = one_like(report.det);
    report.det_ok = values_equal(report.det, one, tol);
    report.nonzero_ab = !value_is_zero(cert.a, tol) && !value_is_zero(cert.b, tol);
    bool residuals_ok = true;
    for (std::uint32_t digit = 0; digit < rep.base; ++digit) {
        report.residuals.push_back(residual(rep, cert, digit));
        residuals_ok = residuals_ok && value_is_zero(report.residuals.back(), tol);
    }
    report.pass = report.det_ok && report.nonzero_ab && residuals_ok;
    return report;
}

/// S^{-1} * A(digit) * S, the digit matrix seen through the certificate.
template <class R>
Mat2<R> conjugated_entries(const LinearRep<R>& rep, const Certificate<R>& cert,
                           std::uint32_t digit) {
    return cert.inverse_matrix() * rep.matrix(digit) * cert.matrix();
}

/**
 * The single scalar identity that drives the reversal induction:
 *
 *   a*(-c*alpha + a*beta) * s2(digit) = b*(d*alpha - b*beta) * s3(digit)
 *
 * with s2, s3 the off-diagonal entries of S^{-1} A(digit) S. Given det S = 1
 * it is algebraically equivalent to the residual vanishing.
 */
template <class R>
bool s2s3_relation(const LinearRep<R>& rep, const Certificate<R>& cert, std::uint32_t digit,
                   std::optional<double> tol = std::nullopt) {
    Mat2<R> s = conjugated_entries(rep, cert, digit);
    const R& alpha = rep.seed.v1;
    const R& beta = rep.seed.v2;
    R lhs = cert.a * (beta * cert.a - alpha * cert.c) * s.m12;
    R rhs = cert.b * (alpha * cert.d - beta * cert.b) * s.m21;
    return values_equal(lhs, rhs, tol);
}

namespace detail {

template <class R>
Vec2<R> column_through_word(const LinearRep<R>& rep, const DigitWord& w, Vec2<R> v) {
    // A(w[0]) * ... * A(w[last]) * v, applied right to left
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it)
        v = rep.matrix(*it) * v;
    return v;
}

template <class R>
Vec2<R> row_through_reversed_word(const LinearRep<R>& rep, const DigitWord& w, Vec2<R> row) {
    // row * A(w[last]) * ... * A(w[0]), folded left to right
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it)
        row = row_times(row, rep.matrix(*it));
    return row;
}

} // namespace detail

/**
 * First reversal-induction identity, checked literally on a digit word w:
 *
 *   (a,0) S^{-1} A(w0)...A(wk) seed  =  (1,0) A(wk)...A(w0) S (d*alpha - b*beta, 0)^T
 */
template <class R>
bool proof_identity_left(const LinearRep<R>& rep, const Certificate<R>& cert,
                         const DigitWord& w, std::optional<double> tol = std::nullopt) {
    const R& alpha = rep.seed.v1;
    const R& beta = rep.seed.v2;
    R zero = zero_like(alpha);

    Vec2<R> lrow = row_times(Vec2<R>{cert.a, zero}, cert.inverse_matrix());
    R lhs = dot(lrow, detail::column_through_word(rep, w, rep.seed));

    Vec2<R> rrow = detail::row_through_reversed_word(rep, w, Vec2<R>{one_like(alpha), zero});
    Vec2<R> rcol = cert.matrix() * Vec2<R>{cert.d * alpha - cert.b * beta, zero};
    R rhs = dot(rrow, rcol);
    return values_equal(lhs, rhs, tol);
}

/// Second reversal-induction identity, with row (0,b) and column (0, -c*alpha + a*beta).
template <class R>
bool proof_identity_right(const LinearRep<R>& rep, const Certificate<R>& cert,
                          const DigitWord& w, std::optional<double> tol = std::nullopt) {
    const R& alpha = rep.seed.v1;
    const R& beta = rep.seed.v2;
    R zero = zero_like(alpha);

    Vec2<R> lrow = row_times(Vec2<R>{zero, cert.b}, cert.inverse_matrix());
    R lhs = dot(lrow, detail::column_through_word(rep, w, rep.seed));

    Vec2<R> rrow = detail::row_through_reversed_word(rep, w, Vec2<R>{one_like(alpha), zero});
    Vec2<R> rcol = cert.matrix() * Vec2<R>{zero, cert.a * beta - cert.c * alpha};
    R rhs = dot(rrow, rcol);
    return values_equal(lhs, rhs, tol);
}

/**
 * Sweep x(n) = x(reverse(n)) for 1 <= n < limit using any evaluation
 * routine; returns the smallest violating index. Index 0 is excluded: the
 * representation only constrains n >= 1.
 */
template <class Fn, class Eq>
std::optional<Index> verify_reversal_fn(unsigned base, Index limit, Fn&& value, Eq&& equal,
                                        unsigned workers = sweep_workers()) {
    require_base(base);
    return find_first_violation(
        Index{1}, limit,
        [&](Index n) { return !equal(value(n), value(digit_reverse(n, base))); }, workers);
}

template <class R>
std::optional<Index> verify_reversal(const LinearRep<R>& rep, Index limit,
                                     std::optional<double> tol = std::nullopt,
                                     unsigned workers = sweep_workers()) {
    return verify_reversal_fn(
        rep.base, limit, [&](Index n) { return eval(rep, n); },
        [&](const R& x, const R& y) { return values_equal(x, y, tol); }, workers);
}

} // namespace qreg
