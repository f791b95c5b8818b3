#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qreg/bipoly.hpp"
#include "qreg/certificate.hpp"
#include "qreg/complex_approx.hpp"
#include "qreg/linrep.hpp"
#include "qreg/quadext.hpp"
#include "qreg/rational.hpp"
#include "qreg/ring.hpp"

namespace qreg {

/**
 * Base-3 family a(0)=0, a(1)=1, a(3n)=a(n), a(3n+1)=tau*a(n)+a(n+1),
 * a(3n+2)=omega*a(n)+sigma*a(n+1) with omega = 1 - sigma^2 + tau*sigma.
 * Every member is digit-reversal invariant; omega is always derived from
 * (tau, sigma), never stored.
 */
template <class R>
struct ParametricFamily {
    R tau;
    R sigma;

    R omega() const { return one_like(tau) - sigma * sigma + tau * sigma; }
};

template <class R>
LinearRep<R> parametric_rep(const R& tau, const R& sigma) {
    ParametricFamily<R> fam{tau, sigma};
    R omega = fam.omega();
    R zero = zero_like(tau);
    R one = one_like(tau);
    std::vector<Mat2<R>> mats = {{one, zero, tau, one},
                                 {tau, one, omega, sigma},
                                 {omega, sigma, zero, one}};
    return LinearRep<R>(3, std::move(mats), Vec2<R>{zero, one});
}

// [[1, 1], [(sigma-tau-1)/2, (sigma-tau+1)/2]]; residuals vanish identically,
// including symbolically when tau and sigma are polynomial indeterminates.
template <class R>
Certificate<R> parametric_certificate(const R& tau, const R& sigma) {
    R one = one_like(tau);
    R half = from_rational_like(tau, Rational(1, 2));
    R diff = sigma - tau;
    return {one, one, (diff - one) * half, (diff + one) * half};
}

// The base-3 sequence with values in Z[sqrt(2)]: the parametric family at
// tau = sigma = sqrt(2).
LinearRep<QuadExt> northshield_rep();
Certificate<QuadExt> northshield_certificate();

/**
 * Base-2 family z(2n)=z(n), z(2n+1)=x*z(n)+y*z(n+1) with z(1)=1, realized by
 * A(0)=[[1,0],[x,y]], A(1)=[[x,y],[0,1]] and seed ((1-y)/x, 1). Needs x
 * invertible; x = 0 is excluded.
 */
template <class F>
LinearRep<F> stern_rep(const F& x, const F& y) {
    if (ring_is_zero(x)) throw excluded_parameter("stern_rep: x = 0 is excluded");
    F zero = zero_like(x);
    F one = one_like(x);
    std::vector<Mat2<F>> mats = {{one, zero, x, y}, {x, y, zero, one}};
    F alpha = (one - y) * field_inv(x);
    return LinearRep<F>(2, std::move(mats), Vec2<F>{alpha, one});
}

using SternCertificate = std::variant<Certificate<Rational>, Certificate<QuadExt>>;

/**
 * Certificate [[g, 1], [-1/2, 1/(2g)]] with 4*g^2 = (y/x)*(1-y)/(1-x). The
 * root g is rational when that quantity is a rational square and otherwise
 * lives in the quadratic extension it generates. Parameters in {0, 1} are
 * rejected.
 */
SternCertificate stern_certificate(const Rational& x, const Rational& y);

// s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1)
std::uint64_t stern_number(Index n);

// Polynomial variant in variables (x, y); defined for n >= 1 only.
BiPoly stern_poly(Index n);

// Values s(0..count-1) with the zero polynomial parked at index 0.
std::vector<BiPoly> stern_poly_table(Index count);

/**
 * Base-q representation of the digit-sum correlations gamma_t(theta):
 * seed (1, (q-1)/(q*e(-theta) - e(-theta*q))) and the one-digit-shift
 * recurrence matrices. eval at t approximates gamma_t.
 */
LinearRep<ComplexApprox> gamma_rep(unsigned base, double theta);
Certificate<ComplexApprox> gamma_certificate(unsigned base, double theta);

// Finite Cesaro average (1/N) sum_{n<N} e(theta*(sigma_q(n+t) - sigma_q(n))),
// the defining limit truncated at N; loose-tolerance oracle for gamma_rep.
ComplexApprox gamma_empirical(unsigned base, double theta, Index t, Index sample_count);

/**
 * Run lengths of an odd binary integer n = (1^k0 0^k1 ... 1^kr)_2, listed
 * from the most significant end; always starts and ends with a 1-run.
 */
struct RunLengths {
    std::vector<std::uint32_t> runs;
};

RunLengths binary_runs(Index n);

// Numerator of [k0; k1, ..., kr] via p(i) = k(i)*p(i-1) + p(i-2),
// p(-1) = 1, p(-2) = 0. Equals stern_number(n) on runs of odd n.
BigInt cf_numerator(const RunLengths& runs);

// The classical palindrome fact: reversing the quotient list preserves the
// numerator. Checked by direct comparison.
bool reversed_cf_same_numerator(const RunLengths& runs);

// Checks b(3^k + m) = b(3^(k+1) - m) for 0 <= m <= 3^k; returns the first
// violating m, if any.
std::optional<Index> northshield_symmetry(unsigned k);

/**
 * Per-block maxima of 2*b(n) / (2n)^log_3(1+sqrt 2) over n in [3^k, 3^(k+1))
 * for k = 2..k_max. b(n) is computed exactly in Z[sqrt 2] (64-bit
 * coordinates suffice at desk scale) and converted to double only for the
 * final ratio.
 */
struct GrowthBlock {
    unsigned k;
    double max_ratio;
    Index argmax;
};

struct GrowthReport {
    double exponent;
    std::vector<GrowthBlock> blocks;
};

GrowthReport growth_blocks(unsigned k_max);

double growth_exponent();  // log_3(1 + sqrt 2)
double growth_ratio(Index n, double b_value);

} // namespace qreg
