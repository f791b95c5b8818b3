#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>

#include "qreg/errors.hpp"

namespace qreg {

/**
 * Complex double with tolerance-only comparisons.
 *
 * There is deliberately no operator==: every equality decision takes an
 * explicit caller-supplied tolerance, so approximate values cannot slip into
 * code paths that expect exact rings.
 */
struct ComplexApprox {
    double re = 0.0;
    double im = 0.0;

    ComplexApprox() = default;
    ComplexApprox(double r, double i) : re(r), im(i) {}
    explicit ComplexApprox(double r) : re(r), im(0.0) {}

    // e(theta) = exp(2*pi*i*theta), a point on the unit circle
    static ComplexApprox unit_circle(double theta) {
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double t = two_pi * theta;
        return {std::cos(t), std::sin(t)};
    }

    std::complex<double> std() const { return {re, im}; }
    static ComplexApprox from_std(std::complex<double> z) { return {z.real(), z.imag()}; }

    double abs() const { return std::hypot(re, im); }
    ComplexApprox conjugate() const { return {re, -im}; }

    ComplexApprox operator-() const { return {-re, -im}; }
    ComplexApprox operator+(const ComplexApprox& o) const { return {re + o.re, im + o.im}; }
    ComplexApprox operator-(const ComplexApprox& o) const { return {re - o.re, im - o.im}; }
    ComplexApprox operator*(const ComplexApprox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexApprox operator/(const ComplexApprox& o) const {
        return from_std(std() / o.std());
    }

    ComplexApprox inverse() const {
        if (re == 0.0 && im == 0.0) throw division_by_zero("ComplexApprox: inverse of zero");
        return from_std(1.0 / std());
    }

    bool approx_equal(const ComplexApprox& o, double tol) const {
        return (*this - o).abs() <= tol;
    }

    bool approx_zero(double tol) const { return abs() <= tol; }

    std::string to_string() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", re, im);
        return buf;
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexApprox& z) {
        return os << z.to_string();
    }
};

} // namespace qreg
