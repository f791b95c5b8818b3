#pragma once

#include <optional>

#include "qreg/bipoly.hpp"
#include "qreg/complex_approx.hpp"
#include "qreg/errors.hpp"
#include "qreg/quadext.hpp"
#include "qreg/rational.hpp"

namespace qreg {

/**
 * Customization points shared by all coefficient domains.
 *
 * Generic code never constructs ring values from scratch; it derives them
 * from an exemplar so that per-instance domain data (radicand, variable
 * names) is preserved.
 */

template <class R>
inline constexpr bool is_exact_ring_v = true;
template <>
inline constexpr bool is_exact_ring_v<ComplexApprox> = false;

// --- embedding rational constants ---------------------------------------

inline Rational from_rational_like(const Rational&, const Rational& c) { return c; }

inline QuadExt from_rational_like(const QuadExt& exemplar, const Rational& c) {
    return to_quadext(c, exemplar.radicand());
}

inline BiPoly from_rational_like(const BiPoly& exemplar, const Rational& c) {
    return BiPoly::constant(exemplar.var1(), exemplar.var2(), c);
}

inline ComplexApprox from_rational_like(const ComplexApprox&, const Rational& c) {
    return ComplexApprox(c.to_double());
}

template <class R>
R zero_like(const R& exemplar) {
    return from_rational_like(exemplar, Rational(0));
}

template <class R>
R one_like(const R& exemplar) {
    return from_rational_like(exemplar, Rational(1));
}

// --- zero tests and equality with optional tolerance ---------------------

inline bool ring_is_zero(const Rational& x) { return x.is_zero(); }
inline bool ring_is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool ring_is_zero(const BiPoly& x) { return x.is_zero(); }

template <class R>
bool value_is_zero(const R& x, std::optional<double> /*tol*/ = std::nullopt) {
    return ring_is_zero(x);
}

inline bool value_is_zero(const ComplexApprox& x, std::optional<double> tol) {
    if (!tol) throw invalid_input("ComplexApprox comparisons require a tolerance");
    return x.approx_zero(*tol);
}

template <class R>
bool values_equal(const R& x, const R& y, std::optional<double> /*tol*/ = std::nullopt) {
    return x == y;
}

inline bool values_equal(const ComplexApprox& x, const ComplexApprox& y,
                         std::optional<double> tol) {
    if (!tol) throw invalid_input("ComplexApprox comparisons require a tolerance");
    return x.approx_equal(y, *tol);
}

// --- multiplicative inverses (fields only) -------------------------------

inline Rational field_inv(const Rational& x) { return x.inverse(); }
inline QuadExt field_inv(const QuadExt& x) { return x.inverse(); }
inline ComplexApprox field_inv(const ComplexApprox& x) { return x.inverse(); }
inline BiPoly field_inv(const BiPoly&) {
    throw unsupported_operation("BiPoly: polynomials have no multiplicative inverses");
}

// --- square roots within the field, used by the certificate solver -------

inline std::optional<Rational> try_sqrt(const Rational& x) { return x.exact_sqrt(); }
inline std::optional<QuadExt> try_sqrt(const QuadExt& x) { return x.exact_sqrt(); }

// --- serialization --------------------------------------------------------

inline std::string value_to_string(const Rational& x) { return x.to_string(); }
inline std::string value_to_string(const QuadExt& x) { return x.to_string(); }
inline std::string value_to_string(const BiPoly& x) { return x.to_string(); }
inline std::string value_to_string(const ComplexApprox& x) { return x.to_string(); }

} // namespace qreg
