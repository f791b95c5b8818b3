#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qreg/certificate.hpp"
#include "qreg/linrep.hpp"
#include "qreg/ring.hpp"

namespace qreg {

/// Why no certificate could be produced, with a description of the linear
/// solution space that was reached.
struct SolveFailure {
    std::string reason;
};

namespace detail {

// The unknowns are (u, v, w) = (a*b, b*c, c*d). Each digit contributes the
// linear equation u*L + 2*beta*M*v - alpha*M*w = -beta*M with
// L = a1*beta - a3*alpha - a4*beta and M = a2; the determinant constraint
// ad - bc = 1 becomes the quadric u*w = v*(v+1).
template <class F>
struct LinearSystem {
    std::vector<std::array<F, 4>> rows;  // coefficients u, v, w | rhs
};

template <class F>
LinearSystem<F> residual_system(const LinearRep<F>& rep) {
    const F& alpha = rep.seed.v1;
    const F& beta = rep.seed.v2;
    F two = from_rational_like(alpha, Rational(2));
    LinearSystem<F> sys;
    for (std::uint32_t digit = 0; digit < rep.base; ++digit) {
        const Mat2<F>& m = rep.matrices[digit];
        F ell = m.m11 * beta - m.m21 * alpha - m.m22 * beta;
        sys.rows.push_back({ell, two * beta * m.m12, -(alpha * m.m12), -(beta * m.m12)});
    }
    return sys;
}

template <class F>
struct AffineSpace {
    std::array<F, 3> particular;
    std::vector<std::array<F, 3>> basis;  // nullspace directions
    bool consistent = true;
};

// Reduced row echelon form by exact Gaussian elimination; F must be a field.
template <class F>
AffineSpace<F> solve_linear(LinearSystem<F> sys, const F& exemplar) {
    const F zero = zero_like(exemplar);
    auto& rows = sys.rows;
    std::array<int, 3> pivot_row{-1, -1, -1};
    std::size_t next_row = 0;
    for (int col = 0; col < 3 && next_row < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (!ring_is_zero(rows[r][static_cast<std::size_t>(col)])) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[next_row], rows[found]);
        F inv = field_inv(rows[next_row][static_cast<std::size_t>(col)]);
        for (auto& x : rows[next_row]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row) continue;
            F factor = rows[r][static_cast<std::size_t>(col)];
            if (ring_is_zero(factor)) continue;
            for (std::size_t j = 0; j < 4; ++j)
                rows[r][j] = rows[r][j] - factor * rows[next_row][j];
        }
        pivot_row[static_cast<std::size_t>(col)] = static_cast<int>(next_row);
        ++next_row;
    }

    AffineSpace<F> space{{zero, zero, zero}, {}, true};
    for (std::size_t r = next_row; r < rows.size(); ++r) {
        if (!ring_is_zero(rows[r][3])) {
            space.consistent = false;
            return space;
        }
    }
    for (std::size_t col = 0; col < 3; ++col) {
        if (pivot_row[col] >= 0)
            space.particular[col] = rows[static_cast<std::size_t>(pivot_row[col])][3];
    }
    for (std::size_t free_col = 0; free_col < 3; ++free_col) {
        if (pivot_row[free_col] >= 0) continue;
        std::array<F, 3> dir{zero, zero, zero};
        dir[free_col] = one_like(exemplar);
        for (std::size_t col = 0; col < 3; ++col) {
            if (pivot_row[col] < 0) continue;
            dir[col] = -rows[static_cast<std::size_t>(pivot_row[col])][free_col];
        }
        space.basis.push_back(std::move(dir));
    }
    return space;
}

template <class F>
std::string describe_space(const AffineSpace<F>& space) {
    std::string s = "particular (u,v,w) = (";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += ", ";
        s += value_to_string(space.particular[i]);
    }
    s += ")";
    for (const auto& dir : space.basis) {
        s += "; direction (";
        for (std::size_t i = 0; i < 3; ++i) {
            if (i) s += ", ";
            s += value_to_string(dir[i]);
        }
        s += ")";
    }
    return s;
}

/// Signals that the computation needs the square root of `value`, which does
/// not exist in the current field.
template <class F>
struct RootNeeded {
    F value;
};

// Smallest-height root of the monic quadratic t^2 + p*t + q, ties resolved
// toward the +sqrt branch. Nullopt means the discriminant has no square root
// in F.
template <class F>
std::optional<F> smallest_height_root(const F& p, const F& q, F* discriminant_out) {
    F four = from_rational_like(p, Rational(4));
    F disc = p * p - four * q;
    if (discriminant_out) *discriminant_out = disc;
    auto root = try_sqrt(disc);
    if (!root) return std::nullopt;
    F half = from_rational_like(p, Rational(1, 2));
    F r1 = (-p + *root) * half;
    F r2 = (-p - *root) * half;
    return r2.height() < r1.height() ? r2 : r1;
}

template <class F>
using SolveCoreResult = std::variant<Certificate<F>, RootNeeded<F>, SolveFailure>;

template <class F>
SolveCoreResult<F> solve_core(const LinearRep<F>& rep) {
    const F zero = zero_like(rep.seed.v1);
    const F one = one_like(rep.seed.v1);

    LinearSystem<F> sys = residual_system(rep);
    AffineSpace<F> space = solve_linear(sys, rep.seed.v1);
    if (!space.consistent)
        return SolveFailure{"linear system for (u,v,w) = (ab,bc,cd) is inconsistent"};

    // Gauge: u is either forced by the system or freely chosen as 1.
    bool u_free = false;
    for (const auto& dir : space.basis)
        if (!ring_is_zero(dir[0])) u_free = true;
    if (u_free) {
        LinearSystem<F> pinned = residual_system(rep);
        pinned.rows.push_back({one, zero, zero, one});
        space = solve_linear(pinned, rep.seed.v1);
        if (!space.consistent)
            return SolveFailure{"internal: pinning u = 1 made the system inconsistent"};
    }
    F u = space.particular[0];
    if (ring_is_zero(u))
        return SolveFailure{"the linear constraints force u = a*b = 0, contradicting a,b != 0; " +
                            describe_space(space)};

    // Intersect the remaining (v,w) freedom with the quadric u*w = v*(v+1).
    F v = space.particular[1];
    F w = space.particular[2];
    const F quadric_gap = u * w - v * (v + one);
    if (space.basis.empty()) {
        if (!ring_is_zero(quadric_gap))
            return SolveFailure{"unique (u,v,w) violates u*w = v*(v+1); " + describe_space(space)};
    } else if (space.basis.size() == 1) {
        const auto& dir = space.basis.front();
        if (!ring_is_zero(dir[1])) {
            // reparametrize by v: w = w0 + (v - v0) * slope
            F slope = dir[2] * field_inv(dir[1]);
            F p = one - u * slope;
            F q = u * (slope * v - w);
            F disc = zero;
            auto root = smallest_height_root(p, q, &disc);
            if (!root) return RootNeeded<F>{disc};
            F v_new = *root;
            w = w + (v_new - v) * slope;
            v = v_new;
        } else {
            // v pinned, w free along the line
            w = v * (v + one) * field_inv(u);
        }
    } else {
        // v and w unconstrained: smallest-height choice v = 0, then w = 0
        v = zero;
        w = zero;
    }

    Certificate<F> cert{one, u, v * field_inv(u), one + v};
    if (!ring_is_zero(cert.c * cert.d - w))
        return SolveFailure{"internal: recovered c*d disagrees with w"};
    if (!check(rep, cert).pass)
        return SolveFailure{"internal: recovered certificate fails the residual re-check"};
    return cert;
}

} // namespace detail

using RationalSolveResult =
    std::variant<Certificate<Rational>, Certificate<QuadExt>, SolveFailure>;
using QuadExtSolveResult = std::variant<Certificate<QuadExt>, SolveFailure>;

/**
 * Solve for a digit-reversal certificate over the rationals. When the final
 * quadratic has no rational root, the representation is lifted into the
 * quadratic extension generated by the discriminant and solved there.
 */
inline RationalSolveResult certificate_solve(const LinearRep<Rational>& rep) {
    auto result = detail::solve_core(rep);
    if (auto* cert = std::get_if<Certificate<Rational>>(&result)) return *cert;
    if (auto* fail = std::get_if<SolveFailure>(&result)) return *fail;
    Rational radicand = std::get<detail::RootNeeded<Rational>>(result).value;
    if (radicand.is_zero() || radicand.exact_sqrt())
        return SolveFailure{"internal: discriminant " + radicand.to_string() +
                            " should have been handled in the base field"};
    auto lifted = detail::solve_core(lift_to_quadext(rep, radicand));
    if (auto* cert = std::get_if<Certificate<QuadExt>>(&lifted)) return *cert;
    if (auto* fail = std::get_if<SolveFailure>(&lifted)) return *fail;
    return SolveFailure{"internal: square root still missing after adjoining sqrt(" +
                        radicand.to_string() + ")"};
}

/**
 * Solve over a quadratic extension. Roots that would require a second
 * extension layer are reported as failures; towers of extensions are out of
 * scope.
 */
inline QuadExtSolveResult certificate_solve(const LinearRep<QuadExt>& rep) {
    auto result = detail::solve_core(rep);
    if (auto* cert = std::get_if<Certificate<QuadExt>>(&result)) return *cert;
    if (auto* fail = std::get_if<SolveFailure>(&result)) return *fail;
    const auto& needed = std::get<detail::RootNeeded<QuadExt>>(result);
    return SolveFailure{"discriminant " + needed.value.to_string() + " has no square root in Q(sqrt(" +
                        needed.value.radicand().to_string() + "))"};
}

inline QuadExtSolveResult certificate_solve(const LinearRep<BiPoly>&) {
    throw unsupported_operation("certificate_solve: polynomial coefficients form no field");
}

} // namespace qreg
