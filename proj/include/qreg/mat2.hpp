#pragma once

#include "qreg/ring.hpp"

namespace qreg {

template <class R>
struct Vec2 {
    R v1;
    R v2;
};

/// 2x2 matrix over an arbitrary coefficient ring.
template <class R>
struct Mat2 {
    R m11, m12, m21, m22;

    Mat2 operator*(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }

    Vec2<R> operator*(const Vec2<R>& v) const {
        return {m11 * v.v1 + m12 * v.v2, m21 * v.v1 + m22 * v.v2};
    }

    R det() const { return m11 * m22 - m12 * m21; }

    static Mat2 identity_like(const R& exemplar) {
        R one = one_like(exemplar);
        R zero = zero_like(exemplar);
        return {one, zero, zero, one};
    }
};

// (r1, r2) * M as a row vector
template <class R>
Vec2<R> row_times(const Vec2<R>& row, const Mat2<R>& m) {
    return {row.v1 * m.m11 + row.v2 * m.m21, row.v1 * m.m12 + row.v2 * m.m22};
}

template <class R>
R dot(const Vec2<R>& a, const Vec2<R>& b) {
    return a.v1 * b.v1 + a.v2 * b.v2;
}

} // namespace qreg
