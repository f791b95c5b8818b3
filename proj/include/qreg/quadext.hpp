#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "qreg/errors.hpp"
#include "qreg/rational.hpp"

namespace qreg {

/**
 * Element rat + irr*sqrt(radicand) of a quadratic extension of the rationals.
 *
 * The radicand is a fixed nonzero rational that is not the square of a
 * rational; it is carried by every value and identifies the domain. Mixing
 * values with different radicands is a domain_mismatch error, never a
 * coercion. Representation (rat, irr) is canonical, so equality is
 * coordinate-wise.
 */
class QuadExt {
public:
    // Validates the radicand once; arithmetic reuses it unchecked.
    QuadExt(Rational radicand, Rational rat, Rational irr)
        : rad_(std::move(radicand)), rat_(std::move(rat)), irr_(std::move(irr)) {
        if (rad_.is_zero()) throw degenerate_radicand("QuadExt: radicand must be nonzero");
        if (rad_.exact_sqrt()) throw degenerate_radicand("QuadExt: radicand is a perfect square");
    }

    static QuadExt sqrt_of(const Rational& radicand) {
        return QuadExt(radicand, Rational(0), Rational(1));
    }

    const Rational& radicand() const { return rad_; }
    const Rational& rational_part() const { return rat_; }
    const Rational& irrational_part() const { return irr_; }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_one() const { return rat_.is_one() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }

    QuadExt with_coords(Rational rat, Rational irr) const {
        return QuadExt(unchecked{}, rad_, std::move(rat), std::move(irr));
    }

    QuadExt operator-() const { return with_coords(-rat_, -irr_); }

    QuadExt operator+(const QuadExt& o) const {
        require_same_domain(o);
        return with_coords(rat_ + o.rat_, irr_ + o.irr_);
    }

    QuadExt operator-(const QuadExt& o) const {
        require_same_domain(o);
        return with_coords(rat_ - o.rat_, irr_ - o.irr_);
    }

    QuadExt operator*(const QuadExt& o) const {
        require_same_domain(o);
        return with_coords(rat_ * o.rat_ + irr_ * o.irr_ * rad_,
                           rat_ * o.irr_ + irr_ * o.rat_);
    }

    QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

    // (rat - irr*sqrt(d)) / norm; norm = rat^2 - irr^2*d is nonzero for any
    // nonzero element because d is not a rational square.
    QuadExt inverse() const {
        if (is_zero()) throw division_by_zero("QuadExt: inverse of zero");
        Rational norm = rat_ * rat_ - irr_ * irr_ * rad_;
        return with_coords(rat_ / norm, -(irr_ / norm));
    }

    QuadExt conjugate() const { return with_coords(rat_, -irr_); }

    bool operator==(const QuadExt& o) const {
        require_same_domain(o);
        return rat_ == o.rat_ && irr_ == o.irr_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    BigInt height() const {
        BigInt h1 = rat_.height();
        BigInt h2 = irr_.height();
        return h1 > h2 ? h1 : h2;
    }

    double to_double() const {
        // meaningful only for positive radicands
        return rat_.to_double() + irr_.to_double() * std::sqrt(rad_.to_double());
    }

    // Square root within the same extension, when one exists.
    std::optional<QuadExt> exact_sqrt() const;

    std::string to_string() const {
        std::string root = "sqrt(" + rad_.to_string() + ")";
        if (irr_.is_zero()) return rat_.to_string();
        std::string irr_part;
        Rational ai = irr_.is_negative() ? -irr_ : irr_;
        if (ai.is_one()) irr_part = root;
        else irr_part = ai.to_string() + "*" + root;
        if (rat_.is_zero()) return (irr_.is_negative() ? "-" : "") + irr_part;
        return rat_.to_string() + (irr_.is_negative() ? "-" : "+") + irr_part;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
        return os << x.to_string();
    }

private:
    struct unchecked {};
    QuadExt(unchecked, Rational rad, Rational rat, Rational irr)
        : rad_(std::move(rad)), rat_(std::move(rat)), irr_(std::move(irr)) {}

    void require_same_domain(const QuadExt& o) const {
        if (rad_ != o.rad_)
            throw domain_mismatch("QuadExt: mixed radicands " + rad_.to_string() + " and " +
                                  o.rad_.to_string());
    }

    Rational rad_;
    Rational rat_;
    Rational irr_;
};

// sqrt(rat + irr*sqrt(d)) within Q(sqrt(d)), solving p^2 + q^2 d = rat and
// 2pq = irr over the rationals.
inline std::optional<QuadExt> QuadExt::exact_sqrt() const {
    if (is_zero()) return with_coords(Rational(0), Rational(0));
    if (irr_.is_zero()) {
        if (auto p = rat_.exact_sqrt()) return with_coords(*p, Rational(0));
        if (auto q = (rat_ / rad_).exact_sqrt()) return with_coords(Rational(0), *q);
        return std::nullopt;
    }
    // p^2 is a root of t^2 - rat*t + d*irr^2/4 = 0
    Rational disc = rat_ * rat_ - irr_ * irr_ * rad_;
    auto t_root = disc.exact_sqrt();
    if (!t_root) return std::nullopt;
    for (const Rational& t : {(rat_ + *t_root) / Rational(2), (rat_ - *t_root) / Rational(2)}) {
        auto p = t.exact_sqrt();
        if (!p || p->is_zero()) continue;
        Rational q = irr_ / (Rational(2) * *p);
        QuadExt cand = with_coords(*p, q);
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

/**
 * Adjoin the square root of a nonzero rational: either the root is itself
 * rational, or it generates a quadratic extension with radicand r.
 */
inline std::variant<Rational, QuadExt> adjoin_sqrt(const Rational& r) {
    if (r.is_zero()) throw degenerate_radicand("adjoin_sqrt: radicand must be nonzero");
    if (auto root = r.exact_sqrt()) return *root;
    return QuadExt::sqrt_of(r);
}

inline QuadExt to_quadext(const Rational& value, const Rational& radicand) {
    return QuadExt(radicand, value, Rational(0));
}

} // namespace qreg
