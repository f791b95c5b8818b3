#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "qreg/errors.hpp"
#include "qreg/rational.hpp"

namespace qreg {

/**
 * Sparse polynomial in two named variables with exact rational coefficients.
 *
 * Terms are stored by exponent pair under descending graded-lex order
 * (higher total degree first, then higher first-variable exponent), which is
 * also the serialization order. Zero coefficients are never stored. Values
 * with different variable-name pairs are distinct domains.
 */
class BiPoly {
public:
    using Exponents = std::pair<std::uint32_t, std::uint32_t>;

    struct GrlexDescending {
        bool operator()(const Exponents& a, const Exponents& b) const {
            auto da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da > db;
            return a.first > b.first;
        }
    };

    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    BiPoly(std::string var1, std::string var2)
        : var1_(std::move(var1)), var2_(std::move(var2)) {}

    static BiPoly constant(std::string var1, std::string var2, Rational c) {
        BiPoly p(std::move(var1), std::move(var2));
        if (!c.is_zero()) p.terms_.emplace(Exponents{0, 0}, std::move(c));
        return p;
    }

    static BiPoly variable1(std::string var1, std::string var2) {
        BiPoly p(std::move(var1), std::move(var2));
        p.terms_.emplace(Exponents{1, 0}, Rational(1));
        return p;
    }

    static BiPoly variable2(std::string var1, std::string var2) {
        BiPoly p(std::move(var1), std::move(var2));
        p.terms_.emplace(Exponents{0, 1}, Rational(1));
        return p;
    }

    const std::string& var1() const { return var1_; }
    const std::string& var2() const { return var2_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
               terms_.begin()->second.is_one();
    }

    BiPoly zero_of_domain() const { return BiPoly(var1_, var2_); }

    BiPoly operator-() const {
        BiPoly r(var1_, var2_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    BiPoly operator+(const BiPoly& o) const {
        require_same_domain(o);
        BiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    BiPoly operator-(const BiPoly& o) const {
        require_same_domain(o);
        BiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    BiPoly operator*(const BiPoly& o) const {
        require_same_domain(o);
        BiPoly r(var1_, var2_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
        return r;
    }

    BiPoly scaled(const Rational& c) const {
        BiPoly r(var1_, var2_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    bool operator==(const BiPoly& o) const {
        require_same_domain(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::uint32_t total_degree() const {
        if (terms_.empty()) return 0;
        const auto& e = terms_.begin()->first;  // leading term has maximal degree
        return e.first + e.second;
    }

    /**
     * Substitution homomorphism: evaluate at (x0, y0) in any ring R that can
     * embed rational constants via from_rational_like.
     */
    template <class R>
    R eval(const R& x0, const R& y0) const;

    // Sum of "c*v1^i*v2^j" pieces in storage order; "0" for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational ac = c.is_negative() ? -c : c;
            if (first) {
                if (c.is_negative()) out += '-';
                first = false;
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            out += term_string(e, ac);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
        return os << p.to_string();
    }

private:
    void require_same_domain(const BiPoly& o) const {
        if (var1_ != o.var1_ || var2_ != o.var2_)
            throw domain_mismatch("BiPoly: mixed variable sets (" + var1_ + "," + var2_ +
                                  ") and (" + o.var1_ + "," + o.var2_ + ")");
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::string term_string(const Exponents& e, const Rational& abs_coeff) const {
        auto power = [](const std::string& v, std::uint32_t k) {
            if (k == 1) return v;
            return v + "^" + std::to_string(k);
        };
        if (e.first == 0 && e.second == 0) return abs_coeff.to_string();
        std::string mono;
        if (e.first > 0) mono = power(var1_, e.first);
        if (e.second > 0) {
            if (!mono.empty()) mono += '*';
            mono += power(var2_, e.second);
        }
        if (abs_coeff.is_one()) return mono;
        return abs_coeff.to_string() + "*" + mono;
    }

    std::string var1_;
    std::string var2_;
    TermMap terms_;
};

// Defined here as a template; from_rational_like is resolved per ring at
// instantiation time (see ring.hpp for the overload set).
template <class R>
R BiPoly::eval(const R& x0, const R& y0) const {
    R acc = from_rational_like(x0, Rational(0));
    for (const auto& [e, c] : terms_) {
        R term = from_rational_like(x0, c);
        for (std::uint32_t i = 0; i < e.first; ++i) term = term * x0;
        for (std::uint32_t j = 0; j < e.second; ++j) term = term * y0;
        acc = acc + term;
    }
    return acc;
}

} // namespace qreg
