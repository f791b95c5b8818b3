#include "qreg/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "qreg/parallel.hpp"

namespace qreg {

namespace {

QuadExt sqrt2() { return QuadExt::sqrt_of(Rational(2)); }

Index pow3(unsigned k) {
    Index v = 1;
    while (k--) v *= 3;
    return v;
}

} // namespace

LinearRep<QuadExt> northshield_rep() {
    QuadExt tau = sqrt2();
    return parametric_rep(tau, tau);
}

Certificate<QuadExt> northshield_certificate() {
    QuadExt tau = sqrt2();
    return parametric_certificate(tau, tau);
}

SternCertificate stern_certificate(const Rational& x, const Rational& y) {
    if (x.is_zero() || x.is_one() || y.is_zero() || y.is_one())
        throw excluded_parameter("stern_certificate: x and y must avoid {0, 1}");
    Rational one(1);
    Rational four_gamma_sq = (y / x) * (one - y) / (one - x);
    if (four_gamma_sq.is_zero())
        throw excluded_parameter("stern_certificate: degenerate parameters, 4*gamma^2 = 0");
    auto root = adjoin_sqrt(four_gamma_sq);
    Rational half(1, 2);
    if (const Rational* r = std::get_if<Rational>(&root)) {
        Rational gamma = *r * half;
        return Certificate<Rational>{gamma, one, -half, (Rational(2) * gamma).inverse()};
    }
    QuadExt gamma = std::get<QuadExt>(root) * to_quadext(half, four_gamma_sq);
    QuadExt ext_one = one_like(gamma);
    QuadExt ext_half = to_quadext(half, four_gamma_sq);
    return Certificate<QuadExt>{gamma, ext_one, -ext_half,
                                (to_quadext(Rational(2), four_gamma_sq) * gamma).inverse()};
}

std::uint64_t stern_number(Index n) {
    if (n == 0) return 0;
    int top = 63;
    while (((n >> top) & 1u) == 0) --top;
    // walk bits below the leading one, tracking (s(m), s(m+1))
    std::uint64_t s = 1, t = 1;
    for (int i = top - 1; i >= 0; --i) {
        if ((n >> i) & 1u)
            s += t;
        else
            t += s;
    }
    return s;
}

namespace {

BiPoly stern_poly_x() { return BiPoly::variable1("x", "y"); }
BiPoly stern_poly_y() { return BiPoly::variable2("x", "y"); }

} // namespace

std::vector<BiPoly> stern_poly_table(Index count) {
    if (count < 2) throw invalid_input("stern_poly_table: need count >= 2");
    BiPoly x = stern_poly_x();
    BiPoly y = stern_poly_y();
    std::vector<BiPoly> table;
    table.reserve(count);
    table.push_back(x.zero_of_domain());
    table.push_back(BiPoly::constant("x", "y", Rational(1)));
    for (Index n = 2; n < count; ++n) {
        if (n % 2 == 0)
            table.push_back(table[n / 2]);
        else
            table.push_back(x * table[n / 2] + y * table[n / 2 + 1]);
    }
    return table;
}

BiPoly stern_poly(Index n) {
    if (n == 0) throw undefined_index("stern_poly: defined for n >= 1 only");
    if (n == 1) return BiPoly::constant("x", "y", Rational(1));
    BiPoly x = stern_poly_x();
    BiPoly y = stern_poly_y();
    // recurse on the pair (s(m), s(m+1)) from the leading bit downward
    int top = 63;
    while (((n >> top) & 1u) == 0) --top;
    BiPoly s = BiPoly::constant("x", "y", Rational(1));
    BiPoly t = s;  // s(1), s(2)
    for (int i = top - 1; i >= 0; --i) {
        if ((n >> i) & 1u)
            s = x * s + y * t;
        else
            t = x * s + y * t;
    }
    return s;
}

LinearRep<ComplexApprox> gamma_rep(unsigned base, double theta) {
    require_base(base);
    const double q = static_cast<double>(base);
    auto e = [](double v) { return ComplexApprox::unit_circle(v); };
    ComplexApprox denom = ComplexApprox(q) * e(-theta) - e(-theta * q);
    if (denom.abs() < 1e-12)
        throw degenerate_theta("gamma_rep: seed denominator vanishes for this theta");
    ComplexApprox beta = ComplexApprox(q - 1.0) / denom;
    std::vector<Mat2<ComplexApprox>> mats;
    mats.reserve(base);
    for (unsigned eps = 0; eps < base; ++eps) {
        const double k = static_cast<double>(eps);
        mats.push_back({ComplexApprox((q - k) / q) * e(theta * k),
                        ComplexApprox(k / q) * e(-theta * (q - k)),
                        ComplexApprox((q - k - 1.0) / q) * e(theta * (k + 1.0)),
                        ComplexApprox((k + 1.0) / q) * e(-theta * (q - k - 1.0))});
    }
    return LinearRep<ComplexApprox>(base, std::move(mats),
                                    Vec2<ComplexApprox>{ComplexApprox(1.0), beta});
}

Certificate<ComplexApprox> gamma_certificate(unsigned base, double theta) {
    LinearRep<ComplexApprox> rep = gamma_rep(base, theta);
    return {ComplexApprox(1.0), rep.seed.v2.conjugate(), ComplexApprox(0.0), ComplexApprox(1.0)};
}

ComplexApprox gamma_empirical(unsigned base, double theta, Index t, Index sample_count) {
    require_base(base);
    if (sample_count < 1) throw invalid_input("gamma_empirical: need at least one sample");
    std::vector<std::uint16_t> sigma(sample_count + t + 1, 0);
    for (Index n = 1; n < sigma.size(); ++n)
        sigma[n] = static_cast<std::uint16_t>(sigma[n / base] + n % base);
    std::uint16_t max_sigma = 0;
    for (auto s : sigma) max_sigma = std::max(max_sigma, s);
    std::vector<ComplexApprox> unit(max_sigma + 1u);
    for (std::uint32_t s = 0; s <= max_sigma; ++s)
        unit[s] = ComplexApprox::unit_circle(theta * static_cast<double>(s));
    double re = 0.0, im = 0.0;
    for (Index n = 0; n < sample_count; ++n) {
        ComplexApprox term = unit[sigma[n + t]] * unit[sigma[n]].conjugate();
        re += term.re;
        im += term.im;
    }
    const double inv = 1.0 / static_cast<double>(sample_count);
    return {re * inv, im * inv};
}

RunLengths binary_runs(Index n) {
    if (n == 0 || n % 2 == 0)
        throw invalid_input("binary_runs: need an odd positive integer, got " +
                            std::to_string(n));
    int top = 63;
    while (((n >> top) & 1u) == 0) --top;
    RunLengths out;
    std::uint32_t current_bit = 1, run = 0;
    for (int i = top; i >= 0; --i) {
        std::uint32_t bit = (n >> i) & 1u;
        if (bit == current_bit) {
            ++run;
        } else {
            out.runs.push_back(run);
            current_bit = bit;
            run = 1;
        }
    }
    out.runs.push_back(run);
    return out;
}

BigInt cf_numerator(const RunLengths& rl) {
    if (rl.runs.empty()) throw invalid_input("cf_numerator: empty run list");
    BigInt prev(1), prev2(0);  // p(-1), p(-2)
    for (std::uint32_t k : rl.runs) {
        if (k == 0) throw invalid_input("cf_numerator: run lengths must be positive");
        BigInt next = BigInt(k) * prev + prev2;
        prev2 = prev;
        prev = next;
    }
    return prev;
}

bool reversed_cf_same_numerator(const RunLengths& rl) {
    RunLengths reversed;
    reversed.runs.assign(rl.runs.rbegin(), rl.runs.rend());
    return cf_numerator(rl) == cf_numerator(reversed);
}

std::optional<Index> northshield_symmetry(unsigned k) {
    if (k > 12) throw invalid_input("northshield_symmetry: k <= 12 at desk scale");
    LinearRep<QuadExt> rep = northshield_rep();
    const Index block = pow3(k);
    const Index next = block * 3;
    return find_first_violation(Index{0}, block + 1, [&](Index m) {
        return !(eval(rep, block + m) == eval(rep, next - m));
    });
}

double growth_exponent() {
    return std::log(1.0 + std::sqrt(2.0)) / std::log(3.0);
}

double growth_ratio(Index n, double b_value) {
    return 2.0 * b_value / std::pow(2.0 * static_cast<double>(n), growth_exponent());
}

GrowthReport growth_blocks(unsigned k_max) {
    if (k_max < 2 || k_max > 13)
        throw invalid_input("growth_blocks: k_max must lie in [2, 13]");
    const Index limit = pow3(k_max + 1);

    // b(n) = a + c*sqrt(2) with 64-bit coordinates; the block maxima grow
    // like n^0.81, so coordinates stay far below the overflow line even at
    // the largest permitted sweep (max coordinate ~1.2e5 at 3^14).
    struct Coord {
        std::int64_t a, c;
    };
    std::vector<Coord> b(limit + 1);
    b[0] = {0, 0};
    b[1] = {1, 0};
    for (Index n = 2; n <= limit; ++n) {
        Index m = n / 3;
        switch (n % 3) {
            case 0:
                b[n] = b[m];
                break;
            case 1:  // sqrt2*b(m) + b(m+1)
                b[n] = {2 * b[m].c + b[m + 1].a, b[m].a + b[m + 1].c};
                break;
            default:  // b(m) + sqrt2*b(m+1)
                b[n] = {b[m].a + 2 * b[m + 1].c, b[m].c + b[m + 1].a};
                break;
        }
    }

    const double root2 = std::sqrt(2.0);
    GrowthReport report{growth_exponent(), {}};
    for (unsigned k = 2; k <= k_max; ++k) {
        const Index lo = pow3(k), hi = pow3(k + 1);
        GrowthBlock block{k, -1.0, lo};
        for (Index n = lo; n < hi; ++n) {
            double value = static_cast<double>(b[n].a) + static_cast<double>(b[n].c) * root2;
            double ratio = growth_ratio(n, value);
            if (ratio > block.max_ratio) {
                block.max_ratio = ratio;
                block.argmax = n;
            }
        }
        report.blocks.push_back(block);
    }
    return report;
}

} // namespace qreg
