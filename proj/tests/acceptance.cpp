// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Tolerances are pinned here and nowhere else.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracle_helpers.hpp"
#include "qreg/sequences.hpp"
#include "qreg/solve.hpp"

using namespace qreg;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string label)
        : id_(id), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail = "") {
        if (!ok && note_.empty()) note_ = detail.empty() ? "condition failed" : detail;
        pass_ = pass_ && ok;
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                          .count();
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", pass_ ? "PASS" : "FAIL", id_,
                    label_.c_str(), secs, note_.empty() ? "" : " -- ", note_.c_str());
        std::fflush(stdout);
        if (!pass_) ++failures;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    int id_;
    std::string label_;
    bool pass_ = true;
    std::string note_;
    std::chrono::steady_clock::time_point start_;
};

QuadExt q2(int rat, int irr) { return QuadExt(Rational(2), Rational(rat), Rational(irr)); }

void criterion_1_golden_table() {
    Criterion c(1, "value table n=0..27 exact in Z[sqrt2], under 1s");
    const int golden[28][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 2}, {3, 0}, {0, 1},
                               {3, 0}, {0, 2}, {1, 0}, {0, 3}, {5, 0}, {0, 2}, {7, 0},
                               {0, 5}, {3, 0}, {0, 4}, {5, 0}, {0, 1}, {5, 0}, {0, 4},
                               {3, 0}, {0, 5}, {7, 0}, {0, 2}, {5, 0}, {0, 3}, {1, 0}};
    auto rep = northshield_rep();
    for (int n = 0; n < 28; ++n)
        c.require(eval(rep, static_cast<Index>(n)) == q2(golden[n][0], golden[n][1]),
                  "table mismatch at n=" + std::to_string(n));
    c.require(c.elapsed() < 1.0, "exceeded 1s");
}

void criterion_2_reversal_sweep() {
    Criterion c(2, "b(n) = b(reverse(n)) exactly for n < 3^10, single-threaded under 30s");
    auto rep = northshield_rep();
    auto counterexample = verify_reversal(rep, 59049, std::nullopt, /*workers=*/1);
    c.require(!counterexample,
              counterexample ? "counterexample at n=" + std::to_string(*counterexample) : "");
    c.require(c.elapsed() < 30.0, "exceeded 30s");
}

void criterion_3_symbolic_residuals() {
    Criterion c(3, "parametric residuals are identically zero polynomials");
    BiPoly tau = BiPoly::variable1("tau", "sigma");
    BiPoly sigma = BiPoly::variable2("tau", "sigma");
    auto rep = parametric_rep(tau, sigma);
    auto cert = parametric_certificate(tau, sigma);
    c.require(cert.det() == one_like(tau), "symbolic determinant is not 1");
    for (std::uint32_t digit = 0; digit < 3; ++digit)
        c.require(residual(rep, cert, digit).is_zero(),
                  "nonzero residual polynomial at digit " + std::to_string(digit));
}

void criterion_4_base2_family() {
    Criterion c(4, "base-2 family: certificates and reversal, numeric and symbolic");
    std::mt19937_64 rng(0xacc4);
    auto sample = [&]() {
        for (;;) {
            Rational r = testing::random_rational(rng, 6);
            if (!r.is_zero() && !r.is_one()) return r;
        }
    };
    for (int i = 0; i < 10; ++i) {
        Rational x = sample(), y = sample();
        auto rep = stern_rep(x, y);
        auto cert = stern_certificate(x, y);
        if (const auto* rational_cert = std::get_if<Certificate<Rational>>(&cert)) {
            c.require(check(rep, *rational_cert).pass, "rational certificate failed");
        } else {
            const auto& ext = std::get<Certificate<QuadExt>>(cert);
            c.require(check(lift_to_quadext(rep, ext.a.radicand()), ext).pass,
                      "extension certificate failed");
        }
        auto counterexample = verify_reversal(rep, Index{1} << 12);
        c.require(!counterexample, "reversal failed for sampled (x, y)");
    }
    auto table = stern_poly_table(Index{1} << 10);
    auto poly_counterexample = verify_reversal_fn(
        2, Index{1} << 10, [&](Index n) -> const BiPoly& { return table[n]; },
        [](const BiPoly& a, const BiPoly& b) { return a == b; });
    c.require(!poly_counterexample, "symbolic polynomial reversal failed");
}

void criterion_5_correlations() {
    Criterion c(5, "correlation family: residuals 1e-10, reversal 1e-9, averages 1e-2");
    const double thetas[3] = {0.1, 1.0 / 3.0, 0.7};
    for (unsigned q : {2u, 3u, 5u}) {
        for (double theta : thetas) {
            auto rep = gamma_rep(q, theta);
            c.require(check(rep, gamma_certificate(q, theta), 1e-10).pass,
                      "certificate failed at q=" + std::to_string(q));
            Index limit = 1;
            for (int i = 0; i < 7; ++i) limit *= q;
            auto counterexample = verify_reversal(rep, limit, 1e-9);
            c.require(!counterexample, "reversal failed at q=" + std::to_string(q));
        }
    }
    std::mt19937_64 rng(0xacc5);
    for (unsigned q : {2u, 3u}) {
        Index t_range = 1;
        for (int i = 0; i < 5; ++i) t_range *= q;
        std::uniform_int_distribution<Index> t_dist(0, t_range - 1);
        for (double theta : thetas) {
            auto rep = gamma_rep(q, theta);
            for (int i = 0; i < 20; ++i) {
                Index t = t_dist(rng);
                ComplexApprox via_rep = eval(rep, t);
                ComplexApprox via_average = gamma_empirical(q, theta, t, 1000000);
                c.require(via_rep.approx_equal(via_average, 1e-2),
                          "average mismatch at q=" + std::to_string(q) +
                              " t=" + std::to_string(t));
            }
        }
    }
}

template <class R>
void run_word_identities(Criterion& c, const LinearRep<R>& rep, const Certificate<R>& cert,
                         const std::string& family, std::size_t max_len,
                         std::optional<double> tol, std::mt19937_64& rng) {
    for (std::uint32_t digit = 0; digit < rep.base; ++digit)
        c.require(s2s3_relation(rep, cert, digit, tol), family + ": scalar relation failed");
    for (int i = 0; i < 1000; ++i) {
        DigitWord w = testing::random_word(rng, rep.base, max_len);
        if (!proof_identity_left(rep, cert, w, tol) ||
            !proof_identity_right(rep, cert, w, tol)) {
            c.require(false, family + ": induction identity failed");
            return;
        }
    }
}

void criterion_6_proof_identities() {
    Criterion c(6, "induction identities and scalar relation on 1000 random words per family");
    std::mt19937_64 rng(0xacc6);

    run_word_identities(c, northshield_rep(), northshield_certificate(), "northshield", 10,
                        std::nullopt, rng);

    BiPoly tau = BiPoly::variable1("tau", "sigma");
    BiPoly sigma = BiPoly::variable2("tau", "sigma");
    run_word_identities(c, parametric_rep(tau, sigma), parametric_certificate(tau, sigma),
                        "parametric-symbolic", 7, std::nullopt, rng);

    Rational t(2), s(5);
    run_word_identities(c, parametric_rep(t, s), parametric_certificate(t, s),
                        "parametric(2,5)", 10, std::nullopt, rng);

    {
        Rational x(2), y(3);
        auto ext = std::get<Certificate<QuadExt>>(stern_certificate(x, y));
        run_word_identities(c, lift_to_quadext(stern_rep(x, y), ext.a.radicand()), ext,
                            "stern(2,3)", 10, std::nullopt, rng);
    }
    {
        Rational x(5), y(5);
        auto rational_cert = std::get<Certificate<Rational>>(stern_certificate(x, y));
        run_word_identities(c, stern_rep(x, y), rational_cert, "stern(5,5)", 12, std::nullopt,
                            rng);
    }

    run_word_identities(c, gamma_rep(2, 0.3), gamma_certificate(2, 0.3), "gamma(2)", 10, 1e-9,
                        rng);
    run_word_identities(c, gamma_rep(3, 1.0 / 3.0), gamma_certificate(3, 1.0 / 3.0), "gamma(3)",
                        8, 1e-9, rng);
    run_word_identities(c, gamma_rep(5, 0.7), gamma_certificate(5, 0.7), "gamma(5)", 8, 1e-9,
                        rng);
}

void criterion_7_solver() {
    Criterion c(7, "solver: canonical base-3 certificate and 10 random parametric families");
    auto result = certificate_solve(northshield_rep());
    if (auto* cert = std::get_if<Certificate<QuadExt>>(&result)) {
        c.require(cert->a == q2(1, 0) && cert->b == q2(1, 0), "unexpected a, b");
        c.require(cert->c == QuadExt(Rational(2), Rational(-1, 2), Rational(0)), "unexpected c");
        c.require(cert->d == QuadExt(Rational(2), Rational(1, 2), Rational(0)), "unexpected d");
        c.require(check(northshield_rep(), *cert).pass, "residual re-check failed");
    } else {
        c.require(false, "solver failed on the base-3 family");
    }
    std::mt19937_64 rng(0xacc7);
    for (int i = 0; i < 10; ++i) {
        Rational tau = testing::random_rational(rng, 9);
        Rational sigma = testing::random_rational(rng, 9);
        auto rep = parametric_rep(tau, sigma);
        auto solved = certificate_solve(rep);
        if (const auto* cert = std::get_if<Certificate<Rational>>(&solved)) {
            c.require(check(rep, *cert).pass, "solved certificate fails check");
        } else if (const auto* ext = std::get_if<Certificate<QuadExt>>(&solved)) {
            c.require(check(lift_to_quadext(rep, ext->a.radicand()), *ext).pass,
                      "solved extension certificate fails check");
        } else {
            c.require(false, "solver failed on random (tau, sigma)");
        }
    }
}

void criterion_8_cf_bridge() {
    Criterion c(8, "continued-fraction numerators equal stern numbers; reversed runs agree");
    for (Index n = 1; n < (Index{1} << 14); n += 2) {
        if (cf_numerator(binary_runs(n)) != stern_number(n)) {
            c.require(false, "bridge mismatch at n=" + std::to_string(n));
            break;
        }
    }
    std::mt19937_64 rng(0xacc8);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<std::uint32_t> entry(1, 5);
    for (int i = 0; i < 500; ++i) {
        RunLengths runs;
        int L = len(rng);
        for (int j = 0; j < L; ++j) runs.runs.push_back(entry(rng));
        if (!reversed_cf_same_numerator(runs)) {
            c.require(false, "reversed run list changed the numerator");
            break;
        }
    }
}

void criterion_9_symmetry() {
    Criterion c(9, "b(3^k + m) = b(3^(k+1) - m) for k <= 8, all m, exact");
    for (unsigned k = 0; k <= 8; ++k) {
        auto violation = northshield_symmetry(k);
        c.require(!violation, violation ? "violated at k=" + std::to_string(k) +
                                              " m=" + std::to_string(*violation)
                                        : "");
    }
}

void criterion_10_growth() {
    Criterion c(10, "growth probe: blocks k=2..12 reported, final in [0.8, 1.001], frozen bits");
    // Frozen oracle values: block maxima computed independently from the
    // defining recurrence (64-bit Z[sqrt2] coordinates, IEEE doubles).
    const double frozen[11] = {
        0x1.06897183dd048p+0, 0x1.02570b7213bd5p+0, 0x1.00cf6545f097fp+0,
        0x1.004689a748222p+0, 0x1.0017c37efac56p+0, 0x1.0007f7273f42cp+0,
        0x1.0002a9b186ba3p+0, 0x1.0000e392e9020p+0, 0x1.00004beacbef9p+0,
        0x1.00001950e0e53p+0, 0x1.00000870be12fp+0};
    const Index frozen_argmax[11] = {13,    40,    121,    364,    1093, 3280,
                                     9841,  29524, 88573,  265720, 797161};
    GrowthReport report = growth_blocks(12);
    c.require(report.blocks.size() == 11, "expected 11 blocks");
    for (std::size_t i = 0; i < report.blocks.size() && i < 11; ++i) {
        c.require(report.blocks[i].max_ratio == frozen[i],
                  "bitwise mismatch in block k=" + std::to_string(report.blocks[i].k));
        c.require(report.blocks[i].argmax == frozen_argmax[i],
                  "argmax mismatch in block k=" + std::to_string(report.blocks[i].k));
    }
    double last = report.blocks.back().max_ratio;
    c.require(0.8 <= last && last <= 1.001, "final block maximum out of range");
    GrowthReport rerun = growth_blocks(12);
    for (std::size_t i = 0; i < report.blocks.size(); ++i)
        c.require(rerun.blocks[i].max_ratio == report.blocks[i].max_ratio &&
                      rerun.blocks[i].argmax == report.blocks[i].argmax,
                  "re-run is not bit-identical");
}

template <class R>
bool oracle_matches(const LinearRep<R>& rep, Index limit, std::optional<double> tol) {
    auto oracle = recurrence_oracle(rep, limit);
    for (Index n = 0; n < limit; ++n)
        if (!values_equal(oracle[n], eval(rep, n), tol)) return false;
    return true;
}

void criterion_11_oracle_equivalence() {
    Criterion c(11, "matrix-word evaluation equals the bottom-up recurrence oracle");
    c.require(oracle_matches(northshield_rep(), 6561, std::nullopt), "base-3 family");
    c.require(oracle_matches(parametric_rep(Rational(2), Rational(5)), 6561, std::nullopt),
              "parametric(2,5)");
    BiPoly tau = BiPoly::variable1("tau", "sigma");
    BiPoly sigma = BiPoly::variable2("tau", "sigma");
    c.require(oracle_matches(parametric_rep(tau, sigma), 729, std::nullopt),
              "parametric symbolic");
    c.require(oracle_matches(stern_rep(Rational(1), Rational(1)), Index{1} << 12, std::nullopt),
              "stern(1,1)");
    c.require(oracle_matches(stern_rep(Rational(2), Rational(3)), Index{1} << 12, std::nullopt),
              "stern(2,3)");
    const double thetas[3] = {0.3, 1.0 / 3.0, 0.7};
    unsigned qs[3] = {2, 3, 5};
    for (int i = 0; i < 3; ++i) {
        Index limit = 1;
        for (int j = 0; j < 7; ++j) limit *= qs[i];
        c.require(oracle_matches(gamma_rep(qs[i], thetas[i]), limit, 1e-9),
                  "gamma base " + std::to_string(qs[i]));
    }
}

} // namespace

int main() {
    criterion_1_golden_table();
    criterion_2_reversal_sweep();
    criterion_3_symbolic_residuals();
    criterion_4_base2_family();
    criterion_5_correlations();
    criterion_6_proof_identities();
    criterion_7_solver();
    criterion_8_cf_bridge();
    criterion_9_symmetry();
    criterion_10_growth();
    criterion_11_oracle_equivalence();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
