// Command-line front end: sequence evaluation, digit-reversal sweeps,
// certificate checking and solving, and structured reports, with stable JSON
// output for scripting. Exit codes: 0 pass, 1 mathematical failure, 2 usage
// error.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qreg/digits.hpp"
#include "qreg/sequences.hpp"
#include "qreg/solve.hpp"

using json = nlohmann::ordered_json;
using namespace qreg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string family;
    std::string tau = "0", sigma = "0";
    std::string x = "0", y = "0";
    unsigned base = 2;
    std::string theta = "0";
    std::uint64_t n = 0;
    bool has_n = false;
    std::uint64_t from = 0, to = 0;
    bool has_range = false;
    std::uint64_t limit = 0;
    double tol = 1e-9;
    bool has_tol = false;
    unsigned k = 2;
    unsigned kmax = 12;
    std::uint64_t seed = 20170701;
    std::string output = "json";
};

double parse_theta(const std::string& text) {
    if (text.find('/') != std::string::npos) return Rational::from_string(text).to_double();
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw parse_error("cannot parse theta \"" + text + "\"");
    return v;
}

void emit(const json& doc, const std::string& output, const std::string& plain) {
    if (output == "plain")
        std::cout << plain << "\n";
    else
        std::cout << doc.dump() << "\n";
}

// ---- eval ----------------------------------------------------------------

template <class R>
json eval_values_json(const LinearRep<R>& rep, Index lo, Index hi, std::string* plain) {
    json values = json::array();
    for (Index n = lo; n < hi; ++n) {
        std::string s = value_to_string(eval(rep, n));
        values.push_back({{"n", n}, {"value", s}});
        if (!plain->empty()) *plain += "\n";
        *plain += s;
    }
    return values;
}

int run_eval(const Options& opt) {
    if (!opt.has_n && !opt.has_range) {
        std::cerr << "eval: provide --n or --from/--to\n";
        return kExitUsage;
    }
    Index lo = opt.has_n ? opt.n : opt.from;
    Index hi = opt.has_n ? opt.n + 1 : opt.to;
    if (hi <= lo) {
        std::cerr << "eval: empty index range\n";
        return kExitUsage;
    }

    json doc{{"family", opt.family}};
    std::string plain;
    if (opt.family == "northshield") {
        doc["values"] = eval_values_json(northshield_rep(), lo, hi, &plain);
    } else if (opt.family == "parametric") {
        auto rep = parametric_rep(Rational::from_string(opt.tau), Rational::from_string(opt.sigma));
        doc["values"] = eval_values_json(rep, lo, hi, &plain);
    } else if (opt.family == "stern") {
        auto rep = stern_rep(Rational::from_string(opt.x), Rational::from_string(opt.y));
        doc["values"] = eval_values_json(rep, lo, hi, &plain);
    } else if (opt.family == "stern-poly") {
        json values = json::array();
        for (Index n = lo; n < hi; ++n) {
            std::string s = stern_poly(n).to_string();
            values.push_back({{"n", n}, {"value", s}});
            if (!plain.empty()) plain += "\n";
            plain += s;
        }
        doc["values"] = values;
    } else if (opt.family == "gamma") {
        auto rep = gamma_rep(opt.base, parse_theta(opt.theta));
        json values = json::array();
        for (Index n = lo; n < hi; ++n) {
            ComplexApprox z = eval(rep, n);
            values.push_back({{"n", n}, {"re", z.re}, {"im", z.im}});
            if (!plain.empty()) plain += "\n";
            plain += z.to_string();
        }
        doc["values"] = values;
    } else {
        std::cerr << "eval: unknown family \"" << opt.family << "\"\n";
        return kExitUsage;
    }
    emit(doc, opt.output, plain);
    return kExitPass;
}

// ---- verify ----------------------------------------------------------------

int report_reversal(const Options& opt, std::optional<Index> counterexample) {
    json doc;
    if (!counterexample) {
        doc = {{"pass", true}, {"checked", opt.limit}};
        emit(doc, opt.output, "pass (checked " + std::to_string(opt.limit) + ")");
        return kExitPass;
    }
    doc = {{"pass", false}, {"counterexample", *counterexample}};
    emit(doc, opt.output, "counterexample at n = " + std::to_string(*counterexample));
    return kExitMathFailure;
}

int run_verify(const Options& opt) {
    if (opt.limit < 2) {
        std::cerr << "verify: need --limit >= 2\n";
        return kExitUsage;
    }
    if (opt.family == "northshield")
        return report_reversal(opt, verify_reversal(northshield_rep(), opt.limit));
    if (opt.family == "parametric") {
        auto rep = parametric_rep(Rational::from_string(opt.tau), Rational::from_string(opt.sigma));
        return report_reversal(opt, verify_reversal(rep, opt.limit));
    }
    if (opt.family == "stern") {
        auto rep = stern_rep(Rational::from_string(opt.x), Rational::from_string(opt.y));
        return report_reversal(opt, verify_reversal(rep, opt.limit));
    }
    if (opt.family == "stern-poly") {
        if (opt.limit > (Index{1} << 14)) {
            std::cerr << "verify: stern-poly sweeps are capped at 2^14\n";
            return kExitUsage;
        }
        Index table_size = std::bit_ceil(opt.limit);
        auto table = stern_poly_table(std::max<Index>(table_size, 2));
        auto counterexample = verify_reversal_fn(
            2, opt.limit, [&](Index n) -> const BiPoly& { return table[n]; },
            [](const BiPoly& a, const BiPoly& b) { return a == b; });
        return report_reversal(opt, counterexample);
    }
    if (opt.family == "gamma") {
        auto rep = gamma_rep(opt.base, parse_theta(opt.theta));
        return report_reversal(opt, verify_reversal(rep, opt.limit, opt.tol));
    }
    std::cerr << "verify: unknown family \"" << opt.family << "\"\n";
    return kExitUsage;
}

// ---- certificate ----------------------------------------------------------

template <class R>
json report_to_json(const ResidualReport<R>& report) {
    json residuals = json::array();
    for (const auto& r : report.residuals) residuals.push_back(value_to_string(r));
    return {{"pass", report.pass},
            {"residuals", residuals},
            {"det", value_to_string(report.det)},
            {"nonzero_ab", report.nonzero_ab}};
}

template <class R>
int emit_check(const ResidualReport<R>& report, const Options& opt) {
    emit(report_to_json(report), opt.output,
         std::string(report.pass ? "pass" : "fail") + " (det " + value_to_string(report.det) + ")");
    return report.pass ? kExitPass : kExitMathFailure;
}

int run_certificate_check(const Options& opt) {
    if (opt.family == "northshield")
        return emit_check(check(northshield_rep(), northshield_certificate()), opt);
    if (opt.family == "parametric") {
        Rational tau = Rational::from_string(opt.tau), sigma = Rational::from_string(opt.sigma);
        return emit_check(check(parametric_rep(tau, sigma), parametric_certificate(tau, sigma)),
                          opt);
    }
    if (opt.family == "stern") {
        Rational x = Rational::from_string(opt.x), y = Rational::from_string(opt.y);
        auto cert = stern_certificate(x, y);
        auto rep = stern_rep(x, y);
        if (const auto* rational_cert = std::get_if<Certificate<Rational>>(&cert))
            return emit_check(check(rep, *rational_cert), opt);
        const auto& ext_cert = std::get<Certificate<QuadExt>>(cert);
        auto lifted = lift_to_quadext(rep, ext_cert.a.radicand());
        return emit_check(check(lifted, ext_cert), opt);
    }
    if (opt.family == "gamma") {
        double theta = parse_theta(opt.theta);
        double tol = opt.has_tol ? opt.tol : 1e-10;
        return emit_check(check(gamma_rep(opt.base, theta), gamma_certificate(opt.base, theta), tol),
                          opt);
    }
    std::cerr << "certificate check: unsupported family \"" << opt.family << "\"\n";
    return kExitUsage;
}

template <class F>
json certificate_to_json(const Certificate<F>& cert, const std::string& field) {
    return {{"solved", true},
            {"a", value_to_string(cert.a)},
            {"b", value_to_string(cert.b)},
            {"c", value_to_string(cert.c)},
            {"d", value_to_string(cert.d)},
            {"field", field}};
}

int emit_solve_failure(const SolveFailure& failure, const Options& opt) {
    emit(json{{"solved", false}, {"witness", failure.reason}}, opt.output,
         "no certificate: " + failure.reason);
    return kExitMathFailure;
}

int emit_rational_solve(const RationalSolveResult& result, const Options& opt) {
    if (const auto* cert = std::get_if<Certificate<Rational>>(&result)) {
        emit(certificate_to_json(*cert, "Q"), opt.output,
             "a=" + value_to_string(cert->a) + " b=" + value_to_string(cert->b) +
                 " c=" + value_to_string(cert->c) + " d=" + value_to_string(cert->d));
        return kExitPass;
    }
    if (const auto* cert = std::get_if<Certificate<QuadExt>>(&result)) {
        std::string field = "Q(sqrt(" + cert->a.radicand().to_string() + "))";
        emit(certificate_to_json(*cert, field), opt.output,
             "a=" + value_to_string(cert->a) + " b=" + value_to_string(cert->b) +
                 " c=" + value_to_string(cert->c) + " d=" + value_to_string(cert->d));
        return kExitPass;
    }
    return emit_solve_failure(std::get<SolveFailure>(result), opt);
}

int run_certificate_solve(const Options& opt) {
    if (opt.family == "northshield") {
        auto result = certificate_solve(northshield_rep());
        if (const auto* cert = std::get_if<Certificate<QuadExt>>(&result)) {
            emit(certificate_to_json(*cert, "Q(sqrt(2))"), opt.output,
                 "a=" + value_to_string(cert->a) + " b=" + value_to_string(cert->b) +
                     " c=" + value_to_string(cert->c) + " d=" + value_to_string(cert->d));
            return kExitPass;
        }
        return emit_solve_failure(std::get<SolveFailure>(result), opt);
    }
    if (opt.family == "parametric") {
        auto rep = parametric_rep(Rational::from_string(opt.tau), Rational::from_string(opt.sigma));
        return emit_rational_solve(certificate_solve(rep), opt);
    }
    if (opt.family == "stern") {
        auto rep = stern_rep(Rational::from_string(opt.x), Rational::from_string(opt.y));
        return emit_rational_solve(certificate_solve(rep), opt);
    }
    std::cerr << "certificate solve: supported for exact families only (northshield, "
                 "parametric, stern)\n";
    return kExitUsage;
}

// ---- report ----------------------------------------------------------------

int run_report_symmetry(const Options& opt) {
    auto violation = northshield_symmetry(opt.k);
    Index checked = 1;
    for (unsigned i = 0; i < opt.k; ++i) checked *= 3;
    ++checked;
    if (!violation) {
        emit(json{{"pass", true}, {"k", opt.k}, {"checked", checked}}, opt.output,
             "pass (k=" + std::to_string(opt.k) + ")");
        return kExitPass;
    }
    emit(json{{"pass", false}, {"k", opt.k}, {"counterexample_m", *violation}}, opt.output,
         "counterexample at m = " + std::to_string(*violation));
    return kExitMathFailure;
}

int run_report_growth(const Options& opt) {
    GrowthReport report = growth_blocks(opt.kmax);
    json blocks = json::array();
    std::string plain = "exponent " + std::to_string(report.exponent);
    for (const auto& blk : report.blocks) {
        blocks.push_back({{"k", blk.k}, {"max_ratio", blk.max_ratio}, {"argmax", blk.argmax}});
        plain += "\nk=" + std::to_string(blk.k) + " max=" + std::to_string(blk.max_ratio) +
                 " argmax=" + std::to_string(blk.argmax);
    }
    emit(json{{"exponent", report.exponent}, {"blocks", blocks}}, opt.output, plain);
    return kExitPass;
}

int run_report_cf(const Options& opt) {
    if (opt.limit < 2) {
        std::cerr << "report cf: need --limit >= 2\n";
        return kExitUsage;
    }
    std::optional<Index> bad;
    Index checked = 0;
    for (Index n = 1; n < opt.limit && !bad; n += 2) {
        ++checked;
        if (cf_numerator(binary_runs(n)) != stern_number(n)) bad = n;
    }
    constexpr int kRandomVectors = 500;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<std::uint32_t> entry_dist(1, 5);
    int palindromic_ok = 0;
    for (int i = 0; i < kRandomVectors; ++i) {
        RunLengths runs;
        int len = len_dist(rng);
        for (int j = 0; j < len; ++j) runs.runs.push_back(entry_dist(rng));
        if (reversed_cf_same_numerator(runs)) ++palindromic_ok;
    }
    bool pass = !bad && palindromic_ok == kRandomVectors;
    json doc{{"pass", pass},
             {"checked_odd", checked},
             {"random_vectors", kRandomVectors},
             {"random_vectors_ok", palindromic_ok},
             {"seed", opt.seed}};
    if (bad) doc["counterexample"] = *bad;
    emit(doc, opt.output,
         pass ? "pass (" + std::to_string(checked) + " odd indices)" : "FAIL");
    return pass ? kExitPass : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for digit-reversal-invariant 2x2 matrix sequences"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    app.add_option("--seed", opt.seed, "seed for randomized property runs");
    app.add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"json", "plain"}));

    auto add_family_flags = [&](CLI::App* cmd, bool with_family = true) {
        if (with_family)
            cmd->add_option("--family", opt.family, "sequence family")
                ->required()
                ->check(CLI::IsMember({"northshield", "parametric", "stern", "stern-poly",
                                       "gamma"}));
        cmd->add_option("--tau", opt.tau, "parametric: tau as a rational p/q");
        cmd->add_option("--sigma", opt.sigma, "parametric: sigma as a rational p/q");
        cmd->add_option("--x", opt.x, "stern: x as a rational p/q");
        cmd->add_option("--y", opt.y, "stern: y as a rational p/q");
        cmd->add_option("--base", opt.base, "gamma: base q >= 2");
        cmd->add_option("--theta", opt.theta, "gamma: theta (decimal or p/q)");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate sequence values");
    eval_cmd->fallthrough();
    add_family_flags(eval_cmd);
    eval_cmd->add_option("--n", opt.n, "single index");
    eval_cmd->add_option("--from", opt.from, "range start (inclusive)");
    eval_cmd->add_option("--to", opt.to, "range end (exclusive)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "sweep x(n) = x(reverse(n)) up to a limit");
    verify_cmd->fallthrough();
    add_family_flags(verify_cmd);
    verify_cmd->add_option("--limit", opt.limit, "exclusive sweep limit")->required();
    verify_cmd->add_option("--tol", opt.tol, "tolerance for gamma sweeps");

    CLI::App* cert_cmd = app.add_subcommand("certificate", "reversal certificates");
    cert_cmd->fallthrough();
    cert_cmd->require_subcommand(1);
    CLI::App* check_cmd = cert_cmd->add_subcommand("check", "validate the built-in certificate");
    check_cmd->fallthrough();
    add_family_flags(check_cmd);
    check_cmd->add_option("--tol", opt.tol, "tolerance for gamma residuals");
    CLI::App* solve_cmd = cert_cmd->add_subcommand("solve", "solve for a certificate");
    solve_cmd->fallthrough();
    add_family_flags(solve_cmd);

    CLI::App* report_cmd = app.add_subcommand("report", "structured identity reports");
    report_cmd->fallthrough();
    report_cmd->require_subcommand(1);
    CLI::App* symmetry_cmd = report_cmd->add_subcommand("symmetry", "b(3^k+m) = b(3^(k+1)-m)");
    symmetry_cmd->fallthrough();
    symmetry_cmd->add_option("--k", opt.k, "block exponent k")->required();
    CLI::App* growth_cmd = report_cmd->add_subcommand("growth", "per-block growth maxima");
    growth_cmd->fallthrough();
    growth_cmd->add_option("--kmax", opt.kmax, "largest block exponent (2..13)")->required();
    CLI::App* cf_cmd =
        report_cmd->add_subcommand("cf", "continued-fraction numerators vs stern numbers");
    cf_cmd->fallthrough();
    cf_cmd->add_option("--limit", opt.limit, "exclusive odd-index limit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    opt.has_n = eval_cmd->count("--n") > 0;
    opt.has_range = eval_cmd->count("--to") > 0;
    opt.has_tol = verify_cmd->count("--tol") > 0 || check_cmd->count("--tol") > 0;

    try {
        if (eval_cmd->parsed()) return run_eval(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
        if (cert_cmd->parsed()) {
            if (check_cmd->parsed()) return run_certificate_check(opt);
            return run_certificate_solve(opt);
        }
        if (report_cmd->parsed()) {
            if (symmetry_cmd->parsed()) return run_report_symmetry(opt);
            if (growth_cmd->parsed()) return run_report_growth(opt);
            return run_report_cf(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
