#include <doctest.h>

#include <random>

#include "oracle_helpers.hpp"
#include "qreg/sequences.hpp"
#include "qreg/solve.hpp"

using namespace qreg;

TEST_CASE("solver reproduces the canonical base-3 certificate") {
    auto result = certificate_solve(northshield_rep());
    REQUIRE(std::holds_alternative<Certificate<QuadExt>>(result));
    auto cert = std::get<Certificate<QuadExt>>(result);
    CHECK(cert.a == to_quadext(Rational(1), Rational(2)));
    CHECK(cert.b == to_quadext(Rational(1), Rational(2)));
    CHECK(cert.c == to_quadext(Rational(-1, 2), Rational(2)));
    CHECK(cert.d == to_quadext(Rational(1, 2), Rational(2)));
}

TEST_CASE("solver matches the closed-form certificate across the parametric family") {
    std::mt19937_64 rng(0x50f3);
    for (int i = 0; i < 12; ++i) {
        Rational tau = testing::random_rational(rng, 8);
        Rational sigma = testing::random_rational(rng, 8);
        auto rep = parametric_rep(tau, sigma);
        auto result = certificate_solve(rep);
        REQUIRE(std::holds_alternative<Certificate<Rational>>(result));
        auto cert = std::get<Certificate<Rational>>(result);
        auto closed = parametric_certificate(tau, sigma);
        CHECK(cert.a == closed.a);
        CHECK(cert.b == closed.b);
        CHECK(cert.c == closed.c);
        CHECK(cert.d == closed.d);
        CHECK(check(rep, cert).pass);
    }
}

TEST_CASE("solver on a constant family returns the gauge choice") {
    Rational zero(0), one(1);
    Mat2<Rational> id{one, zero, zero, one};
    LinearRep<Rational> rep(3, {id, id, id}, Vec2<Rational>{zero, one});
    auto result = certificate_solve(rep);
    REQUIRE(std::holds_alternative<Certificate<Rational>>(result));
    auto cert = std::get<Certificate<Rational>>(result);
    CHECK(cert.a == one);
    CHECK(cert.b == one);
    CHECK(cert.c == zero);
    CHECK(cert.d == one);  // S = [[1,1],[0,1]]
}

TEST_CASE("solver handles the base-2 family at equal parameters rationally") {
    // at x = y the certificate quantity 4*gamma^2 collapses to 1
    auto rep = stern_rep(Rational(2), Rational(2));
    auto result = certificate_solve(rep);
    REQUIRE(!std::holds_alternative<SolveFailure>(result));
    if (auto* cert = std::get_if<Certificate<Rational>>(&result)) {
        CHECK(check(rep, *cert).pass);
        CHECK(!verify_reversal(rep, 1024));
    } else {
        auto ext_cert = std::get<Certificate<QuadExt>>(result);
        auto lifted = lift_to_quadext(rep, ext_cert.a.radicand());
        CHECK(check(lifted, ext_cert).pass);
    }
}

TEST_CASE("solver adjoins a square root when the quadratic demands one") {
    auto rep = stern_rep(Rational(2), Rational(3));
    auto result = certificate_solve(rep);
    REQUIRE(!std::holds_alternative<SolveFailure>(result));
    if (auto* cert = std::get_if<Certificate<QuadExt>>(&result)) {
        auto lifted = lift_to_quadext(rep, cert->a.radicand());
        CHECK(check(lifted, *cert).pass);
    } else {
        CHECK(check(rep, std::get<Certificate<Rational>>(result)).pass);
    }
    CHECK(!verify_reversal(rep, 1024));
}

TEST_CASE("solver reports an honest witness when a*b = 0 is forced") {
    // A(0) with a1 - a4 != 0 and a2 = 0 forces u = 0
    Rational zero(0), one(1);
    Mat2<Rational> m0{one, zero, zero, Rational(2)};
    Mat2<Rational> m1{one, zero, zero, one};
    LinearRep<Rational> rep(2, {m0, m1}, Vec2<Rational>{zero, one});
    auto result = certificate_solve(rep);
    REQUIRE(std::holds_alternative<SolveFailure>(result));
    CHECK(std::get<SolveFailure>(result).reason.find("u = a*b = 0") != std::string::npos);
}

TEST_CASE("solver over a quadratic extension refuses a second extension layer") {
    // base-2 family at x = sqrt2, y = 2: the gauge-fixed quadratic has
    // discriminant 5 + 2*sqrt2, which is not a square in Q(sqrt2)
    QuadExt x = QuadExt::sqrt_of(Rational(2));
    QuadExt y = to_quadext(Rational(2), Rational(2));
    auto rep = stern_rep(x, y);
    auto result = certificate_solve(rep);
    REQUIRE(std::holds_alternative<SolveFailure>(result));
    CHECK(std::get<SolveFailure>(result).reason.find("no square root") != std::string::npos);
}

TEST_CASE("solver rejects polynomial coefficients") {
    BiPoly tau = BiPoly::variable1("tau", "sigma");
    BiPoly sigma = BiPoly::variable2("tau", "sigma");
    auto rep = parametric_rep(tau, sigma);
    CHECK_THROWS_AS(certificate_solve(rep), unsupported_operation);
}

TEST_CASE("solved certificates pass reversal sweeps") {
    std::mt19937_64 rng(0x50f4);
    for (int i = 0; i < 5; ++i) {
        Rational tau = testing::random_rational(rng, 6);
        Rational sigma = testing::random_rational(rng, 6);
        auto rep = parametric_rep(tau, sigma);
        auto result = certificate_solve(rep);
        REQUIRE(std::holds_alternative<Certificate<Rational>>(result));
        CHECK(!verify_reversal(rep, 729));
    }
}
