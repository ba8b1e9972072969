#include "specpol/hirota.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "specpol/poly_parser.hpp"
#include "test_support.hpp"

using specpol::HCoeffs;
using specpol::HirotaSpec;
using specpol::Poly;
using specpol::Rational;
using specpol::StepFailure;
using specpol::parse_poly;
using testsupport::random_poly;
using testsupport::random_rational;

namespace {

HirotaSpec p2_spec() {
    return HirotaSpec(Poly(Rational(-4)), Poly(), HCoeffs{Poly::variable(), Rational(0), Rational(0)},
                      Poly(Rational(1)), Poly::variable());
}

HirotaSpec violating_spec() {
    return HirotaSpec(parse_poly("x^2"), Poly(Rational(1)),
                      HCoeffs{Poly::variable(), Rational(0), Rational(0)},
                      Poly(Rational(1)), Poly(Rational(1)));
}

}  // namespace

TEST_SUITE_BEGIN("hirota");

TEST_CASE("h_at adds the index-dependent constant") {
    const HCoeffs p4a{parse_poly("x^2-1"), Rational(2), Rational(0)};
    CHECK(specpol::h_at(p4a, 1) == parse_poly("x^2+1"));
    CHECK(specpol::h_at(p4a, 0) == parse_poly("x^2-1"));

    const HCoeffs p6c0{Poly(Rational(1, 4)), Rational(0), Rational(1)};
    CHECK(specpol::h_at(p6c0, 2) == Poly(Rational(9, 4)));

    const HCoeffs plain{parse_poly("x^3-x"), Rational(0), Rational(0)};
    for (int n = 0; n < 6; ++n) CHECK(specpol::h_at(plain, n) == parse_poly("x^3-x"));
}

TEST_CASE("the pivot identity -2h(n-1) + h(n) = -h(n-2) + 2beta") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const HCoeffs h{random_poly(rng, deg(rng)), random_rational(rng), random_rational(rng)};
        const Poly two_beta(h.beta * Rational(2));
        for (int n = 2; n <= 20; ++n) {
            const Poly lhs = Poly(Rational(-2)) * specpol::h_at(h, n - 1) + specpol::h_at(h, n);
            const Poly rhs = -specpol::h_at(h, n - 2) + two_beta;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hirota_rhs matches hand oracles") {
    const HirotaSpec p2 = p2_spec();
    CHECK(specpol::hirota_rhs(p2, Poly::variable(), 1) == parse_poly("x^3+4"));
    CHECK(specpol::hirota_rhs(p2, Poly(Rational(1)), 3) == Poly::variable());

    // With P = 1 every derivative term vanishes and only h_n survives.
    const HirotaSpec p3(parse_poly("-x^4"), parse_poly("-x^3"),
                        HCoeffs{parse_poly("2x+1"), Rational(0), Rational(0)},
                        Poly(Rational(1)), Poly(Rational(1)));
    CHECK(specpol::hirota_rhs(p3, Poly(Rational(1)), 1) == parse_poly("2x+1"));
}

TEST_CASE("hirota_step divides exactly or reports the failure") {
    const HirotaSpec p2 = p2_spec();
    const auto step = specpol::hirota_step(p2, Poly::variable(), parse_poly("x^3+4"), 2);
    REQUIRE(std::holds_alternative<Poly>(step));
    CHECK(std::get<Poly>(step) == parse_poly("x^6+20x^3-80"));

    // Dividing by P_prev = 1 returns the right hand side itself.
    const auto trivial = specpol::hirota_step(p2, Poly(Rational(1)), Poly::variable(), 1);
    REQUIRE(std::holds_alternative<Poly>(trivial));
    CHECK(std::get<Poly>(trivial) == specpol::hirota_rhs(p2, Poly::variable(), 1));
}

TEST_CASE("generation reproduces the family oracles") {
    const auto p2 = specpol::hirota_generate(p2_spec(), 3);
    REQUIRE(p2.entries.size() == 4);
    CHECK_FALSE(p2.failure.has_value());
    CHECK(p2.degrees == std::vector<std::optional<int>>{0, 1, 3, 6});
    CHECK(p2.entries[2] == parse_poly("x^3+4"));
    CHECK(p2.entries[3] == parse_poly("x^6+20x^3-80"));

    const HirotaSpec p3(parse_poly("-x^4"), parse_poly("-x^3"),
                        HCoeffs{parse_poly("2x+1"), Rational(0), Rational(0)},
                        Poly(Rational(1)), Poly(Rational(1)));
    const auto run3 = specpol::hirota_generate(p3, 2);
    CHECK(run3.entries == std::vector<Poly>{Poly(Rational(1)), Poly(Rational(1)), parse_poly("2x+1")});

    const HirotaSpec p4a(Poly(Rational(1)), Poly(),
                         HCoeffs{parse_poly("x^2-1"), Rational(2), Rational(0)},
                         Poly(Rational(1)), Poly(Rational(1)));
    const auto run4 = specpol::hirota_generate(p4a, 2);
    CHECK(run4.entries[2] == parse_poly("x^2+1"));
}

TEST_CASE("every generated step reconstructs the right hand side") {
    const auto report = specpol::hirota_generate(p2_spec(), 8);
    const HirotaSpec p2 = p2_spec();
    for (std::size_t i = 2; i < report.entries.size(); ++i) {
        const Poly rhs = specpol::hirota_rhs(p2, report.entries[i - 1], static_cast<int>(i) - 1);
        CHECK(report.entries[i] * report.entries[i - 2] == rhs);
    }
}

TEST_CASE("a residual-violating pair fails within a few steps") {
    const auto report = specpol::hirota_generate(violating_spec(), 10);
    REQUIRE(report.failure.has_value());
    CHECK(report.failure->n <= 10);
    CHECK_FALSE(report.failure->remainder.is_zero());
    CHECK(report.entries.size() == static_cast<std::size_t>(report.failure->n) + 1);
    CHECK_FALSE(report.clean());
}

TEST_CASE("certificate re-checks every step") {
    const auto p2 = specpol::certificate(p2_spec(), 12);
    CHECK(p2.clean());
    // One reconstruction flag per computed entry, none for the two seeds.
    CHECK(p2.reconstruction.size() == p2.entries.size() - 2);
    CHECK(p2.coprime_with_next.size() == p2.entries.size() - 1);
    CHECK(specpol::hirota_generate(p2_spec(), 12).reconstruction.empty());

    const HirotaSpec p6(parse_poly("(x^2-4)^2/4"), parse_poly("x(x^2-4)/4"),
                        HCoeffs{parse_poly("x+1/4"), Rational(0), Rational(1)},
                        Poly(Rational(1)), Poly(Rational(1)));
    CHECK(specpol::certificate(p6, 10).clean());

    const auto bad = specpol::certificate(violating_spec(), 10);
    REQUIRE(bad.failure.has_value());
    CHECK_FALSE(bad.clean());
}

TEST_CASE("spec construction rejects degenerate data") {
    const HCoeffs zero_h{Poly(), Rational(0), Rational(0)};
    const HCoeffs x_h{Poly::variable(), Rational(0), Rational(0)};
    CHECK_THROWS_AS(HirotaSpec(Poly(), Poly(), zero_h, Poly(Rational(1)), Poly(Rational(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(HirotaSpec(Poly(Rational(-4)), Poly(), x_h, Poly(), Poly::variable()),
                    std::invalid_argument);
    CHECK_THROWS_AS(HirotaSpec(Poly(Rational(-4)), Poly(), x_h, Poly::variable(), Poly()),
                    std::invalid_argument);

    // A common nonconstant factor in f, g, p leaves every step divisible by it.
    const HCoeffs common{Poly::variable(), Rational(0), Rational(0)};
    CHECK_THROWS_AS(HirotaSpec(parse_poly("x^2"), Poly::variable(), common,
                               Poly(Rational(1)), Poly(Rational(1))),
                    std::invalid_argument);
    // An alpha or beta shift breaks the shared factor, so this one is fine.
    const HCoeffs shifted{Poly::variable(), Rational(1), Rational(0)};
    CHECK_NOTHROW(HirotaSpec(parse_poly("x^2"), Poly::variable(), shifted,
                             Poly(Rational(1)), Poly(Rational(1))));
}

TEST_SUITE_END();
