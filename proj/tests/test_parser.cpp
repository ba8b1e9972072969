#include "specpol/poly_parser.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

using specpol::ParseError;
using specpol::Poly;
using specpol::Rational;
using specpol::parse_poly;
using testsupport::random_poly;

namespace {

Poly from_ints(std::vector<long> ascending) {
    std::vector<Rational> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.emplace_back(v);
    return Poly(std::move(cs));
}

}  // namespace

TEST_SUITE_BEGIN("parser");

TEST_CASE("basic expressions") {
    CHECK(parse_poly("x^3+4") == from_ints({4, 0, 0, 1}));
    CHECK(parse_poly("x") == Poly::variable());
    CHECK(parse_poly("-x") == from_ints({0, -1}));
    CHECK(parse_poly("42") == Poly(Rational(42)));
    CHECK(parse_poly("0") == Poly());
    CHECK(parse_poly("x - x").is_zero());
}

TEST_CASE("rational coefficients and constant division") {
    CHECK(parse_poly("-5/2") == Poly(Rational(-5, 2)));
    // '/' binds to the constant divisor, so 3/2x^2 reads as (3/2)x^2.
    CHECK(parse_poly("3/2x^2") == Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(3, 2)}));
    CHECK(parse_poly("(x^2+x)/2") == Poly(std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2)}));
    CHECK(parse_poly("x/2/3") == Poly::variable() * Rational(1, 6));
}

TEST_CASE("implicit multiplication") {
    CHECK(parse_poly("2x") == from_ints({0, 2}));
    CHECK(parse_poly("4x^3") == from_ints({0, 0, 0, 4}));
    CHECK(parse_poly("3(x+1)") == from_ints({3, 3}));
    CHECK(parse_poly("(x-1)(x+2)") == from_ints({-2, 1, 1}));
    CHECK(parse_poly("x(x+1)") == from_ints({0, 1, 1}));
    CHECK(parse_poly("2x(x+1)x") == from_ints({0, 0, 2, 2}));
}

TEST_CASE("the table f polynomials parse exactly") {
    const Poly p6f = parse_poly("(x^2-4)^2/4");
    CHECK(p6f == from_ints({-4, 0, 1}) * from_ints({-4, 0, 1}) * Rational(1, 4));
    CHECK(parse_poly("-x^4") == from_ints({0, 0, 0, 0, -1}));
    CHECK(parse_poly("x(x^2-4)/4") == from_ints({0, -4, 0, 1}) * Rational(1, 4));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_poly("2+3*4") == Poly(Rational(14)));
    CHECK(parse_poly("2*x^2") == from_ints({0, 0, 2}));
    CHECK(parse_poly("-x^2") == from_ints({0, 0, -1}));
    CHECK(parse_poly("(2x)^2") == from_ints({0, 0, 4}));
    CHECK(parse_poly("1-x-x") == from_ints({1, -2}));
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_poly("  x ^ 2 + 1 ") == from_ints({1, 0, 1}));
    CHECK(parse_poly("( x - 1 ) ( x + 2 )") == from_ints({-2, 1, 1}));
}

TEST_CASE("errors carry a position") {
    CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
    try {
        parse_poly("x/y");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("y") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^2^2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^100001"), ParseError);
    CHECK_THROWS_AS(parse_poly("3//2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x*"), ParseError);
}

TEST_CASE("division needs a nonzero constant divisor") {
    CHECK_THROWS_AS(parse_poly("x/(x+1)"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/(1-1)"), ParseError);
    CHECK(parse_poly("x/(2)") == Poly::variable() * Rational(1, 2));
}

TEST_CASE("parse inverts str on random polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = random_poly(rng, deg(rng));
        CHECK(parse_poly(p.str()) == p);
    }
    CHECK(parse_poly(Poly().str()).is_zero());
}

TEST_SUITE_END();
