#include <catch2/catch_amalgamated.hpp>

#include "tsb/exact.hpp"

using tsb::BigInt;
using tsb::Rational;

TEST_CASE("parse_rational accepts integers and fractions", "[exact]") {
    CHECK(tsb::parse_rational("0") == 0);
    CHECK(tsb::parse_rational("1") == 1);
    CHECK(tsb::parse_rational("-7") == -7);
    CHECK(tsb::parse_rational("3/10") == Rational(3, 10));
    CHECK(tsb::parse_rational("6/8") == Rational(3, 4));
    CHECK(tsb::parse_rational("-2/6") == Rational(-1, 3));
    CHECK(tsb::parse_rational("+5/7") == Rational(5, 7));
    CHECK(tsb::parse_rational("123456789012345678901234567890/7") ==
          Rational(BigInt("123456789012345678901234567890"), 7));
}

TEST_CASE("parse_rational rejects decimals with a usable hint", "[exact]") {
    CHECK_THROWS_MATCHES(tsb::parse_rational("0.5"), tsb::ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("3/10")));
    CHECK_THROWS_AS(tsb::parse_rational("1e-3"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("2E5"), tsb::ParseError);
}

TEST_CASE("parse_rational rejects malformed input", "[exact]") {
    CHECK_THROWS_AS(tsb::parse_rational(""), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("a/b"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("1/0"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("1/2/3"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("1/-2"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("/3"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational("3/"), tsb::ParseError);
    CHECK_THROWS_AS(tsb::parse_rational(" 1/2"), tsb::ParseError);
}

TEST_CASE("fraction rendering is canonical", "[exact]") {
    CHECK(tsb::to_fraction_string(Rational(6, 8)) == "3/4");
    CHECK(tsb::to_fraction_string(Rational(5)) == "5");
    CHECK(tsb::to_fraction_string(Rational(0)) == "0");
    CHECK(tsb::to_fraction_string(Rational(-3, 9)) == "-1/3");
    CHECK(tsb::to_fraction_string(Rational(3842, 896)) == "1921/448");
}

TEST_CASE("decimal rendering rounds half away from zero", "[exact]") {
    CHECK(tsb::to_decimal_string(Rational(1, 3), 5) == "0.33333");
    CHECK(tsb::to_decimal_string(Rational(2, 3), 2) == "0.67");
    CHECK(tsb::to_decimal_string(Rational(1, 2), 2) == "0.50");
    CHECK(tsb::to_decimal_string(Rational(1, 8), 2) == "0.13");
    CHECK(tsb::to_decimal_string(Rational(-1, 8), 2) == "-0.13");
    CHECK(tsb::to_decimal_string(Rational(7), 3) == "7.000");
    CHECK(tsb::to_decimal_string(Rational(5, 2), 0) == "3");
    CHECK(tsb::to_decimal_string(Rational(-5, 2), 0) == "-3");
}

TEST_CASE("round-trip between parse and render", "[exact]") {
    for (const char* text : {"0", "1", "-4/7", "22/7", "1921/448"}) {
        Rational q = tsb::parse_rational(text);
        CHECK(tsb::parse_rational(tsb::to_fraction_string(q)) == q);
    }
}

TEST_CASE("binomial coefficients", "[exact]") {
    CHECK(tsb::binomial(0, 0) == 1);
    CHECK(tsb::binomial(5, 0) == 1);
    CHECK(tsb::binomial(5, 5) == 1);
    CHECK(tsb::binomial(10, 5) == 252);
    CHECK(tsb::binomial(5, 6) == 0);
    CHECK(tsb::binomial(52, 26) == BigInt("495918532948104"));
    // Pascal rule on a grid.
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(tsb::binomial(n, k) == tsb::binomial(n - 1, k - 1) + tsb::binomial(n - 1, k));
}

TEST_CASE("rational powers", "[exact]") {
    CHECK(tsb::pow_rational(Rational(2, 3), 5) == Rational(32, 243));
    CHECK(tsb::pow_rational(Rational(7, 9), 0) == 1);
    CHECK(tsb::pow_rational(Rational(0), 4) == 0);
    CHECK(tsb::pow_rational(Rational(-1, 2), 3) == Rational(-1, 8));
}
