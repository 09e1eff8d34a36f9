#include <catch2/catch_amalgamated.hpp>

#include "tsb/polynomial.hpp"

using tsb::BigInt;
using tsb::IntPolynomial;
using tsb::Rational;

TEST_CASE("construction trims trailing zeros", "[polynomial]") {
    IntPolynomial p({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(IntPolynomial({0, 0}).is_zero());
    CHECK(IntPolynomial().degree() == -1);
    CHECK(IntPolynomial::constant(4).degree() == 0);
    CHECK(IntPolynomial::monomial(3, 2).degree() == 2);
}

TEST_CASE("ring arithmetic", "[polynomial]") {
    IntPolynomial x = IntPolynomial::monomial(1, 1);
    IntPolynomial one = IntPolynomial::constant(1);
    CHECK((x + one) * (x - one) == IntPolynomial({-1, 0, 1}));
    CHECK((x + one) + (x - one) == IntPolynomial({0, 2}));
    CHECK((x + one) - (x + one) == IntPolynomial::zero());
    CHECK(BigInt(3) * x == IntPolynomial({0, 3}));
    // (x+1)^2 = x^2 + 2x + 1
    CHECK((x + one) * (x + one) == IntPolynomial({1, 2, 1}));
}

TEST_CASE("evaluation and signs", "[polynomial]") {
    IntPolynomial p({-1, 0, 1}); // x^2 - 1
    CHECK(p.evaluate(Rational(2)) == 3);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
    CHECK(p.sign_at(Rational(2)) == 1);
    CHECK(p.sign_at(Rational(1)) == 0);
    CHECK(p.sign_at(Rational(1, 2)) == -1);
    CHECK(p.sign_at(Rational(-3, 2)) == 1);
    // sign_at must agree with evaluate everywhere.
    IntPolynomial q({3, -21, 3, 23, 15, 3});
    for (int num = -10; num <= 10; ++num)
        for (int den = 1; den <= 7; ++den) {
            Rational at(num, den);
            CHECK(q.sign_at(at) == tsb::sign_of(q.evaluate(at)));
        }
}

TEST_CASE("derivative", "[polynomial]") {
    CHECK(IntPolynomial({5, 3, 0, 2}).derivative() == IntPolynomial({3, 0, 6}));
    CHECK(IntPolynomial::constant(9).derivative().is_zero());
}

TEST_CASE("content and primitive parts", "[polynomial]") {
    IntPolynomial p({-6, 12, -18});
    CHECK(p.content() == 6);
    CHECK(p.primitive() == IntPolynomial({1, -2, 3}));        // leading made positive
    CHECK(p.primitive_signed() == IntPolynomial({-1, 2, -3})); // sign kept
    CHECK(IntPolynomial({2, 4}).primitive() == IntPolynomial({1, 2}));
    CHECK(IntPolynomial::zero().primitive().is_zero());
}

TEST_CASE("proportionality", "[polynomial]") {
    CHECK(IntPolynomial({2, 4}).is_proportional_to(IntPolynomial({-3, -6})));
    CHECK_FALSE(IntPolynomial({2, 4}).is_proportional_to(IntPolynomial({2, 5})));
    CHECK(IntPolynomial::zero().is_proportional_to(IntPolynomial::zero()));
    CHECK_FALSE(IntPolynomial::zero().is_proportional_to(IntPolynomial({1})));
}

TEST_CASE("gcd of integer polynomials", "[polynomial]") {
    IntPolynomial a = IntPolynomial({-1, 1}) * IntPolynomial({2, 1});  // (x-1)(x+2)
    IntPolynomial b = IntPolynomial({-1, 1}) * IntPolynomial({-3, 1}); // (x-1)(x-3)
    CHECK(tsb::poly_gcd(a, b) == IntPolynomial({-1, 1}));
    CHECK(tsb::poly_gcd(a, IntPolynomial::zero()) == a.primitive());
    // Coprime inputs reduce to a constant.
    CHECK(tsb::poly_gcd(IntPolynomial({1, 1}), IntPolynomial({2, 1})).degree() == 0);
    // Content does not leak into the result.
    CHECK(tsb::poly_gcd(BigInt(4) * a, BigInt(6) * b) == IntPolynomial({-1, 1}));
    // gcd of a polynomial with its square keeps multiplicity one factor.
    CHECK(tsb::poly_gcd(a * a, a) == a.primitive());
}

TEST_CASE("exact division", "[polynomial]") {
    IntPolynomial prod = IntPolynomial({-1, 1}) * IntPolynomial({5, 0, 3});
    auto q = tsb::try_divide_exact(prod, IntPolynomial({-1, 1}));
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial({5, 0, 3}));
    CHECK_FALSE(tsb::try_divide_exact(IntPolynomial({1, 1}), IntPolynomial({0, 2})).has_value());
    // 2x+2 is divisible by x+1 but not by 2x+1.
    CHECK(tsb::try_divide_exact(IntPolynomial({2, 2}), IntPolynomial({1, 1})).has_value());
    CHECK_FALSE(tsb::try_divide_exact(IntPolynomial({2, 2}), IntPolynomial({1, 2})).has_value());
}

TEST_CASE("square-free part", "[polynomial]") {
    IntPolynomial lin = IntPolynomial({-1, 1});
    IntPolynomial sq = lin * lin * IntPolynomial({2, 1});
    CHECK(tsb::square_free_part(sq).is_proportional_to(lin * IntPolynomial({2, 1})));
    CHECK(tsb::square_free_part(lin) == lin);
    CHECK(tsb::square_free_part(IntPolynomial::constant(7)).degree() == 0);
}

TEST_CASE("weight-vector expansion into monomial coefficients", "[polynomial]") {
    // n = 1, weights (1, 0): 1*(1-x) + 0*x = 1 - x.
    CHECK(tsb::poly_from_vector({1, 0}) == IntPolynomial({1, -1}));
    // n = 2, weights (1, 4, 3): (1-x)^2 + 4x(1-x) + 3x^2 = 1 + 2x.
    CHECK(tsb::poly_from_vector({1, 4, 3}) == IntPolynomial({1, 2}));
    // Binomially scaled weights w*C(n,k) collapse to the constant w.
    CHECK(tsb::poly_from_vector({5, 15, 15, 5}) == IntPolynomial::constant(5));
    CHECK_THROWS_AS(tsb::poly_from_vector({}), tsb::ValidationError);
    // Exactness at sample points against direct evaluation.
    std::vector<std::int64_t> w{14, 252, 1345, 3711, 6279, 6941, 5065, 2363, 641, 77};
    IntPolynomial p = tsb::poly_from_vector(w);
    for (const Rational& x : {Rational(0), Rational(1), Rational(1, 2), Rational(2, 7)}) {
        Rational direct = 0;
        const std::size_t n = w.size() - 1;
        for (std::size_t k = 0; k <= n; ++k)
            direct += tsb::pow_rational(x, static_cast<unsigned>(k)) *
                      tsb::pow_rational(1 - x, static_cast<unsigned>(n - k)) * w[k];
        CHECK(p.evaluate(x) == direct);
    }
}
