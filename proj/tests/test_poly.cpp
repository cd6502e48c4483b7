#include "biorder/intpoly.hpp"
#include "biorder/textio.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace biorder;
using namespace biorder::testing;

TEST_CASE("IntPoly basics")
{
    const IntPoly p = parse_int_poly("x^2-1");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(2) == 1);
    CHECK(p.evaluate(Int(3)) == 8);
    CHECK(to_string(p) == "x^2-1");

    CHECK(IntPoly::zero().degree() == -1);
    CHECK((p - p).is_zero());
    CHECK(parse_int_poly("x - x + 1") == IntPoly::one());
    CHECK(parse_int_poly(" 3 x ^ 2 - 1 ") == parse_int_poly("3x^2-1"));

    const IntPoly q = parse_int_poly("2x+1");
    CHECK(p * q == parse_int_poly("2x^3+x^2-2x-1"));
    CHECK(to_string(p * q) == "2x^3+x^2-2x-1");
}

TEST_CASE("pseudo-division identity")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const IntPoly a = random_poly(rng, 7, 9);
        const IntPoly b = random_poly(rng, 4, 9);
        if (a.is_zero() || b.is_zero() || a.degree() < b.degree()) continue;
        const IntPoly r = prem(a, b);
        // lc(b)^(da-db+1) * a = q*b + r for some q: check r == lhs mod b over Q
        const RatPoly lhs =
            (a * biorder::pow(b.leading(),
                              static_cast<unsigned long>(a.degree() - b.degree() + 1)))
                .to_rat();
        const RatPoly rem = lhs % b.to_rat();
        CHECK(rem == r.to_rat());
    }
}

TEST_CASE("poly_gcd: stated examples")
{
    CHECK(poly_gcd(parse_int_poly("x^2-1"), parse_int_poly("x-1")) == parse_int_poly("x-1"));
    CHECK(poly_gcd(parse_int_poly("x^3-3x-1"), parse_int_poly("x^2+1")) == IntPoly::one());
    CHECK(poly_gcd(IntPoly::zero(), parse_int_poly("x^2-2")) == parse_int_poly("x^2-2"));
    CHECK(poly_gcd(IntPoly::zero(), IntPoly::zero()).is_zero());
    // positive leading coefficient
    CHECK(poly_gcd(parse_int_poly("-x^2+1"), parse_int_poly("-x-1")) == parse_int_poly("x+1"));
}

TEST_CASE("poly_gcd divides both inputs and contains common divisors")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        const IntPoly a = random_poly(rng, 6, 6);
        const IntPoly b = random_poly(rng, 6, 6);
        const IntPoly c = random_poly(rng, 3, 4);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const IntPoly g = poly_gcd(a * c, b * c);
        CHECK(g.divides(a * c));
        CHECK(g.divides(b * c));
        CHECK(c.divides(g)); // any common divisor divides the gcd
    }
}

TEST_CASE("resultant: stated examples")
{
    CHECK(resultant(parse_int_poly("x-2"), parse_int_poly("x-3")) == -1);
    CHECK(resultant(parse_int_poly("x^2+1"), parse_int_poly("x^2-2")) == 9);
    CHECK(resultant(parse_int_poly("x^2-1"), parse_int_poly("2x")) == -4);
    CHECK_THROWS_AS(resultant(IntPoly::zero(), parse_int_poly("x")), std::invalid_argument);
}

TEST_CASE("resultant agrees with Sylvester and Euclid oracles")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        const IntPoly a = random_poly(rng, 6, 8);
        const IntPoly b = random_poly(rng, 6, 8);
        if (a.is_zero() || b.is_zero()) continue;
        const Int r = resultant(a, b);
        CHECK(r == sylvester_resultant(a, b));
        CHECK(Rat(r) == euclid_resultant(a.to_rat(), b.to_rat()));
    }
}

TEST_CASE("resultant multiplicativity and gcd detection")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 120; ++i) {
        const IntPoly a = random_poly(rng, 5, 6);
        const IntPoly b = random_poly(rng, 4, 6);
        const IntPoly c = random_poly(rng, 4, 6);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        if ((b * c).degree() < 1) continue;
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
        const bool shares = poly_gcd(a, b).degree() >= 1;
        CHECK((resultant(a, b) == 0) == shares);
    }
}

TEST_CASE("squarefree_part: stated examples")
{
    CHECK(squarefree_part(parse_int_poly("x^2-2x+1")) == parse_int_poly("x-1"));
    CHECK(squarefree_part(parse_int_poly("x^3-3x-1")) == parse_int_poly("x^3-3x-1"));
    CHECK(squarefree_part(parse_int_poly("x^4-2x^2+1")) == parse_int_poly("x^2-1"));
    CHECK_THROWS_AS(squarefree_part(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree decomposition reconstructs")
{
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        const IntPoly a = random_poly(rng, 3, 4);
        const IntPoly b = random_poly(rng, 2, 4);
        if (a.degree() < 1 || b.degree() < 1) continue;
        const IntPoly f = a * b * b;
        IntPoly prod = IntPoly::one();
        for (const auto& [g, m] : squarefree_decomposition(f))
            prod = prod * g.pow(static_cast<unsigned>(m));
        // reconstruction up to content and sign
        CHECK(prod.primitive_part() ==
              (sign(f.leading()) < 0 ? (-f).primitive_part() : f.primitive_part()));
    }
}

TEST_CASE("Laurent polynomials")
{
    const LaurentPoly a = parse_laurent("-x^3-3x^2+x+7+x^-1-3x^-2-x^-3");
    CHECK(a.min_exp() == -3);
    CHECK(a.max_exp() == 3);
    CHECK(a.evaluate_at_one() == 1);
    CHECK(to_string(a) == "-x^3-3x^2+x+7+x^-1-3x^-2-x^-3");
    CHECK(a.inverted() == a); // palindromic
    const LaurentPoly b = parse_laurent("x-1+x^-1");
    CHECK((a * b).coeff(4) == -1);
    CHECK(a.shifted(3).min_exp() == 0);
    CHECK(parse_laurent("x - x").is_zero());
}

TEST_CASE("polynomial text parsing errors carry the first bad token")
{
    CHECK_THROWS_AS(parse_int_poly("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x+"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x y"), ParseError);
    CHECK_THROWS_AS(parse_int_poly(""), ParseError);
    CHECK_THROWS_AS(parse_int_poly("3..2"), ParseError);
    try {
        parse_int_poly("x+y");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.token() == "y");
    }
}

TEST_CASE("parsers reject garbage without crashing")
{
    std::mt19937 rng(53);
    const std::string alphabet = "x123+-^*() abz/#";
    std::uniform_int_distribution<size_t> pickC(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> pickL(0, 14);
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        const int len = pickL(rng);
        for (int j = 0; j < len; ++j) s += alphabet[pickC(rng)];
        try {
            (void)parse_int_poly(s);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_laurent(s);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_word(s);
        } catch (const ParseError&) {
        }
    }
}
