#include "biorder/specialpoly.hpp"
#include "biorder/textio.hpp"

#include <doctest.h>

#include <vector>

using namespace biorder;

namespace {

IntPoly P(const char* s) { return parse_int_poly(s); }

RealAlgebraic root_in(const char* poly, long lo, long hi)
{
    return RealAlgebraic(P(poly), IsolatingInterval{Rat(lo), Rat(hi)});
}

} // namespace

TEST_CASE("is_odd_prime_power")
{
    CHECK(is_odd_prime_power(3));
    CHECK(is_odd_prime_power(5));
    CHECK(is_odd_prime_power(9));
    CHECK(is_odd_prime_power(27));
    CHECK(is_odd_prime_power(7));
    CHECK_FALSE(is_odd_prime_power(1));
    CHECK_FALSE(is_odd_prime_power(2));
    CHECK_FALSE(is_odd_prime_power(4));
    CHECK_FALSE(is_odd_prime_power(6));
    CHECK_FALSE(is_odd_prime_power(8));
    CHECK_FALSE(is_odd_prime_power(15));
    CHECK_FALSE(is_odd_prime_power(12));
}

TEST_CASE("is_special: stated examples")
{
    {
        const SpecialVerdict v = is_special(P("x^6+3x^5-x^4-7x^3-x^2+3x+1"));
        CHECK(v.isSpecial);
        REQUIRE(v.perFactor.size() == 2);
        CHECK(v.perFactor[0].second == FactorCondition::OddPrimePowerRealNegConst);
        CHECK(v.perFactor[1].second == FactorCondition::OddPrimePowerRealNegConst);
    }
    {
        const SpecialVerdict v = is_special(P("x^3-3x-1"));
        CHECK(v.isSpecial);
        REQUIRE(v.perFactor.size() == 1);
        CHECK(v.perFactor[0].second == FactorCondition::OddPrimePowerRealNegConst);
    }
    {
        const SpecialVerdict v = is_special(P("x-1"));
        CHECK(v.isSpecial);
        REQUIRE(v.perFactor.size() == 1);
        CHECK(v.perFactor[0].second == FactorCondition::AllRootsPositive);
    }
    {
        const SpecialVerdict v = is_special(P("x^2-2"));
        CHECK_FALSE(v.isSpecial);
        REQUIRE(v.perFactor.size() == 1);
        CHECK(v.perFactor[0].second == FactorCondition::Fails);
    }
}

TEST_CASE("is_special: preconditions and edge cases")
{
    CHECK_THROWS_AS(is_special(IntPoly::zero()), std::invalid_argument);
    CHECK_THROWS_AS(is_special(P("2x-1")), std::invalid_argument);
    CHECK(is_special(P("-x+1")).isSpecial);      // leading -1 is negated first
    CHECK(is_special(P("3x^3-9x-3")).isSpecial); // content cleared first
    CHECK(is_special(P("5")).isSpecial);         // empty factorization
    // (x-1)(x-2): both roots positive, condition (ii) despite degree 2 factors
    CHECK(is_special(P("x^2-3x+2")).isSpecial);
    // x^2+x+1 has no real roots at all
    CHECK_FALSE(is_special(P("x^2+x+1")).isSpecial);
    // x^3+3x+1 has negative constant term negated: only one real root
    CHECK_FALSE(is_special(P("x^3+3x-1")).isSpecial);
}

TEST_CASE("is_special is stable under extra all-positive factors")
{
    const std::vector<const char*> cases = {"x^3-3x-1", "x^2-2", "x^2+x+1",
                                            "x^6+3x^5-x^4-7x^3-x^2+3x+1"};
    const IntPoly positive = P("x^2-3x+1"); // roots (3+-sqrt5)/2, both positive
    for (const char* c : cases) {
        const IntPoly f = P(c);
        CHECK(is_special(f).isSpecial == is_special(f * positive).isSpecial);
    }
}

TEST_CASE("minpoly_product: stated examples")
{
    const RealAlgebraic phi = root_in("x^2-x-1", 1, 2);
    const RealAlgebraic psi = root_in("x^2-x-1", -1, 0); // 1 - phi
    {
        const RealAlgebraic prod = minpoly_product(phi, psi);
        CHECK(prod.minpoly() == P("x+1"));
        CHECK(prod.rational_value() == -1);
    }
    {
        const RealAlgebraic prod = minpoly_product(phi, phi);
        CHECK(prod.minpoly() == P("x^2-3x+1"));
        CHECK(prod.sign() > 0);
        CHECK(prod.compare(Rat(2)) > 0); // phi^2 ~ 2.618
        CHECK(prod.compare(Rat(3)) < 0);
    }
    {
        const RealAlgebraic same = minpoly_product(phi, RealAlgebraic::one());
        CHECK(same.minpoly() == phi.minpoly());
        CHECK(same.compare(phi) == 0);
    }
}

TEST_CASE("minpoly_product: commutative, associative, interval-consistent")
{
    const auto roots = RealAlgebraic::roots_of(P("x^3-3x-1"));
    REQUIRE(roots.size() == 3);
    const RealAlgebraic& a = roots[0];
    const RealAlgebraic& b = roots[1];
    const RealAlgebraic& c = roots[2];

    const RealAlgebraic ab = minpoly_product(a, b);
    const RealAlgebraic ba = minpoly_product(b, a);
    CHECK(ab.minpoly() == ba.minpoly());
    CHECK(ab.compare(ba) == 0);

    const RealAlgebraic ab_c = minpoly_product(ab, c);
    const RealAlgebraic a_bc = minpoly_product(a, minpoly_product(b, c));
    CHECK(ab_c.minpoly() == a_bc.minpoly());
    CHECK(ab_c.compare(a_bc) == 0);
    // product of all roots of x^3-3x-1 is -(-1)/1 = 1
    CHECK(ab_c.minpoly() == P("x-1"));

    // interval-arithmetic consistency: the product interval contains the
    // product of the refined input intervals
    const RealAlgebraic fa = a.refined(Rat(1, 1000));
    const RealAlgebraic fb = b.refined(Rat(1, 1000));
    const RealAlgebraic fab = ab.refined(Rat(1, 1000000));
    const Rat lo = std::min(std::min(fa.interval().lo * fb.interval().lo,
                                     fa.interval().lo * fb.interval().hi),
                            std::min(fa.interval().hi * fb.interval().lo,
                                     fa.interval().hi * fb.interval().hi));
    const Rat hi = std::max(std::max(fa.interval().lo * fb.interval().lo,
                                     fa.interval().lo * fb.interval().hi),
                            std::max(fa.interval().hi * fb.interval().lo,
                                     fa.interval().hi * fb.interval().hi));
    CHECK(fab.interval().lo <= hi);
    CHECK(fab.interval().hi >= lo);
}

TEST_CASE("minpoly_product across distinct quadratic fields")
{
    const RealAlgebraic sqrt2 = root_in("x^2-2", 1, 2);
    const RealAlgebraic sqrt3 = root_in("x^2-3", 1, 2);
    const RealAlgebraic prod = minpoly_product(sqrt2, sqrt3);
    CHECK(prod.minpoly() == P("x^2-6"));
    CHECK(prod.sign() > 0);

    // negative * positive lands on the negative root
    const RealAlgebraic negSqrt2 = RealAlgebraic(P("x^2-2"), IsolatingInterval{Rat(-2), Rat(-1)});
    const RealAlgebraic negProd = minpoly_product(negSqrt2, sqrt3);
    CHECK(negProd.minpoly() == P("x^2-6"));
    CHECK(negProd.sign() < 0);

    // rational scaling fast path
    const RealAlgebraic scaled = minpoly_product(sqrt2, RealAlgebraic::from_rational(Rat(-3, 2)));
    CHECK(scaled.minpoly() == P("2x^2-9"));
    CHECK(scaled.sign() < 0);
    CHECK(minpoly_product(sqrt2, RealAlgebraic::zero()).rational_value() == 0);

    // quartic times cubic: a degree-12 elimination
    const RealAlgebraic sd = root_in("x^4-10x^2+1", 3, 4); // sqrt2+sqrt3 ~ 3.146
    const auto cubicRoots = RealAlgebraic::roots_of(P("x^3-3x-1"));
    const RealAlgebraic big = minpoly_product(sd, cubicRoots[2]);
    CHECK(big.minpoly().degree() == 12);
    const double approx = big.approx();
    CHECK(approx > 5.9);
    CHECK(approx < 6.0); // 3.1463 * 1.8794 = 5.9131...
}

TEST_CASE("minpoly_power: stated examples")
{
    const RealAlgebraic sqrt2 = root_in("x^2-2", 1, 2);
    {
        const RealAlgebraic two = minpoly_power(sqrt2, 2);
        CHECK(two.minpoly() == P("x-2"));
        CHECK(two.rational_value() == 2);
    }
    const RealAlgebraic phi = root_in("x^2-x-1", 1, 2);
    {
        const RealAlgebraic cube = minpoly_power(phi, 3);
        CHECK(cube.minpoly() == P("x^2-4x-1")); // phi^3 = 2 phi + 1
        CHECK(cube.compare(Rat(4)) > 0);        // ~4.236
        CHECK(cube.compare(Rat(5)) < 0);
    }
    {
        const RealAlgebraic one = minpoly_power(phi, 0);
        CHECK(one.minpoly() == P("x-1"));
        CHECK(one.rational_value() == 1);
    }
}

TEST_CASE("the irreducible special cubic has one positive and two negative roots")
{
    const auto roots = RealAlgebraic::roots_of(P("x^3-3x-1"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].sign() < 0);
    CHECK(roots[1].sign() < 0);
    CHECK(roots[2].sign() > 0);
}

TEST_CASE("has_positive_real_root")
{
    CHECK(has_positive_real_root(P("x^2-x-1")));
    CHECK_FALSE(has_positive_real_root(P("x^2+1")));
    CHECK(has_positive_real_root(P("x-1")));
    CHECK_FALSE(has_positive_real_root(P("x+1")));
    CHECK_THROWS_AS(has_positive_real_root(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("check_root_product_positive: stated examples")
{
    const IntPoly f = P("x^3-3x-1");
    {
        const RootProductResult r = check_root_product_positive(f, {1, 1, 1});
        CHECK(r.positiveConjugate);
        CHECK(r.product.minpoly() == P("x-1")); // product of all roots is 1
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->interval().lo > 0);
    }
    {
        // square of the positive root (the largest): witness ~ 3.53
        const RootProductResult r = check_root_product_positive(f, {0, 0, 2});
        CHECK(r.positiveConjugate);
        REQUIRE(r.witness.has_value());
        const double w = r.product.approx();
        CHECK(w > 3.5);
        CHECK(w < 3.6);
    }
    {
        // the two negative roots: product = 1 / (positive root) > 0
        const RootProductResult r = check_root_product_positive(f, {1, 1, 0});
        CHECK(r.positiveConjugate);
        CHECK(r.product.sign() > 0);
    }
    CHECK_THROWS_AS(check_root_product_positive(P("x^2-2"), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_root_product_positive(f, {1, 1}), std::invalid_argument);
}

TEST_CASE("root-product positivity on special cubics with small coefficients")
{
    // all irreducible special cubics x^3 + a x^2 + b x + c with coefficients
    // in [-3, 3] (condition (i): c < 0, all roots real), plus the worked
    // sextic's factors; every exponent vector of total weight <= 3 must give
    // a product with a positive real conjugate
    std::vector<IntPoly> corpus;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c < 0; ++c) {
                const IntPoly f(std::vector<Int>{Int(c), Int(b), Int(a), Int(1)});
                if (count_real_roots(f) != 3) continue;
                const Factorization fac = factor_rationals(f);
                if (fac.factors.size() != 1 || fac.factors[0].second != 1) continue;
                corpus.push_back(f);
            }
    CHECK(corpus.size() >= 5);
    corpus.push_back(P("x^3+x^2-2x-1"));
    corpus.push_back(P("x^3+2x^2-x-1"));

    for (const IntPoly& f : corpus) {
        for (unsigned e0 = 0; e0 <= 3; ++e0)
            for (unsigned e1 = 0; e0 + e1 <= 3; ++e1)
                for (unsigned e2 = 0; e0 + e1 + e2 <= 3; ++e2) {
                    const RootProductResult r = check_root_product_positive(f, {e0, e1, e2});
                    CHECK(r.positiveConjugate);
                    if (!r.positiveConjugate)
                        MESSAGE("failed on " << to_string(f) << " exps " << e0 << e1 << e2);
                }
    }
}
