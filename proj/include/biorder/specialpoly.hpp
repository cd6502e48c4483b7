/*
    specialpoly.hpp

    The special-polynomial classifier and the constructive product oracle:
    exact minimal polynomials of products and powers of real algebraic
    numbers via companion-matrix elimination, plus positivity checks on
    conjugates.
*/
#ifndef BIORDER_SPECIALPOLY_HPP
#define BIORDER_SPECIALPOLY_HPP

#include "biorder/factorize.hpp"
#include "biorder/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biorder {

enum class FactorCondition {
    OddPrimePowerRealNegConst, // odd prime power degree, constant term < 0, all roots real
    AllRootsPositive,
    Fails,
};

std::string to_string(FactorCondition c);

struct SpecialVerdict {
    bool isSpecial = false;
    std::vector<std::pair<RatPoly, FactorCondition>> perFactor;
};

// f must be monic up to content and sign (leading coefficient +-1 after
// clearing content; a leading -1 is negated first).
SpecialVerdict is_special(const IntPoly& f);

// true iff d is q^k for an odd prime q and k >= 1
bool is_odd_prime_power(int d);

RealAlgebraic minpoly_product(const RealAlgebraic& a, const RealAlgebraic& b);
RealAlgebraic minpoly_power(const RealAlgebraic& a, unsigned k);

// true iff g has at least one root in (0, inf); g nonzero
bool has_positive_real_root(const IntPoly& g);

struct RootProductResult {
    bool positiveConjugate = false;
    RealAlgebraic product;                  // alpha itself
    std::optional<RealAlgebraic> witness;   // a positive real root of alpha's minpoly
};

// exponents are indexed by the ascending distinct real roots of f; f must be
// special with all roots real.
RootProductResult check_root_product_positive(const IntPoly& f,
                                              const std::vector<unsigned>& exponents);

} // namespace biorder

#endif
