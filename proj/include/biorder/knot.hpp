/*
    knot.hpp

    Fibred-knot screening on Alexander polynomials given as Laurent
    polynomials: validity diagnostics, monic normalization, conversion to and
    from the Conway form, and the orderability verdict.
*/
#ifndef BIORDER_KNOT_HPP
#define BIORDER_KNOT_HPP

#include "biorder/factorize.hpp"
#include "biorder/specialpoly.hpp"

#include <string>
#include <vector>

namespace biorder {

struct FibredDiagnostics {
    bool ok = false;
    std::vector<std::string> failed; // names of failed conditions
    int valueAtOne = 0;              // recorded sign/value when |a(1)| == 1
};

// Conditions: symmetric up to +-x^k (even span, palindrome or
// antipalindrome), |a(1)| == 1, extreme coefficients +-1.
FibredDiagnostics validate_fibred(const LaurentPoly& a);

// Multiply by +-x^k to obtain a monic ordinary integer polynomial with
// nonzero constant term; requires extreme coefficients +-1.
IntPoly normalize_monic(const LaurentPoly& a);

enum class ConwayConvention {
    Minus, // z = x^(1/2) - x^(-1/2); reproduces the worked sextic example
    Plus,  // z = x^(1/2) + x^(-1/2)
};

// The unique even polynomial in z with nabla(z) = a under the convention's
// substitution; requires a centered-symmetric input (a(x) = a(1/x) exactly
// after centering).
RatPoly conway_from_alexander(const LaurentPoly& a,
                              ConwayConvention conv = ConwayConvention::Minus);

// Inverse: expand nabla at the substitution; nabla must be even.
LaurentPoly alexander_from_conway(const RatPoly& nabla,
                                  ConwayConvention conv = ConwayConvention::Minus);

enum class VerdictKind {
    OrderableTPR,     // all roots real and positive
    OrderableSpecial, // special polynomial
    Inconclusive,
    InvalidInput,
};

std::string to_string(VerdictKind k);

struct FactorRootCounts {
    RatPoly factor;
    int degree = 0;
    int realRoots = 0;
    int positiveRealRoots = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::InvalidInput;
    FibredDiagnostics diagnostics;
    IntPoly normalized;
    Factorization factorization; // of the normalized polynomial
    std::vector<FactorRootCounts> rootCounts;
    SpecialVerdict special;
    bool allRootsRealPositive = false;
};

Verdict orderability_verdict(const LaurentPoly& a);

} // namespace biorder

#endif
