#include "biorder/knot.hpp"

#include <stdexcept>

namespace biorder {

namespace {

bool is_palindrome(const std::vector<Int>& c, bool negated)
{
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
        const Int& a = c[i];
        const Int& b = c[n - 1 - i];
        if (negated ? (a != -b) : (a != b)) return false;
    }
    return true;
}

} // namespace

FibredDiagnostics validate_fibred(const LaurentPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("validate_fibred: zero polynomial");
    FibredDiagnostics d;

    const bool evenSpan = a.span() % 2 == 0;
    const bool symmetric = evenSpan && (is_palindrome(a.coeffs(), false) ||
                                        is_palindrome(a.coeffs(), true));
    if (!symmetric) d.failed.push_back("symmetric");

    const Int v1 = a.evaluate_at_one();
    if (biorder::abs(v1) == 1)
        d.valueAtOne = static_cast<int>(v1.get_si());
    else
        d.failed.push_back("value-at-one");

    const Int& first = a.coeffs().front();
    const Int& last = a.coeffs().back();
    if (!(biorder::abs(first) == 1 && biorder::abs(last) == 1))
        d.failed.push_back("extreme-coefficients");

    d.ok = d.failed.empty();
    return d;
}

IntPoly normalize_monic(const LaurentPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("normalize_monic: zero polynomial");
    if (!(biorder::abs(a.coeffs().front()) == 1 && biorder::abs(a.coeffs().back()) == 1))
        throw std::invalid_argument("normalize_monic: extreme coefficients must be +-1");
    IntPoly p(a.coeffs()); // shift by x^(-minExp): constant term = lowest coefficient
    if (sign(p.leading()) < 0) p = -p;
    return p;
}

namespace {

// Centered form: even span and exact a(x) = a(1/x); returns the coefficients
// c_j of x^j for j = 0..span/2 (c_0 the middle one).
std::vector<Int> centered_symmetric_half(const LaurentPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("conway conversion: zero polynomial");
    if (a.span() % 2 != 0)
        throw std::invalid_argument("conway conversion: odd span, not symmetric in x and 1/x");
    const std::vector<Int>& c = a.coeffs();
    if (!is_palindrome(c, false))
        throw std::invalid_argument("conway conversion: not symmetric in x and 1/x");
    const size_t half = c.size() / 2; // index of the middle coefficient
    std::vector<Int> out(half + 1);
    for (size_t j = 0; j <= half; ++j) out[j] = c[half + j];
    return out;
}

// T_j(z) with x^j + x^(-j) = T_j(z) under the convention's substitution:
// T_0 = 2, T_1 = z^2 -+ 2, T_{j+1} = T_1 * T_j - T_{j-1}.
std::vector<IntPoly> power_sum_basis(size_t jmax, ConwayConvention conv)
{
    const long shift = (conv == ConwayConvention::Minus) ? 2 : -2;
    std::vector<IntPoly> T;
    T.reserve(jmax + 1);
    T.push_back(IntPoly(Int(2)));
    if (jmax >= 1) T.push_back(IntPoly({shift, 0, 1}));
    for (size_t j = 2; j <= jmax; ++j) T.push_back(T[1] * T[j - 1] - T[j - 2]);
    return T;
}

} // namespace

RatPoly conway_from_alexander(const LaurentPoly& a, ConwayConvention conv)
{
    const std::vector<Int> half = centered_symmetric_half(a);
    const std::vector<IntPoly> T = power_sum_basis(half.size() - 1, conv);
    IntPoly nabla(half[0]);
    for (size_t j = 1; j < half.size(); ++j) nabla = nabla + T[j] * half[j];
    return nabla.to_rat();
}

LaurentPoly alexander_from_conway(const RatPoly& nabla, ConwayConvention conv)
{
    for (int i = 1; i <= nabla.degree(); i += 2)
        if (sign(nabla.coeff(i)) != 0)
            throw std::invalid_argument("alexander_from_conway: odd-degree term present");
    std::vector<Int> ic;
    for (int i = 0; i <= nabla.degree(); ++i) {
        if (nabla.coeff(i).get_den() != 1)
            throw std::invalid_argument("alexander_from_conway: coefficients must be integers");
        ic.emplace_back(nabla.coeff(i).get_num());
    }
    const IntPoly ip(std::move(ic));

    // z^2 = x -+ 2 + 1/x
    const long mid = (conv == ConwayConvention::Minus) ? -2 : 2;
    const LaurentPoly z2(-1, std::vector<Int>{Int(1), Int(mid), Int(1)});
    LaurentPoly acc;
    LaurentPoly z2pow(0, std::vector<Int>{Int(1)});
    for (int i = 0; i <= ip.degree(); i += 2) {
        if (i > 0) z2pow = z2pow * z2;
        LaurentPoly term = z2pow;
        LaurentPoly scaled;
        {
            std::vector<Int> c = term.coeffs();
            for (Int& x : c) x *= ip.coeff(i);
            scaled = LaurentPoly(term.min_exp(), std::move(c));
        }
        acc = acc + scaled;
    }
    return acc;
}

std::string to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::OrderableTPR: return "OrderableTPR";
    case VerdictKind::OrderableSpecial: return "OrderableSpecial";
    case VerdictKind::Inconclusive: return "Inconclusive";
    case VerdictKind::InvalidInput: return "InvalidInput";
    }
    return "?";
}

Verdict orderability_verdict(const LaurentPoly& a)
{
    Verdict v;
    v.diagnostics = validate_fibred(a);
    if (!v.diagnostics.ok) {
        v.kind = VerdictKind::InvalidInput;
        // invalid inputs still get factor/root diagnostics when they can be
        // normalized at all
        if (biorder::abs(a.coeffs().front()) == 1 && biorder::abs(a.coeffs().back()) == 1) {
            v.normalized = normalize_monic(a);
            v.factorization = factor_rationals(v.normalized);
            for (const auto& [g, mult] : v.factorization.factors) {
                (void)mult;
                const IntPoly gi = g.primitive_int();
                FactorRootCounts rc;
                rc.factor = g;
                rc.degree = gi.degree();
                rc.realRoots = count_real_roots(gi);
                rc.positiveRealRoots = count_real_roots(gi, Bound::at(Rat(0)), Bound::pos_inf());
                v.rootCounts.push_back(std::move(rc));
            }
        }
        return v;
    }
    v.normalized = normalize_monic(a);
    v.factorization = factor_rationals(v.normalized);

    bool allPositive = true;
    for (const auto& [g, mult] : v.factorization.factors) {
        (void)mult;
        const IntPoly gi = g.primitive_int();
        FactorRootCounts rc;
        rc.factor = g;
        rc.degree = gi.degree();
        rc.realRoots = count_real_roots(gi);
        rc.positiveRealRoots = count_real_roots(gi, Bound::at(Rat(0)), Bound::pos_inf());
        if (rc.positiveRealRoots != rc.degree) allPositive = false;
        v.rootCounts.push_back(std::move(rc));
    }
    v.allRootsRealPositive = allPositive;
    v.special = is_special(v.normalized);

    if (allPositive)
        v.kind = VerdictKind::OrderableTPR;
    else if (v.special.isSpecial)
        v.kind = VerdictKind::OrderableSpecial;
    else
        v.kind = VerdictKind::Inconclusive;
    return v;
}

} // namespace biorder
