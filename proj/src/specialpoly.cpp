#include "biorder/specialpoly.hpp"

#include "biorder/intmatrix.hpp"
#include "biorder/ratlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace biorder {

std::string to_string(FactorCondition c)
{
    switch (c) {
    case FactorCondition::OddPrimePowerRealNegConst: return "odd-prime-power-real-neg-const";
    case FactorCondition::AllRootsPositive: return "all-roots-positive";
    case FactorCondition::Fails: return "fails";
    }
    return "?";
}

bool is_odd_prime_power(int d)
{
    if (d < 3) return false;
    int q = 0;
    for (int c = 2; c * c <= d; ++c)
        if (d % c == 0) { q = c; break; }
    if (q == 0) q = d; // d itself prime
    if (q % 2 == 0) return false;
    while (d % q == 0) d /= q;
    return d == 1;
}

SpecialVerdict is_special(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("is_special: zero polynomial");
    IntPoly g = f.primitive_part();
    if (biorder::abs(g.leading()) != 1)
        throw std::invalid_argument("is_special: leading coefficient must be a unit after clearing content");
    if (sign(g.leading()) < 0) g = -g;

    SpecialVerdict v;
    v.isSpecial = true;
    if (g.degree() == 0) return v; // empty factorization

    for (const auto& [factor, mult] : factor_rationals(g).factors) {
        (void)mult;
        const IntPoly fi = factor.primitive_int();
        const int d = fi.degree();
        FactorCondition cond = FactorCondition::Fails;
        if (is_odd_prime_power(d) && sign(fi.constant_term()) < 0 &&
            count_real_roots(fi) == d) {
            cond = FactorCondition::OddPrimePowerRealNegConst;
        } else if (count_real_roots(fi, Bound::at(Rat(0)), Bound::pos_inf()) == d) {
            cond = FactorCondition::AllRootsPositive;
        }
        if (cond == FactorCondition::Fails) v.isSpecial = false;
        v.perFactor.emplace_back(factor, cond);
    }
    return v;
}

bool has_positive_real_root(const IntPoly& g)
{
    if (g.is_zero()) throw std::invalid_argument("has_positive_real_root: zero polynomial");
    if (g.degree() == 0) return false;
    return count_real_roots(g, Bound::at(Rat(0)), Bound::pos_inf()) >= 1;
}

namespace {

// interval product [lo,hi] = hull of the four endpoint products
IsolatingInterval interval_product(const IsolatingInterval& a, const IsolatingInterval& b)
{
    const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// A polynomial vanishing at a*b: char poly of the Kronecker product of the
// companion matrices of the (monicized) minimal polynomials.
IntPoly product_elimination_poly(const IntPoly& fa, const IntPoly& fb)
{
    const Int la = fa.leading();
    const Int lb = fb.leading();
    const Int d = biorder::abs(la * lb);
    const int da = fa.degree();
    const int db = fb.degree();
    const int D = da * db;

    // companions scaled by d: entries of C_a have denominator dividing la,
    // entries of C_b divide lb, and each Kronecker entry is a product of one
    // of each, so d clears everything.
    auto scaled_companion = [](const IntPoly& f, const Int& scale) {
        const int n = f.degree();
        SquareIntMatrix m(n);
        for (int i = 1; i < n; ++i) m.at(i, i - 1) = scale;
        for (int i = 0; i < n; ++i)
            m.at(i, n - 1) = -biorder::div_exact(f.coeff(i) * scale, f.leading());
        return m;
    };
    // K' = d * (C_a (x) C_b): build via scaled companions with split scales
    // s_a * s_b = d where s_a clears C_a and s_b clears C_b.
    SquareIntMatrix Ka = scaled_companion(fa, biorder::abs(la));
    SquareIntMatrix Kb = scaled_companion(fb, biorder::abs(lb));
    SquareIntMatrix K = Ka.kronecker(Kb);

    IntPoly P = char_poly(K); // char poly of d * (C_a (x) C_b)
    // char(C_a (x) C_b)(x) = P(d*x) / d^D; clear denominators
    std::vector<Rat> coeffs(static_cast<size_t>(D) + 1);
    for (int i = 0; i <= D; ++i)
        coeffs[static_cast<size_t>(i)] =
            Rat(P.coeff(i)) * Rat(biorder::pow(d, static_cast<unsigned long>(i))) /
            Rat(biorder::pow(d, static_cast<unsigned long>(D)));
    return RatPoly(std::move(coeffs)).primitive_int();
}

} // namespace

RealAlgebraic minpoly_product(const RealAlgebraic& a, const RealAlgebraic& b)
{
    // rational shortcuts
    if (a.is_rational() && b.is_rational())
        return RealAlgebraic::from_rational(a.rational_value() * b.rational_value());
    if (a.is_rational() || b.is_rational()) {
        const RealAlgebraic& alg = a.is_rational() ? b : a;
        const Rat r = (a.is_rational() ? a : b).rational_value();
        if (sign(r) == 0) return RealAlgebraic::zero();
        // minpoly of r*beta is f(x/r) with denominators cleared
        IntPoly g = alg.minpoly().compose_scale_primitive(Rat(1) / r);
        IsolatingInterval iv;
        const IsolatingInterval& src = alg.interval();
        if (sign(r) > 0)
            iv = {src.lo * r, src.hi * r};
        else
            iv = {src.hi * r, src.lo * r};
        return RealAlgebraic(std::move(g), std::move(iv));
    }

    const IntPoly elim = product_elimination_poly(a.minpoly(), b.minpoly());
    std::vector<IntPoly> candidates;
    for (const auto& [g, m] : factor_rationals(elim).factors) {
        (void)m;
        candidates.push_back(g.primitive_int());
    }

    RealAlgebraic x = a, y = b;
    for (int iter = 0; iter < 100000; ++iter) {
        const IsolatingInterval prod = interval_product(x.interval(), y.interval());
        const IntPoly* owner = nullptr;
        int owners = 0, ownerCount = 0;
        for (const IntPoly& g : candidates) {
            const int c = count_real_roots_closed(g, prod.lo, prod.hi);
            if (c > 0) {
                ++owners;
                owner = &g;
                ownerCount = c;
            }
        }
        if (owners == 1 && ownerCount == 1) return RealAlgebraic(*owner, prod);
        const Rat w = std::max(x.interval().width(), y.interval().width());
        const Rat next = (sign(w) == 0) ? Rat(1, 4) : w / 4;
        x.refine_to(next);
        y.refine_to(next);
    }
    throw std::runtime_error("minpoly_product: factor selection did not converge");
}

RealAlgebraic minpoly_power(const RealAlgebraic& a, unsigned k)
{
    if (k == 0) return RealAlgebraic::one();
    RealAlgebraic r = a;
    for (unsigned i = 1; i < k; ++i) r = minpoly_product(r, a);
    return r;
}

RootProductResult check_root_product_positive(const IntPoly& f,
                                              const std::vector<unsigned>& exponents)
{
    const SpecialVerdict sv = is_special(f);
    if (!sv.isSpecial)
        throw std::invalid_argument("check_root_product_positive: polynomial is not special");
    for (const auto& [g, cond] : sv.perFactor) {
        (void)cond;
        const IntPoly gi = g.primitive_int();
        if (count_real_roots(gi) != gi.degree())
            throw std::invalid_argument("check_root_product_positive: not all roots are real");
    }

    const std::vector<RealAlgebraic> roots = RealAlgebraic::roots_of(f);
    if (exponents.size() != roots.size())
        throw std::invalid_argument("check_root_product_positive: exponent index out of range");

    RealAlgebraic alpha = RealAlgebraic::one();
    for (size_t i = 0; i < roots.size(); ++i) {
        if (exponents[i] == 0) continue;
        alpha = minpoly_product(alpha, minpoly_power(roots[i], exponents[i]));
    }

    RootProductResult out{false, alpha, std::nullopt};
    out.positiveConjugate = has_positive_real_root(alpha.minpoly());
    if (out.positiveConjugate) {
        for (const RealAlgebraic& w : RealAlgebraic::roots_of(alpha.minpoly())) {
            if (w.sign() > 0) {
                RealAlgebraic witness = w;
                // make positivity visible on the interval itself
                while (sign(witness.interval().lo) <= 0)
                    witness.refine_to(witness.interval().width() / 4);
                out.witness = witness;
                break;
            }
        }
    }
    return out;
}

} // namespace biorder
