/*
    realroots.hpp

    Exact real-root machinery: Sturm chains over Z with sign-preserving
    normalization, root counting on open intervals with rational or infinite
    endpoints, isolation by Sturm-guided bisection from the Cauchy bound, and
    real algebraic numbers as (irreducible minimal polynomial, isolating
    interval).  No floating point on any exact path.
*/
#ifndef BIORDER_REALROOTS_HPP
#define BIORDER_REALROOTS_HPP

#include "biorder/intpoly.hpp"

#include <optional>
#include <vector>

namespace biorder {

// Endpoint of a root-counting range.
struct Bound {
    // unset => infinite (sign tells which end)
    std::optional<Rat> value;
    static Bound neg_inf() { return Bound{}; }
    static Bound pos_inf() { return Bound{}; }
    static Bound at(Rat v) { return Bound{std::move(v)}; }
    bool finite() const { return value.has_value(); }
};

// [lo, hi] with rational endpoints, or an exact rational point (lo == hi).
struct IsolatingInterval {
    Rat lo, hi;
    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
};

// Sturm chain of the squarefree part; reusable counting object.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& f); // f nonzero; chain built on squarefree part
    // distinct roots in (a, b]; infinite bounds allowed
    int count_half_open(const Bound& a, const Bound& b) const;
    const IntPoly& squarefree() const { return sq_; }

private:
    int variations_at(const Bound& x, bool atNegInf) const;
    IntPoly sq_;
    std::vector<IntPoly> chain_;
};

// Distinct real roots of f in the open range (lo, hi); f nonzero.
int count_real_roots(const IntPoly& f, const Bound& lo, const Bound& hi);
int count_real_roots(const IntPoly& f); // whole line

// Distinct roots of f in [lo, hi] (closed); f nonzero.
int count_real_roots_closed(const IntPoly& f, const Rat& lo, const Rat& hi);

// Disjoint isolating intervals, sorted ascending, one per distinct real root.
// Non-point intervals [a,b] satisfy sq(a)*sq(b) < 0 for the squarefree part
// sq, so plain bisection refines them forever after.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f);

// 1 + max|a_i| / |a_lead|, an upper bound on the absolute value of all roots.
Rat cauchy_root_bound(const IntPoly& f);

class RealAlgebraic {
public:
    // minpoly must be irreducible over Q, primitive with positive leading
    // coefficient; interval must contain exactly one of its real roots.
    RealAlgebraic(IntPoly minpoly, IsolatingInterval interval);

    static RealAlgebraic from_rational(const Rat& r);
    static RealAlgebraic zero() { return from_rational(Rat(0)); }
    static RealAlgebraic one() { return from_rational(Rat(1)); }
    // All real roots of f (any nonzero polynomial), ascending; each paired
    // with its irreducible minimal polynomial.
    static std::vector<RealAlgebraic> roots_of(const IntPoly& f);

    const IntPoly& minpoly() const { return minpoly_; }
    const IsolatingInterval& interval() const { return iv_; }
    bool is_rational() const { return minpoly_.degree() == 1; }
    // exact value when degree-1 minpoly
    Rat rational_value() const;

    // Same designated root, interval width <= width.
    RealAlgebraic refined(const Rat& width) const;
    // Refine in place until width <= width.
    void refine_to(const Rat& width);

    int sign() const;              // sign of the number itself
    int compare(const RealAlgebraic& o) const;
    int compare(const Rat& q) const;
    bool operator==(const RealAlgebraic& o) const { return compare(o) == 0; }
    double approx() const;

private:
    void normalize();
    IntPoly minpoly_;
    IsolatingInterval iv_;
};

// Exact sign of g at a; 0 iff minpoly(a) divides g.
int sign_of_poly_at(const RatPoly& g, const RealAlgebraic& a);

} // namespace biorder

#endif
