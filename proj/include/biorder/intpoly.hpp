/*
    intpoly.hpp

    Dense exact polynomials: IntPoly over Z, RatPoly over Q, LaurentPoly over
    Z[x, x^-1].  Coefficients are stored low to high; the zero polynomial
    stores nothing and reports degree -1.

    Carries the classical exact kernels the rest of the library is built on:
    pseudo-division, primitive parts, subresultant resultants, gcd, Yun
    squarefree decomposition.
*/
#ifndef BIORDER_INTPOLY_HPP
#define BIORDER_INTPOLY_HPP

#include "biorder/numeric.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace biorder {

class RatPoly;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs); // low to high, trimmed
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    static IntPoly x() { return IntPoly({0, 1}); }
    // c * x^k
    static IntPoly monomial(Int c, int k);

    bool is_zero() const { return c_.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& leading() const;
    const Int& constant_term() const;
    // Coefficient of x^k (zero outside the stored range).
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;
    // Multiply by x^k.
    IntPoly shifted(int k) const;
    // p(s*x) for rational s, denominators cleared, primitive.
    IntPoly compose_scale_primitive(const Rat& s) const;
    // x^deg * p(1/x); drops trailing zero coefficients first.
    IntPoly reversed() const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    // gcd of coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    // p / content(p); keeps the sign of the leading coefficient.
    IntPoly primitive_part() const;
    // Exact division in Z[x]; throws when not divisible.
    IntPoly div_exact(const IntPoly& d) const;
    bool divides(const IntPoly& d) const; // this | d

    RatPoly to_rat() const;
    // Monic rational polynomial p / lc(p).
    RatPoly monic() const;

private:
    void trim();
    std::vector<Int> c_;
};

IntPoly operator*(const Int& s, const IntPoly& p);

// Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
IntPoly prem(const IntPoly& a, const IntPoly& b);
// Sign-safe variant: |lc(b)|^(deg a - deg b + 1) * a = q*b + R, so R keeps
// the sign behaviour of a at every point.  Used by Sturm chains.
IntPoly prem_abs(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Resultant with the convention Res(a,b) = lc(a)^deg(b) * prod b(alpha_i)
// over the roots alpha_i of a.  Subresultant PRS, exact.  Inputs nonzero.
Int resultant(const IntPoly& a, const IntPoly& b);

// Discriminant-free squarefree part a / gcd(a, a'); primitive.
IntPoly squarefree_part(const IntPoly& a);

// Yun decomposition: list of (primitive squarefree factor, multiplicity),
// pairwise coprime, sign carried by the first entry's caller (input must be
// nonzero and is taken up to content).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(Rat constant);
    explicit RatPoly(std::vector<Rat> coeffs);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly(Rat(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& leading() const;
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly pow(unsigned e) const;
    RatPoly derivative() const;
    Rat evaluate(const Rat& x) const;

    // Euclidean division; d nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    RatPoly operator%(const RatPoly& d) const { return divmod(d).second; }
    RatPoly operator/(const RatPoly& d) const { return divmod(d).first; }

    RatPoly monic() const;
    // Clear denominators and content: primitive IntPoly with the same roots,
    // sign of the leading coefficient preserved.
    IntPoly primitive_int() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// (degree, then coefficients low to high) — the canonical factor order.
bool poly_less(const RatPoly& a, const RatPoly& b);

class LaurentPoly {
public:
    LaurentPoly() = default;
    // coeffs[i] is the coefficient of x^(min_exp + i); trimmed on both ends.
    LaurentPoly(int min_exp, std::vector<Int> coeffs);
    explicit LaurentPoly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return min_; }
    int max_exp() const { return min_ + static_cast<int>(c_.size()) - 1; }
    int span() const { return is_zero() ? -1 : max_exp() - min_exp(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(int k) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return min_ == o.min_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by x^k.
    LaurentPoly shifted(int k) const;
    // x -> 1/x.
    LaurentPoly inverted() const;
    Int evaluate_at_one() const;

private:
    void trim();
    int min_ = 0;
    std::vector<Int> c_;
};

} // namespace biorder

#endif
