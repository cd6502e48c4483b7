#include "biorder/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace biorder {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
} // namespace

IntPoly::IntPoly(Int constant)
{
    if (sign(constant) != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(Int c, int k)
{
    if (k < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
    if (sign(c) == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Int& IntPoly::leading() const
{
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

const Int& IntPoly::constant_term() const { return coeff(0); }

const Int& IntPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const
{
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& a : c_) r.c_.push_back(-a);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const
{
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sign(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const
{
    if (sign(s) == 0) return IntPoly();
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& a : c_) r.c_.push_back(a * s);
    return r;
}

IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

IntPoly IntPoly::pow(unsigned e) const
{
    IntPoly r = IntPoly::one();
    IntPoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

IntPoly IntPoly::derivative() const
{
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const
{
    if (is_zero()) return IntPoly();
    if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
    std::vector<Int> r(c_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_scale_primitive(const Rat& s) const
{
    // p(s x) = sum a_i s^i x^i; multiply through by den(s)^deg and take the
    // primitive part.
    if (is_zero()) return IntPoly();
    const Int num = s.get_num();
    const Int den = s.get_den();
    const int d = degree();
    std::vector<Int> r(c_.size());
    for (int i = 0; i <= d; ++i)
        r[static_cast<size_t>(i)] =
            c_[static_cast<size_t>(i)] * biorder::pow(num, static_cast<unsigned long>(i)) *
            biorder::pow(den, static_cast<unsigned long>(d - i));
    return IntPoly(std::move(r)).primitive_part();
}

IntPoly IntPoly::reversed() const
{
    if (is_zero()) return IntPoly();
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

Int IntPoly::evaluate(const Int& x) const
{
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::evaluate(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::content() const
{
    Int g = 0;
    for (const Int& a : c_) g = biorder::gcd(g, a);
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) return IntPoly();
    const Int g = content();
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& a : c_) r.c_.push_back(biorder::div_exact(a, g));
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const
{
    if (d.is_zero()) throw std::domain_error("IntPoly::div_exact: division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw std::domain_error("IntPoly::div_exact: inexact division");
    std::vector<Int> rem = c_;
    std::vector<Int> q(c_.size() - d.c_.size() + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int& top = rem[static_cast<size_t>(i) + d.c_.size() - 1];
        if (sign(top) == 0) continue;
        Int qi = biorder::div_exact(top, lead);
        q[static_cast<size_t>(i)] = qi;
        for (size_t j = 0; j < d.c_.size(); ++j)
            rem[static_cast<size_t>(i) + j] -= qi * d.c_[j];
    }
    for (const Int& a : rem)
        if (sign(a) != 0) throw std::domain_error("IntPoly::div_exact: inexact division");
    return IntPoly(std::move(q));
}

bool IntPoly::divides(const IntPoly& d) const
{
    if (is_zero()) return d.is_zero();
    if (d.is_zero()) return true;
    if (d.degree() < degree()) return false;
    try {
        (void)d.div_exact(*this);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

RatPoly IntPoly::to_rat() const
{
    std::vector<Rat> r;
    r.reserve(c_.size());
    for (const Int& a : c_) r.emplace_back(a);
    return RatPoly(std::move(r));
}

RatPoly IntPoly::monic() const
{
    if (is_zero()) throw std::domain_error("IntPoly::monic: zero polynomial");
    const Int& l = leading();
    std::vector<Rat> r;
    r.reserve(c_.size());
    for (const Int& a : c_) r.emplace_back(Rat(a) / Rat(l));
    return RatPoly(std::move(r));
}

IntPoly prem(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("prem: zero divisor");
    if (a.is_zero() || a.degree() < b.degree()) return a;
    const Int& lead = b.leading();
    int e = a.degree() - b.degree() + 1;
    std::vector<Int> r = a.coeffs();
    auto deg = [&r]() {
        int d = static_cast<int>(r.size()) - 1;
        while (d >= 0 && sign(r[static_cast<size_t>(d)]) == 0) --d;
        return d;
    };
    int dr = deg();
    const int db = b.degree();
    while (dr >= db) {
        const Int top = r[static_cast<size_t>(dr)];
        for (int i = 0; i <= dr; ++i) r[static_cast<size_t>(i)] *= lead;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= top * b.coeff(i);
        --e;
        dr = deg();
    }
    IntPoly rest(std::move(r));
    if (e > 0) rest = rest * biorder::pow(lead, static_cast<unsigned long>(e));
    return rest;
}

IntPoly prem_abs(const IntPoly& a, const IntPoly& b)
{
    // R = |lc(b)|^(da-db+1) * a mod b: compute the ordinary pseudo-remainder
    // and compensate the sign when the multiplier lc^(da-db+1) was negative
    if (b.is_zero()) throw std::domain_error("prem: zero divisor");
    if (a.is_zero() || a.degree() < b.degree()) return a;
    IntPoly r = prem(a, b);
    const int e = a.degree() - b.degree() + 1;
    if (sign(b.leading()) < 0 && e % 2 == 1) return -r;
    return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return sign(b.leading()) < 0 ? (-b).primitive_part() : b.primitive_part();
    if (b.is_zero()) return sign(a.leading()) < 0 ? (-a).primitive_part() : a.primitive_part();

    const Int cg = biorder::gcd(a.content(), b.content());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = prem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (sign(u.leading()) < 0) u = -u;
    return u * cg;
}

Int resultant(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant: zero polynomial input");
    if (a.degree() < b.degree()) {
        const Int r = resultant(b, a);
        return (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Int(-r) : r;
    }
    if (b.degree() == 0)
        return biorder::pow(b.leading(), static_cast<unsigned long>(a.degree()));

    // Sub-resultant PRS with content pulled out up front.
    const Int ca = a.content();
    const Int cb = b.content();
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    Int t = biorder::pow(ca, static_cast<unsigned long>(b.degree())) *
            biorder::pow(cb, static_cast<unsigned long>(a.degree()));
    int s = 1;
    Int g = 1, h = 1;
    while (true) {
        const int dA = A.degree();
        const int dB = B.degree();
        const int delta = dA - dB;
        if ((dA % 2 == 1) && (dB % 2 == 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        if (R.is_zero()) return 0; // common factor of positive degree
        const Int divisor = g * biorder::pow(h, static_cast<unsigned long>(delta));
        {
            std::vector<Int> rc = R.coeffs();
            for (Int& x : rc) x = biorder::div_exact(x, divisor);
            B = IntPoly(std::move(rc));
        }
        g = A.leading();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1), exact
            Int num = biorder::pow(g, static_cast<unsigned long>(delta));
            Int den = biorder::pow(h, static_cast<unsigned long>(delta - 1));
            h = biorder::div_exact(num, den);
        }
        if (B.degree() == 0) {
            const int d = A.degree();
            Int num = biorder::pow(B.leading(), static_cast<unsigned long>(d));
            Int den = biorder::pow(h, static_cast<unsigned long>(d - 1));
            Int res = biorder::div_exact(num, den);
            return t * Int(s) * res;
        }
    }
}

IntPoly squarefree_part(const IntPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (a.degree() == 0) return IntPoly::one();
    IntPoly g = poly_gcd(a, a.derivative());
    return a.div_exact(g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = a.primitive_part();
    if (sign(f.leading()) < 0) f = -f;
    if (f.degree() == 0) return out;

    // Yun's algorithm.
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly c = f.div_exact(g).primitive_part();
    IntPoly d = (f.derivative().div_exact(g) - c.derivative());
    int i = 1;
    while (c.degree() > 0) {
        IntPoly ai = poly_gcd(c, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        IntPoly cNext = c.div_exact(ai).primitive_part();
        d = d.div_exact(ai) - cNext.derivative();
        c = std::move(cNext);
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(Rat constant)
{
    if (sign(constant) != 0) c_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim()
{
    for (Rat& x : c_) x.canonicalize();
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rat& RatPoly::leading() const
{
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

const Rat& RatPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[static_cast<size_t>(k)];
}

RatPoly RatPoly::operator-() const
{
    RatPoly r;
    r.c_.reserve(c_.size());
    for (const Rat& a : c_) r.c_.push_back(-a);
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const
{
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const
{
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const
{
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const
{
    if (sign(s) == 0) return RatPoly();
    RatPoly r;
    r.c_.reserve(c_.size());
    for (const Rat& a : c_) r.c_.push_back(a * s);
    return r;
}

RatPoly RatPoly::pow(unsigned e) const
{
    RatPoly r = RatPoly::one();
    RatPoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

RatPoly RatPoly::derivative() const
{
    if (degree() < 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

Rat RatPoly::evaluate(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const
{
    if (d.is_zero()) throw std::domain_error("RatPoly::divmod: division by zero polynomial");
    if (is_zero() || degree() < d.degree()) return {RatPoly(), *this};
    std::vector<Rat> rem = c_;
    std::vector<Rat> q(c_.size() - d.c_.size() + 1, Rat(0));
    const Rat& lead = d.c_.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Rat& top = rem[static_cast<size_t>(i) + d.c_.size() - 1];
        if (sign(top) == 0) continue;
        Rat qi = top / lead;
        q[static_cast<size_t>(i)] = qi;
        for (size_t j = 0; j < d.c_.size(); ++j)
            rem[static_cast<size_t>(i) + j] -= qi * d.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const
{
    if (is_zero()) throw std::domain_error("RatPoly::monic: zero polynomial");
    return *this * (Rat(1) / leading());
}

IntPoly RatPoly::primitive_int() const
{
    if (is_zero()) return IntPoly();
    Int den = 1;
    for (const Rat& a : c_) den = biorder::lcm(den, a.get_den());
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const Rat& a : c_) {
        Rat scaled = a * Rat(den);
        r.emplace_back(scaled.get_num());
    }
    return IntPoly(std::move(r)).primitive_part();
}

bool poly_less(const RatPoly& a, const RatPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(int min_exp, std::vector<Int> coeffs)
    : min_(min_exp), c_(std::move(coeffs))
{
    trim();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : min_(0), c_(p.coeffs()) { trim(); }

void LaurentPoly::trim()
{
    size_t lead = 0;
    while (lead < c_.size() && sign(c_[lead]) == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        min_ += static_cast<int>(lead);
    }
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    if (c_.empty()) min_ = 0;
}

const Int& LaurentPoly::coeff(int k) const
{
    const int idx = k - min_;
    if (is_zero() || idx < 0 || idx >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[static_cast<size_t>(idx)];
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (Int& a : r.c_) a = -a;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const int lo = std::min(min_, o.min_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<Int> r(static_cast<size_t>(hi - lo + 1), Int(0));
    for (int k = lo; k <= hi; ++k)
        r[static_cast<size_t>(k - lo)] = coeff(k) + o.coeff(k);
    return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return LaurentPoly(min_ + o.min_, std::move(r));
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    if (is_zero()) return LaurentPoly();
    return LaurentPoly(min_ + k, c_);
}

LaurentPoly LaurentPoly::inverted() const
{
    if (is_zero()) return LaurentPoly();
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return LaurentPoly(-max_exp(), std::move(r));
}

Int LaurentPoly::evaluate_at_one() const
{
    Int s = 0;
    for (const Int& a : c_) s += a;
    return s;
}

} // namespace biorder
