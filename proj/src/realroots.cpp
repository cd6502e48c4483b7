#include "biorder/realroots.hpp"

#include "biorder/factorize.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace biorder {

namespace {

int sign_at_infinity(const IntPoly& p, bool negInf)
{
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    if (negInf && p.degree() % 2 == 1) s = -s;
    return s;
}

// Divide by the positive content only, so signs at every point survive.
IntPoly primitive_signed(const IntPoly& p)
{
    return p.primitive_part(); // content() is nonnegative; sign is preserved
}

} // namespace

SturmChain::SturmChain(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    sq_ = squarefree_part(f);
    chain_.push_back(sq_);
    if (sq_.degree() >= 1) {
        chain_.push_back(primitive_signed(sq_.derivative()));
        while (chain_.back().degree() >= 1) {
            const IntPoly& a = chain_[chain_.size() - 2];
            const IntPoly& b = chain_.back();
            IntPoly r = prem_abs(a, b);
            if (r.is_zero()) break; // cannot happen for squarefree input
            chain_.push_back(primitive_signed(-r));
        }
    }
}

int SturmChain::variations_at(const Bound& x, bool atNegInf) const
{
    int count = 0;
    int prev = 0;
    for (const IntPoly& p : chain_) {
        int s;
        if (x.finite())
            s = sign(p.evaluate(*x.value));
        else
            s = sign_at_infinity(p, atNegInf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_half_open(const Bound& a, const Bound& b) const
{
    if (a.finite() && b.finite() && *a.value >= *b.value) return 0;
    return variations_at(a, true) - variations_at(b, false);
}

int count_real_roots(const IntPoly& f, const Bound& lo, const Bound& hi)
{
    SturmChain chain(f);
    int n = chain.count_half_open(lo, hi);
    if (hi.finite() && sign(chain.squarefree().evaluate(*hi.value)) == 0) --n;
    return n;
}

int count_real_roots(const IntPoly& f)
{
    return count_real_roots(f, Bound::neg_inf(), Bound::pos_inf());
}

int count_real_roots_closed(const IntPoly& f, const Rat& lo, const Rat& hi)
{
    if (lo > hi) return 0;
    SturmChain chain(f);
    if (lo == hi) return sign(chain.squarefree().evaluate(lo)) == 0 ? 1 : 0;
    int n = chain.count_half_open(Bound::at(lo), Bound::at(hi));
    if (sign(chain.squarefree().evaluate(lo)) == 0) ++n;
    return n;
}

Rat cauchy_root_bound(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    if (f.degree() == 0) return Rat(1);
    Int maxAbs = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Int a = biorder::abs(f.coeff(i));
        if (a > maxAbs) maxAbs = a;
    }
    Rat b = Rat(1) + Rat(maxAbs) / Rat(biorder::abs(f.leading()));
    b.canonicalize();
    return b;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsolatingInterval> out;
    if (f.degree() == 0) return out;

    SturmChain chain(f);
    const IntPoly& sq = chain.squarefree();
    if (sq.degree() == 1) {
        Rat root(-sq.coeff(0), sq.coeff(1));
        root.canonicalize();
        return {IsolatingInterval{root, root}};
    }
    const Rat B = cauchy_root_bound(sq);

    struct Piece {
        Rat a, b;
        int count;
    };
    std::deque<Piece> queue;
    {
        const int total = chain.count_half_open(Bound::at(-B), Bound::at(B));
        if (total > 0) queue.push_back({-B, B, total});
    }

    while (!queue.empty()) {
        Piece piece = queue.front();
        queue.pop_front();
        if (piece.count == 0) continue;
        if (piece.count == 1) {
            if (sign(sq.evaluate(piece.b)) == 0) {
                out.push_back({piece.b, piece.b});
            } else {
                // exactly one root strictly inside; endpoints are non-roots,
                // so the squarefree part changes sign across [a, b]
                out.push_back({piece.a, piece.b});
            }
            continue;
        }
        const Rat mid = (piece.a + piece.b) / 2;
        if (sign(sq.evaluate(mid)) == 0) {
            out.push_back({mid, mid});
            // carve out a neighborhood around mid containing no other root
            Rat eps = (piece.b - piece.a) / 4;
            while (chain.count_half_open(Bound::at(mid - eps), Bound::at(mid + eps)) != 1)
                eps /= 2;
            const int leftCount =
                chain.count_half_open(Bound::at(piece.a), Bound::at(mid - eps));
            const int rightCount =
                chain.count_half_open(Bound::at(mid + eps), Bound::at(piece.b));
            if (leftCount > 0) queue.push_back({piece.a, mid - eps, leftCount});
            if (rightCount > 0) queue.push_back({mid + eps, piece.b, rightCount});
        } else {
            const int leftCount = chain.count_half_open(Bound::at(piece.a), Bound::at(mid));
            if (leftCount > 0) queue.push_back({piece.a, mid, leftCount});
            const int rightCount = piece.count - leftCount;
            if (rightCount > 0) queue.push_back({mid, piece.b, rightCount});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });

    // adjacent pieces may share an endpoint; shrink until pairwise disjoint
    auto bisect_once = [&sq](IsolatingInterval& iv) {
        const Rat m = iv.midpoint();
        const int sm = biorder::sign(sq.evaluate(m));
        if (sm == 0) {
            iv.lo = iv.hi = m;
            return;
        }
        if (sm == biorder::sign(sq.evaluate(iv.lo)))
            iv.lo = m;
        else
            iv.hi = m;
    };
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi >= out[i + 1].lo) {
            if (!out[i].is_point()) bisect_once(out[i]);
            if (out[i].hi >= out[i + 1].lo && !out[i + 1].is_point()) bisect_once(out[i + 1]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

RealAlgebraic::RealAlgebraic(IntPoly minpoly, IsolatingInterval interval)
    : minpoly_(std::move(minpoly)), iv_(std::move(interval))
{
    if (minpoly_.is_zero() || minpoly_.degree() < 1)
        throw std::invalid_argument("RealAlgebraic: minimal polynomial must have degree >= 1");
    if (biorder::sign(minpoly_.leading()) < 0) minpoly_ = -minpoly_;
    minpoly_ = minpoly_.primitive_part();
    normalize();
}

void RealAlgebraic::normalize()
{
    if (iv_.lo > iv_.hi) throw std::invalid_argument("RealAlgebraic: inverted interval");
    if (iv_.is_point()) {
        if (biorder::sign(minpoly_.evaluate(iv_.lo)) != 0)
            throw std::invalid_argument("RealAlgebraic: point interval is not a root");
        return;
    }
    if (biorder::sign(minpoly_.evaluate(iv_.lo)) == 0) {
        iv_.hi = iv_.lo;
        return;
    }
    if (biorder::sign(minpoly_.evaluate(iv_.hi)) == 0) {
        iv_.lo = iv_.hi;
        return;
    }
    if (biorder::sign(minpoly_.evaluate(iv_.lo)) == biorder::sign(minpoly_.evaluate(iv_.hi)))
        throw std::invalid_argument("RealAlgebraic: interval does not isolate a root");
}

RealAlgebraic RealAlgebraic::from_rational(const Rat& r)
{
    IntPoly mp(std::vector<Int>{Int(-r.get_num()), Int(r.get_den())});
    return RealAlgebraic(std::move(mp), IsolatingInterval{r, r});
}

Rat RealAlgebraic::rational_value() const
{
    if (!is_rational()) throw std::domain_error("RealAlgebraic: not rational");
    Rat v(-minpoly_.coeff(0), minpoly_.coeff(1));
    v.canonicalize();
    return v;
}

void RealAlgebraic::refine_to(const Rat& width)
{
    if (biorder::sign(width) <= 0) throw std::invalid_argument("refine_to: width must be positive");
    while (!iv_.is_point() && iv_.width() > width) {
        const Rat m = iv_.midpoint();
        const int sm = biorder::sign(minpoly_.evaluate(m));
        if (sm == 0) {
            iv_.lo = iv_.hi = m;
            return;
        }
        if (sm == biorder::sign(minpoly_.evaluate(iv_.lo)))
            iv_.lo = m;
        else
            iv_.hi = m;
    }
}

RealAlgebraic RealAlgebraic::refined(const Rat& width) const
{
    RealAlgebraic r = *this;
    r.refine_to(width);
    return r;
}

int RealAlgebraic::sign() const { return compare(Rat(0)); }

int RealAlgebraic::compare(const Rat& q) const
{
    if (iv_.is_point()) {
        if (iv_.lo < q) return -1;
        if (iv_.lo > q) return 1;
        return 0;
    }
    RealAlgebraic tmp = *this;
    for (int iter = 0; iter < 100000; ++iter) {
        if (tmp.iv_.is_point()) return tmp.compare(q);
        // non-point intervals keep the root strictly inside, so a bound that
        // reaches an endpoint decides the comparison
        if (tmp.iv_.hi <= q) return -1;
        if (tmp.iv_.lo >= q) return 1;
        if (biorder::sign(tmp.minpoly_.evaluate(q)) == 0) return 0; // q is the isolated root
        tmp.refine_to(tmp.iv_.width() / 4);
    }
    throw std::runtime_error("RealAlgebraic::compare(Rat): refinement did not separate");
}

int RealAlgebraic::compare(const RealAlgebraic& o) const
{
    if (iv_.is_point() && o.iv_.is_point()) {
        if (iv_.lo < o.iv_.lo) return -1;
        if (iv_.lo > o.iv_.lo) return 1;
        return 0;
    }
    if (iv_.is_point()) return -o.compare(iv_.lo);
    if (o.iv_.is_point()) return compare(o.iv_.lo);

    RealAlgebraic x = *this, y = o;
    const bool sameMin = (x.minpoly_ == y.minpoly_);
    for (int iter = 0; iter < 100000; ++iter) {
        if (x.iv_.hi < y.iv_.lo) return -1;
        if (y.iv_.hi < x.iv_.lo) return 1;
        if (sameMin) {
            const Rat lo = std::max(x.iv_.lo, y.iv_.lo);
            const Rat hi = std::min(x.iv_.hi, y.iv_.hi);
            if (lo <= hi && count_real_roots_closed(x.minpoly_, lo, hi) >= 1) return 0;
        }
        x.refine_to(x.iv_.width() / 4);
        y.refine_to(y.iv_.width() / 4);
        if (x.iv_.is_point()) return -y.compare(x.iv_.lo);
        if (y.iv_.is_point()) return x.compare(y.iv_.lo);
    }
    throw std::runtime_error("RealAlgebraic::compare: refinement did not separate");
}

double RealAlgebraic::approx() const
{
    RealAlgebraic t = *this;
    t.refine_to(Rat(1, 1000000000));
    Rat m = t.iv_.is_point() ? t.iv_.lo : t.iv_.midpoint();
    return m.get_d();
}

std::vector<RealAlgebraic> RealAlgebraic::roots_of(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("roots_of: zero polynomial");
    std::vector<RealAlgebraic> out;
    if (f.degree() == 0) return out;

    const Factorization fac = factor_rationals(f);
    std::vector<IntPoly> irr;
    irr.reserve(fac.factors.size());
    for (const auto& [g, m] : fac.factors) irr.push_back(g.primitive_int());

    const IntPoly sq = squarefree_part(f);
    for (const IsolatingInterval& iv0 : isolate_real_roots(f)) {
        IsolatingInterval iv = iv0;
        // shrink until exactly one irreducible factor claims the interval
        for (int iter = 0;; ++iter) {
            const IntPoly* owner = nullptr;
            int owners = 0;
            int ownerCount = 0;
            for (const IntPoly& g : irr) {
                const int c = count_real_roots_closed(g, iv.lo, iv.hi);
                if (c > 0) {
                    ++owners;
                    owner = &g;
                    ownerCount = c;
                }
            }
            if (owners == 1 && ownerCount == 1) {
                out.emplace_back(*owner, iv);
                break;
            }
            if (iter > 100000)
                throw std::runtime_error("roots_of: factor selection did not converge");
            // bisect towards the root of the squarefree part
            if (iv.is_point())
                throw std::runtime_error("roots_of: point interval with ambiguous owner");
            const Rat m = iv.midpoint();
            const int sm = biorder::sign(sq.evaluate(m));
            if (sm == 0) {
                iv.lo = iv.hi = m;
                // a point can only be claimed by its own minimal polynomial;
                // loop once more to find it
                continue;
            }
            if (sm == biorder::sign(sq.evaluate(iv.lo)))
                iv.lo = m;
            else
                iv.hi = m;
        }
    }
    return out;
}

int sign_of_poly_at(const RatPoly& g, const RealAlgebraic& a)
{
    if (g.is_zero()) return 0;
    const RatPoly mp = a.minpoly().monic();
    RatPoly r = g % mp;
    if (r.is_zero()) return 0;

    if (a.interval().is_point()) return sign(r.evaluate(a.interval().lo));

    RealAlgebraic t = a;
    for (int iter = 0; iter < 100000; ++iter) {
        // interval Horner evaluation of r over [lo, hi]
        const Rat& lo = t.interval().lo;
        const Rat& hi = t.interval().hi;
        Rat mn = 0, mx = 0;
        bool first = true;
        for (int i = r.degree(); i >= 0; --i) {
            if (first) {
                mn = mx = r.coeff(i);
                first = false;
                continue;
            }
            const Rat p1 = mn * lo, p2 = mn * hi, p3 = mx * lo, p4 = mx * hi;
            Rat nmn = std::min(std::min(p1, p2), std::min(p3, p4));
            Rat nmx = std::max(std::max(p1, p2), std::max(p3, p4));
            mn = nmn + r.coeff(i);
            mx = nmx + r.coeff(i);
        }
        if (sign(mn) > 0) return 1;
        if (sign(mx) < 0) return -1;
        t.refine_to(t.interval().width() / 4);
        if (t.interval().is_point()) return sign(r.evaluate(t.interval().lo));
    }
    throw std::runtime_error("sign_of_poly_at: refinement did not converge");
}

} // namespace biorder
