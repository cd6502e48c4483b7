#include "biorder/abelorder.hpp"

#include "biorder/factorize.hpp"
#include "biorder/specialpoly.hpp"

#include <stdexcept>

namespace biorder {

int InvariantFlag::dimension() const
{
    int d = 0;
    for (const FlagLevel& l : levels) d += static_cast<int>(l.basis.size());
    return d;
}

std::pair<bool, std::vector<OrderEvidence>> preserves_order(const SquareIntMatrix& m)
{
    if (biorder::abs(m.determinant()) != 1)
        throw std::invalid_argument("preserves_order: |det| != 1, not an automorphism of Z^n");
    std::vector<OrderEvidence> evidence;
    bool ok = true;
    const IntPoly cp = char_poly(m);
    for (const auto& [g, mult] : factor_rationals(cp).factors) {
        (void)mult;
        const bool pos = has_positive_real_root(g.primitive_int());
        evidence.push_back({g, pos});
        if (!pos) ok = false;
    }
    return {ok, evidence};
}

namespace {

// smallest positive real root of an irreducible integer polynomial
RealAlgebraic smallest_positive_root(const IntPoly& g)
{
    for (const RealAlgebraic& r : RealAlgebraic::roots_of(g))
        if (r.sign() > 0) return r;
    throw std::logic_error("smallest_positive_root: no positive real root");
}

} // namespace

InvariantFlag composition_series(const SquareIntMatrix& m)
{
    {
        auto [ok, ev] = preserves_order(m);
        (void)ev;
        if (!ok)
            throw std::invalid_argument("composition_series: no invariant order exists");
    }
    const int n = m.size();
    InvariantFlag flag;
    std::vector<RatVec> flagBasis; // cumulative, level by level

    RatMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = Rat(m.at(i, j));

    const Factorization fac = factor_rationals(char_poly(m));
    for (const auto& [gMonic, mult] : fac.factors) {
        const IntPoly gInt = gMonic.primitive_int();
        const int dg = gMonic.degree();
        const RealAlgebraic rho = smallest_positive_root(gInt);
        for (int iter = 0; iter < mult; ++iter) {
            const int d = static_cast<int>(flagBasis.size());
            const int q = n - d;

            // complement of the current flag span: standard basis vectors at
            // the non-pivot columns of the row-reduced flag basis
            std::vector<int> freeCols;
            {
                std::vector<bool> isPivot(static_cast<size_t>(n), false);
                if (d > 0) {
                    RatMatrix rows(d, n);
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < n; ++j) rows.at(i, j) = flagBasis[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    for (int c : rref(rows)) isPivot[static_cast<size_t>(c)] = true;
                }
                for (int j = 0; j < n; ++j)
                    if (!isPivot[static_cast<size_t>(j)]) freeCols.push_back(j);
            }
            if (static_cast<int>(freeCols.size()) != q)
                throw std::logic_error("composition_series: complement dimension mismatch");

            // full change-of-basis A = [flag basis | complement]; the induced
            // quotient action reads off the complement coordinates of M e_c
            RatMatrix A(n, n);
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < n; ++i) A.at(i, j) = flagBasis[static_cast<size_t>(j)][static_cast<size_t>(i)];
            for (int j = 0; j < q; ++j) A.at(freeCols[static_cast<size_t>(j)], d + j) = 1;
            const RatMatrix Ainv = inverse(A);

            RatMatrix Q(q, q);
            for (int j = 0; j < q; ++j) {
                RatVec img(static_cast<size_t>(n), Rat(0));
                for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = M.at(i, freeCols[static_cast<size_t>(j)]);
                const RatVec coords = Ainv.apply(img);
                for (int i = 0; i < q; ++i) Q.at(i, j) = coords[static_cast<size_t>(d + i)];
            }

            // kernel of g(Q); nonempty while the factor still divides char(Q)
            RatMatrix N = RatMatrix::identity(q) * gMonic.coeff(dg);
            for (int i = dg - 1; i >= 0; --i)
                N = Q * N + RatMatrix::identity(q) * gMonic.coeff(i);
            const std::vector<RatVec> ker = kernel_basis(N);
            if (ker.empty())
                throw std::logic_error("composition_series: expected kernel vector is missing");
            RatVec w = primitive_direction(ker.front());

            // cyclic chain w, Qw, ..., Q^(dg-1) w in quotient coordinates,
            // lifted through the complement embedding
            FlagLevel level{gMonic, rho, {}};
            RatVec cur = w;
            for (int t = 0; t < dg; ++t) {
                RatVec lift(static_cast<size_t>(n), Rat(0));
                for (int i = 0; i < q; ++i)
                    lift[static_cast<size_t>(freeCols[static_cast<size_t>(i)])] = cur[static_cast<size_t>(i)];
                level.basis.push_back(lift);
                flagBasis.push_back(std::move(lift));
                if (t + 1 < dg) cur = Q.apply(cur);
            }
            flag.levels.push_back(std::move(level));
        }
    }
    if (flag.dimension() != n)
        throw std::logic_error("composition_series: flag does not fill the space");
    return flag;
}

OrderOracle::OrderOracle(SquareIntMatrix m) : m_(std::move(m)), flag_(composition_series(m_))
{
    finish();
}

OrderOracle::OrderOracle(SquareIntMatrix m, InvariantFlag flag)
    : m_(std::move(m)), flag_(std::move(flag))
{
    finish();
}

void OrderOracle::finish()
{
    const int n = m_.size();
    if (flag_.dimension() != n)
        throw std::invalid_argument("OrderOracle: flag dimension mismatch");
    RatMatrix B(n, n);
    int col = 0;
    for (const FlagLevel& level : flag_.levels)
        for (const RatVec& b : level.basis) {
            for (int i = 0; i < n; ++i) B.at(i, col) = b[static_cast<size_t>(i)];
            ++col;
        }
    basisInv_ = inverse(B);
}

int OrderOracle::sign(const std::vector<Int>& v) const
{
    const int n = m_.size();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("OrderOracle::sign: dimension mismatch");
    RatVec vr(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vr[static_cast<size_t>(i)] = Rat(v[static_cast<size_t>(i)]);
    const RatVec coords = basisInv_.apply(vr);

    // minimal flag level containing v = last block with a nonzero coordinate
    int blockStart = 0;
    int lastLevel = -1, lastStart = 0;
    for (size_t li = 0; li < flag_.levels.size(); ++li) {
        const int d = static_cast<int>(flag_.levels[li].basis.size());
        for (int t = 0; t < d; ++t)
            if (biorder::sign(coords[static_cast<size_t>(blockStart + t)]) != 0) {
                lastLevel = static_cast<int>(li);
                lastStart = blockStart;
            }
        blockStart += d;
    }
    if (lastLevel < 0) return 0;

    const FlagLevel& level = flag_.levels[static_cast<size_t>(lastLevel)];
    const int d = static_cast<int>(level.basis.size());
    std::vector<Rat> c(static_cast<size_t>(d));
    for (int t = 0; t < d; ++t) c[static_cast<size_t>(t)] = coords[static_cast<size_t>(lastStart + t)];
    return sign_of_poly_at(RatPoly(std::move(c)), level.rho);
}

} // namespace biorder
