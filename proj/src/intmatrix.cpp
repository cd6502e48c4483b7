#include "biorder/intmatrix.hpp"

#include <stdexcept>

namespace biorder {

SquareIntMatrix::SquareIntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0))
{
    if (n < 0) throw std::invalid_argument("SquareIntMatrix: negative dimension");
}

SquareIntMatrix::SquareIntMatrix(int n, std::vector<Int> rowMajor) : n_(n), e_(std::move(rowMajor))
{
    if (n < 0 || e_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("SquareIntMatrix: entry count does not match dimension");
}

SquareIntMatrix SquareIntMatrix::identity(int n)
{
    SquareIntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SquareIntMatrix SquareIntMatrix::companion(const IntPoly& monic)
{
    if (monic.is_zero() || !monic.is_monic() || monic.degree() < 1)
        throw std::invalid_argument("companion: need a monic polynomial of degree >= 1");
    const int n = monic.degree();
    SquareIntMatrix m(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -monic.coeff(i);
    return m;
}

SquareIntMatrix SquareIntMatrix::operator*(const SquareIntMatrix& o) const
{
    if (n_ != o.n_) throw std::invalid_argument("matrix product: dimension mismatch");
    SquareIntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (sign(a) == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> SquareIntMatrix::apply(const std::vector<Int>& v) const
{
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Int> r(static_cast<size_t>(n_), Int(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

SquareIntMatrix SquareIntMatrix::kronecker(const SquareIntMatrix& o) const
{
    const int n = n_ * o.n_;
    SquareIntMatrix r(n);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Int& a = at(i, j);
            if (sign(a) == 0) continue;
            for (int k = 0; k < o.n_; ++k)
                for (int l = 0; l < o.n_; ++l)
                    r.at(i * o.n_ + k, j * o.n_ + l) = a * o.at(k, l);
        }
    return r;
}

SquareIntMatrix SquareIntMatrix::kronecker_power(int n) const
{
    if (n < 1) throw std::invalid_argument("kronecker_power: exponent must be >= 1");
    SquareIntMatrix r = *this;
    for (int i = 1; i < n; ++i) r = r.kronecker(*this);
    return r;
}

SquareIntMatrix SquareIntMatrix::pow(unsigned e) const
{
    SquareIntMatrix r = identity(n_);
    SquareIntMatrix b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Int SquareIntMatrix::determinant() const
{
    if (n_ == 0) return 1;
    // fraction-free Bareiss elimination with row pivoting
    std::vector<std::vector<Int>> a(static_cast<size_t>(n_), std::vector<Int>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);

    int sgn = 1;
    Int prev = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (sign(a[static_cast<size_t>(k)][static_cast<size_t>(k)]) == 0) {
            int swapRow = -1;
            for (int r = k + 1; r < n_; ++r)
                if (sign(a[static_cast<size_t>(r)][static_cast<size_t>(k)]) != 0) { swapRow = r; break; }
            if (swapRow < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swapRow)]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) {
                Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                          a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = biorder::div_exact(num, prev);
            }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Int d = a[static_cast<size_t>(n_ - 1)][static_cast<size_t>(n_ - 1)];
    return sgn > 0 ? d : Int(-d);
}

IntPoly char_poly(const SquareIntMatrix& m)
{
    const int n = m.size();
    if (n == 0) return IntPoly::one();

    // evaluate det(k*I - m) at k = 0..n, then interpolate exactly
    std::vector<Int> values(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        SquareIntMatrix mk(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mk.at(i, j) = -m.at(i, j);
                if (i == j) mk.at(i, j) += Int(k);
            }
        values[static_cast<size_t>(k)] = mk.determinant();
    }

    // Newton forward differences at integer nodes 0..n
    std::vector<Rat> diffs(values.size());
    for (size_t i = 0; i < values.size(); ++i) diffs[i] = Rat(values[i]);
    std::vector<Rat> newton;
    newton.reserve(diffs.size());
    Int factorial = 1;
    for (size_t level = 0; level < values.size(); ++level) {
        if (level > 0) factorial *= Int(static_cast<long>(level));
        newton.push_back(diffs[0] / Rat(factorial));
        for (size_t i = 0; i + 1 < diffs.size() - level; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    }
    // p(X) = sum newton[j] * X(X-1)...(X-j+1)
    RatPoly p;
    RatPoly falling = RatPoly::one();
    for (size_t j = 0; j < newton.size(); ++j) {
        p = p + falling * newton[j];
        RatPoly lin(std::vector<Rat>{Rat(-static_cast<long>(j)), Rat(1)});
        falling = falling * lin;
    }

    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Rat& q = p.coeff(i);
        if (q.get_den() != 1)
            throw std::runtime_error("char_poly: interpolation produced a non-integer coefficient");
        c[static_cast<size_t>(i)] = q.get_num();
    }
    IntPoly cp(std::move(c));
    if (!cp.is_monic())
        throw std::runtime_error("char_poly: result is not monic");
    return cp;
}

} // namespace biorder
