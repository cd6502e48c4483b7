#include "biorder/ratlinalg.hpp"

#include <stdexcept>

namespace biorder {

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const
{
    if (cols != o.rows) throw std::invalid_argument("RatMatrix product: dimension mismatch");
    RatMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& a = at(i, k);
            if (sign(a) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const
{
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("RatMatrix sum: dimension mismatch");
    RatMatrix r(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const
{
    RatMatrix r(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * s;
    return r;
}

RatVec RatMatrix::apply(const RatVec& v) const
{
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("RatMatrix apply: dimension mismatch");
    RatVec r(static_cast<size_t>(rows), Rat(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<int> rref(RatMatrix& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (sign(m.at(r, col)) != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Rat f = m.at(r, col);
            if (sign(f) == 0) continue;
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVec> kernel_basis(const RatMatrix& m)
{
    RatMatrix r = m;
    const std::vector<int> pivots = rref(r);
    std::vector<bool> isPivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots) isPivot[static_cast<size_t>(c)] = true;

    std::vector<RatVec> basis;
    for (int col = 0; col < m.cols; ++col) {
        if (isPivot[static_cast<size_t>(col)]) continue;
        RatVec v(static_cast<size_t>(m.cols), Rat(0));
        v[static_cast<size_t>(col)] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<size_t>(pivots[pr])] = -r.at(static_cast<int>(pr), col);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const RatMatrix& a, const RatVec& b, RatVec& x)
{
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve: dimension mismatch");
    RatMatrix aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[static_cast<size_t>(i)];
    }
    const std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == a.cols) return false; // inconsistent
    x.assign(static_cast<size_t>(a.cols), Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[static_cast<size_t>(pivots[pr])] = aug.at(static_cast<int>(pr), a.cols);
    return true;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw std::domain_error("inverse: singular matrix");
    RatMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

RatVec primitive_direction(const RatVec& v)
{
    Int den = 1;
    for (const Rat& a : v) den = biorder::lcm(den, a.get_den());
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int g = 0;
    for (const Rat& a : v) {
        Rat s = a * Rat(den);
        ints.push_back(s.get_num());
        g = biorder::gcd(g, ints.back());
    }
    if (sign(g) == 0) return RatVec(v.size(), Rat(0));
    int firstSign = 0;
    for (const Int& a : ints)
        if (sign(a) != 0) { firstSign = sign(a); break; }
    if (firstSign < 0) g = -g;
    RatVec out;
    out.reserve(v.size());
    for (const Int& a : ints) out.emplace_back(Rat(biorder::div_exact(a, g)));
    return out;
}

} // namespace biorder
