/*
    intmatrix.hpp

    Exact square integer matrices: Bareiss determinants, characteristic
    polynomials, Kronecker (tensor) powers.
*/
#ifndef BIORDER_INTMATRIX_HPP
#define BIORDER_INTMATRIX_HPP

#include "biorder/intpoly.hpp"

#include <vector>

namespace biorder {

class SquareIntMatrix {
public:
    SquareIntMatrix() = default;
    explicit SquareIntMatrix(int n); // zero matrix
    SquareIntMatrix(int n, std::vector<Int> rowMajor);

    static SquareIntMatrix identity(int n);
    // Companion matrix of a monic integer polynomial (degree >= 1):
    // subdiagonal ones, last column = -coefficients.
    static SquareIntMatrix companion(const IntPoly& monic);

    int size() const { return n_; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r * n_ + c)]; }
    Int& at(int r, int c) { return e_[static_cast<size_t>(r * n_ + c)]; }
    const std::vector<Int>& entries() const { return e_; }

    bool operator==(const SquareIntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    SquareIntMatrix operator*(const SquareIntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    SquareIntMatrix kronecker(const SquareIntMatrix& o) const;
    SquareIntMatrix kronecker_power(int n) const;
    SquareIntMatrix pow(unsigned e) const;

    Int determinant() const; // Bareiss, exact

private:
    int n_ = 0;
    std::vector<Int> e_;
};

// Exact monic characteristic polynomial det(X*I - m), computed from integer
// Bareiss determinants at X = 0..n and exact interpolation.
IntPoly char_poly(const SquareIntMatrix& m);

} // namespace biorder

#endif
