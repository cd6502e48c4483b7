/*
    ratlinalg.hpp

    Exact rational linear algebra used by the invariant-flag construction:
    reduced row echelon form, kernels, solving, inversion.  Matrices are
    plain row-major vectors of rationals.
*/
#ifndef BIORDER_RATLINALG_HPP
#define BIORDER_RATLINALG_HPP

#include "biorder/numeric.hpp"

#include <vector>

namespace biorder {

using RatVec = std::vector<Rat>;

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> e; // row-major

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * static_cast<size_t>(c), Rat(0)) {}

    const Rat& at(int r, int c) const { return e[static_cast<size_t>(r * cols + c)]; }
    Rat& at(int r, int c) { return e[static_cast<size_t>(r * cols + c)]; }

    static RatMatrix identity(int n);
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    RatVec apply(const RatVec& v) const;
    RatMatrix transposed() const;
};

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

// Null-space basis in canonical reduced-echelon form: one vector per free
// column, ascending by free-column index, entry 1 at the free column.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Solve A x = b; empty optional-like: returns false when inconsistent.
bool solve(const RatMatrix& a, const RatVec& b, RatVec& x);

// Inverse of a square nonsingular matrix; throws when singular.
RatMatrix inverse(const RatMatrix& m);

// Rescale a rational vector to a primitive integer direction (first nonzero
// entry positive).
RatVec primitive_direction(const RatVec& v);

} // namespace biorder

#endif
