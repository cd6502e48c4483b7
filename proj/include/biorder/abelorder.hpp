/*
    abelorder.hpp

    Decides whether an integer matrix automorphism of Z^n preserves some
    bi-ordering, and when it does, constructs an explicit invariant order
    oracle: an invariant composition series with irreducible quotients, one
    positive real embedding multiplier per level, and a lexicographic sign
    function along the flag.
*/
#ifndef BIORDER_ABELORDER_HPP
#define BIORDER_ABELORDER_HPP

#include "biorder/intmatrix.hpp"
#include "biorder/ratlinalg.hpp"
#include "biorder/realroots.hpp"

#include <vector>

namespace biorder {

struct FlagLevel {
    RatPoly g;        // monic irreducible annihilator of the quotient action
    RealAlgebraic rho; // chosen positive real root of g (the smallest)
    std::vector<RatVec> basis; // lifted cyclic basis w, Xw, ..., X^(d-1)w
};

struct InvariantFlag {
    std::vector<FlagLevel> levels;
    int dimension() const;
};

struct OrderEvidence {
    RatPoly factor;
    bool hasPositiveRealRoot;
};

// |det m| must be 1; factors the characteristic polynomial and tests each
// irreducible factor for a positive real root.
std::pair<bool, std::vector<OrderEvidence>> preserves_order(const SquareIntMatrix& m);

// Requires preserves_order(m); deterministic for fixed input.
InvariantFlag composition_series(const SquareIntMatrix& m);

class OrderOracle {
public:
    explicit OrderOracle(SquareIntMatrix m); // builds the flag
    OrderOracle(SquareIntMatrix m, InvariantFlag flag);

    const SquareIntMatrix& matrix() const { return m_; }
    const InvariantFlag& flag() const { return flag_; }

    // 0 iff v = 0; otherwise the sign of v under the lexicographic order
    // along the flag.  Invariant: sign(m v) == sign(v).
    int sign(const std::vector<Int>& v) const;

private:
    void finish();
    SquareIntMatrix m_;
    InvariantFlag flag_;
    RatMatrix basisInv_;
};

} // namespace biorder

#endif
