/*
    wordorder.hpp

    A computable bi-order on free-group words invariant under a fixed
    endomorphism whose abelianized characteristic polynomial is special:
    words are compared through the lowest nonvanishing Magnus component,
    ordered by the order oracle of the matching tensor-power matrix.
    Also carries the numeric tensor-eigenvalue product check.
*/
#ifndef BIORDER_WORDORDER_HPP
#define BIORDER_WORDORDER_HPP

#include "biorder/abelorder.hpp"
#include "biorder/freegroup.hpp"
#include "biorder/magnus.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace biorder {

enum class CompareResult { Less, Equal, Greater, DepthExceeded };

std::string to_string(CompareResult r);

class InvariantWordOrder {
public:
    // checks the hypothesis: char poly of the abelianization must be special
    explicit InvariantWordOrder(FreeEndo endo);

    const FreeEndo& endo() const { return endo_; }
    const SquareIntMatrix& matrix() const { return matrix_; }

    // compare u, v through depth maxDepth; the word w = u^(-1) v is located
    // at its Magnus depth n and its degree-n component is ordered by the
    // oracle of matrix^(tensor n)
    CompareResult compare(const FreeWord& u, const FreeWord& v, int maxDepth) const;

    // detected depth of the last non-equal comparison path, exposed for
    // reporting: depth of w = u^(-1) v, or 0 when w is empty/deeper than cap
    struct Comparison {
        CompareResult result;
        int depth; // 0 for Equal or DepthExceeded
    };
    Comparison compare_with_depth(const FreeWord& u, const FreeWord& v, int maxDepth) const;

    // tensor-power oracle for depth n (cached; concurrent readers safe)
    const OrderOracle& oracle(int n) const;

private:
    FreeEndo endo_;
    SquareIntMatrix matrix_;
    mutable std::mutex cacheMutex_;
    mutable std::map<int, std::shared_ptr<const OrderOracle>> cache_;
};

// Numerically checks that the eigenvalues of m^(tensor n) are exactly the
// n-fold products of the eigenvalues of m, within tol; requires
// size^n <= 1024.
bool verify_product_eigenvalues(const SquareIntMatrix& m, int n, double tol);

} // namespace biorder

#endif
