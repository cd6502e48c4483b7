/*
    magnus.hpp

    Truncated Magnus expansion: x_i |-> 1 + X_i, x_i^(-1) |-> 1 - X_i + X_i^2
    - ..., cut at a fixed total degree.  The lowest nonvanishing degree of
    the expansion of a word detects its lower-central-series depth.
*/
#ifndef BIORDER_MAGNUS_HPP
#define BIORDER_MAGNUS_HPP

#include "biorder/freegroup.hpp"
#include "biorder/numeric.hpp"

#include <map>
#include <vector>

namespace biorder {

// Noncommutative monomials are generator-index sequences (1-based).
using Monomial = std::vector<int>;

class TruncatedSeries {
public:
    TruncatedSeries(int vars, int maxDegree);
    static TruncatedSeries one(int vars, int maxDegree);
    // 1 + sign*X_g truncated (sign = +1), or the inverse geometric series
    // 1 - X_g + X_g^2 - ... (sign = -1)
    static TruncatedSeries generator(int vars, int maxDegree, int gen, int unitSign);

    int vars() const { return p_; }
    int max_degree() const { return n_; }
    const Int& constant() const { return constant_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // lowest degree 1..maxDegree with a nonzero term; 0 when none
    int lowest_degree() const;
    // dense coefficient vector of the degree-n component, length vars^n,
    // monomial (g1..gn) at index Sum (g_i - 1) * vars^(n-i)
    std::vector<Int> component(int n) const;

private:
    int p_;
    int n_;
    Int constant_;
    std::map<Monomial, Int> terms_; // no zero coefficients stored
};

// Truncated expansion of a word; degree-0 coefficient is 1.
TruncatedSeries magnus_expand(const FreeWord& w, int vars, int maxDegree);

} // namespace biorder

#endif
