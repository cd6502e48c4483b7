/*
    factorize.hpp

    Complete factorization over Q: rational-root stripping, Berlekamp
    factorization modulo a small prime, Hensel lifting to a Mignotte-style
    bound, and exhaustive subset recombination.  Deterministic output in the
    canonical (degree, coefficient-lex) order.
*/
#ifndef BIORDER_FACTORIZE_HPP
#define BIORDER_FACTORIZE_HPP

#include "biorder/intpoly.hpp"

#include <vector>

namespace biorder {

struct Factorization {
    Rat unit = 1;
    // monic irreducible factors, canonical order, with multiplicities
    std::vector<std::pair<RatPoly, int>> factors;

    // unit * prod factors^mult
    RatPoly expand() const;
};

// Input nonzero.  unit * prod(factor_i^mult_i) reconstructs the input exactly.
Factorization factor_rationals(const IntPoly& a);

// Irreducible primitive integer factors of a primitive squarefree input with
// positive leading coefficient and degree >= 1; used by factor_rationals and
// exposed for tests.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f);

} // namespace biorder

#endif
