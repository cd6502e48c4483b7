/*
    freegroup.hpp

    Freely reduced words, endomorphisms of finitely generated free groups
    given by generator images, the companion automorphism of a monic
    polynomial with constant term -1, and abelianization matrices.
*/
#ifndef BIORDER_FREEGROUP_HPP
#define BIORDER_FREEGROUP_HPP

#include "biorder/intmatrix.hpp"

#include <vector>

namespace biorder {

struct Letter {
    int gen;       // 1-based generator index
    long long exp; // nonzero
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters); // reduces

    static FreeWord generator(int gen, long long exp = 1);

    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    int max_generator() const;
    // total letter count, Sum |exp|
    long long length() const;

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const; // concatenate + reduce
    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }

private:
    void reduce();
    std::vector<Letter> letters_;
};

struct FreeEndo {
    int rank = 0;
    std::vector<FreeWord> images; // image of x_i at index i-1

    FreeEndo() = default;
    FreeEndo(int rank, std::vector<FreeWord> images);
    static FreeEndo identity(int rank);
};

// substitution followed by free reduction; generator indices of w must be
// within 1..e.rank
FreeWord apply(const FreeEndo& e, const FreeWord& w);

// theta x_1 = x_2, ..., theta x_(p-1) = x_p,
// theta x_p = x_1 x_2^(-f_1) ... x_p^(-f_(p-1));
// f must be monic of degree p >= 1 with constant term -1.
FreeEndo companion_automorphism(const IntPoly& f);

// column j = exponent-sum vector of the image of x_(j+1)
SquareIntMatrix abelianization_matrix(const FreeEndo& e);

} // namespace biorder

#endif
