#include "biorder/freegroup.hpp"

#include <stdexcept>

namespace biorder {

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

FreeWord FreeWord::generator(int gen, long long exp)
{
    if (gen < 1) throw std::invalid_argument("FreeWord::generator: index must be >= 1");
    if (exp == 0) return FreeWord();
    return FreeWord({Letter{gen, exp}});
}

void FreeWord::reduce()
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) {
        if (l.gen < 1) throw std::invalid_argument("FreeWord: generator index must be >= 1");
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    letters_ = std::move(out);
}

int FreeWord::max_generator() const
{
    int m = 0;
    for (const Letter& l : letters_)
        if (l.gen > m) m = l.gen;
    return m;
}

long long FreeWord::length() const
{
    long long n = 0;
    for (const Letter& l : letters_) n += l.exp >= 0 ? l.exp : -l.exp;
    return n;
}

FreeWord FreeWord::inverse() const
{
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(Letter{it->gen, -it->exp});
    FreeWord w;
    w.letters_ = std::move(rev); // reversing a reduced word keeps it reduced
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const
{
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return FreeWord(std::move(cat));
}

FreeEndo::FreeEndo(int rank_, std::vector<FreeWord> images_)
    : rank(rank_), images(std::move(images_))
{
    if (rank < 1) throw std::invalid_argument("FreeEndo: rank must be >= 1");
    if (static_cast<int>(images.size()) != rank)
        throw std::invalid_argument("FreeEndo: need exactly one image per generator");
    for (const FreeWord& w : images)
        if (w.max_generator() > rank)
            throw std::invalid_argument("FreeEndo: image uses a generator beyond the rank");
}

FreeEndo FreeEndo::identity(int rank)
{
    std::vector<FreeWord> im;
    im.reserve(static_cast<size_t>(rank));
    for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(i));
    return FreeEndo(rank, std::move(im));
}

FreeWord apply(const FreeEndo& e, const FreeWord& w)
{
    if (w.max_generator() > e.rank)
        throw std::invalid_argument("apply: generator index out of range");
    FreeWord out;
    for (const Letter& l : w.letters()) {
        const FreeWord& img = e.images[static_cast<size_t>(l.gen - 1)];
        const FreeWord piece = l.exp >= 0 ? img : img.inverse();
        const long long reps = l.exp >= 0 ? l.exp : -l.exp;
        for (long long i = 0; i < reps; ++i) out = out * piece;
    }
    return out;
}

FreeEndo companion_automorphism(const IntPoly& f)
{
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("companion_automorphism: polynomial must be monic");
    if (f.constant_term() != -1)
        throw std::invalid_argument("companion_automorphism: constant term must be -1");
    const int p = f.degree();
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(p));
    for (int i = 1; i < p; ++i) images.push_back(FreeWord::generator(i + 1));
    {
        std::vector<Letter> last;
        last.push_back(Letter{1, 1});
        for (int j = 1; j <= p - 1; ++j) {
            const Int& fj = f.coeff(j);
            if (sign(fj) == 0) continue;
            if (!fj.fits_slong_p())
                throw std::invalid_argument("companion_automorphism: coefficient exceeds word exponent range");
            last.push_back(Letter{j + 1, -fj.get_si()});
        }
        images.emplace_back(std::move(last));
    }
    FreeEndo endo(p, std::move(images));

    // the abelianized map realizes f up to the companion convention
    const SquareIntMatrix m = abelianization_matrix(endo);
    if (biorder::abs(m.determinant()) != 1)
        throw std::logic_error("companion_automorphism: abelianization is not invertible");
    if (char_poly(m) != f)
        throw std::logic_error("companion_automorphism: characteristic polynomial mismatch");
    return endo;
}

SquareIntMatrix abelianization_matrix(const FreeEndo& e)
{
    SquareIntMatrix m(e.rank);
    for (int j = 0; j < e.rank; ++j)
        for (const Letter& l : e.images[static_cast<size_t>(j)].letters())
            m.at(l.gen - 1, j) += Int(static_cast<long>(l.exp));
    return m;
}

} // namespace biorder
