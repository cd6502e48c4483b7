#include "biorder/textio.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace biorder {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return s[i];
    }
    std::string rest_token()
    {
        skip_ws();
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && j - i < 16) ++j;
        return s.substr(i, j - i);
    }
};

Int parse_digits(Cursor& c)
{
    c.skip_ws();
    size_t j = c.i;
    while (j < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[j]))) ++j;
    if (j == c.i) throw ParseError("expected digits", c.rest_token());
    Int v(c.s.substr(c.i, j - c.i));
    c.i = j;
    return v;
}

long parse_exponent(Cursor& c)
{
    c.skip_ws();
    bool neg = false;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
        neg = c.peek() == '-';
        ++c.i;
    }
    Int v = parse_digits(c);
    if (!v.fits_slong_p()) throw ParseError("exponent out of range", to_string(v));
    return neg ? -v.get_si() : v.get_si();
}

// generic term-list parser; fills exponent -> coefficient
std::map<long, Int> parse_terms(const std::string& text, bool allowNegativeExp, char& varOut)
{
    Cursor c{text};
    std::map<long, Int> terms;
    char var = 0;
    bool first = true;
    if (c.done()) throw ParseError("empty polynomial", "");
    while (!c.done()) {
        int sgn = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            sgn = c.peek() == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.rest_token());
        }
        first = false;
        c.skip_ws();
        if (c.done()) throw ParseError("dangling sign", "");

        Int coeff = 1;
        bool sawCoeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_digits(c);
            sawCoeff = true;
        }
        long exp = 0;
        c.skip_ws();
        if (!c.done() && (c.peek() == '*')) {
            ++c.i;
            c.skip_ws();
            if (c.done() || !std::isalpha(static_cast<unsigned char>(c.peek())))
                throw ParseError("expected a variable after '*'", c.rest_token());
        }
        if (!c.done() && std::isalpha(static_cast<unsigned char>(c.peek()))) {
            const char v = c.peek();
            if (!std::islower(static_cast<unsigned char>(v)))
                throw ParseError("variables must be lowercase letters", c.rest_token());
            if (var == 0) var = v;
            if (v != var) throw ParseError("mixed variables in one polynomial", std::string(1, v));
            ++c.i;
            exp = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                exp = parse_exponent(c);
            }
        } else if (!sawCoeff) {
            throw ParseError("expected a coefficient or a variable", c.rest_token());
        }
        if (exp < 0 && !allowNegativeExp)
            throw ParseError("negative exponent not allowed here", "x^" + std::to_string(exp));
        terms[exp] += Int(sgn) * coeff;
    }
    varOut = var == 0 ? 'x' : var;
    return terms;
}

} // namespace

IntPoly parse_int_poly(const std::string& text)
{
    char var = 0;
    const std::map<long, Int> terms = parse_terms(text, false, var);
    long maxExp = 0;
    for (const auto& [e, c] : terms)
        if (sign(c) != 0 && e > maxExp) maxExp = e;
    std::vector<Int> coeffs(static_cast<size_t>(maxExp) + 1, Int(0));
    for (const auto& [e, c] : terms)
        if (sign(c) != 0) coeffs[static_cast<size_t>(e)] += c;
    return IntPoly(std::move(coeffs));
}

LaurentPoly parse_laurent(const std::string& text)
{
    char var = 0;
    const std::map<long, Int> terms = parse_terms(text, true, var);
    long lo = 0, hi = 0;
    bool any = false;
    for (const auto& [e, c] : terms) {
        if (sign(c) == 0) continue;
        if (!any) {
            lo = hi = e;
            any = true;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    if (!any) return LaurentPoly();
    std::vector<Int> coeffs(static_cast<size_t>(hi - lo) + 1, Int(0));
    for (const auto& [e, c] : terms)
        if (sign(c) != 0) coeffs[static_cast<size_t>(e - lo)] += c;
    return LaurentPoly(static_cast<int>(lo), std::move(coeffs));
}

FreeWord parse_word(const std::string& text)
{
    Cursor c{text};
    if (c.done()) throw ParseError("empty word", "");
    c.skip_ws();
    if (c.peek() == '1') {
        ++c.i;
        if (!c.done()) throw ParseError("unexpected input after identity word", c.rest_token());
        return FreeWord();
    }
    std::vector<Letter> letters;
    bool expectLetter = true;
    while (!c.done()) {
        if (!expectLetter) {
            if (c.peek() != '*') throw ParseError("expected '*' between letters", c.rest_token());
            ++c.i;
        }
        c.skip_ws();
        if (c.done() || c.peek() != 'x')
            throw ParseError("expected a generator like x1", c.rest_token());
        ++c.i;
        Int idx = parse_digits(c);
        if (!idx.fits_sint_p() || idx.get_si() < 1)
            throw ParseError("generator index out of range", to_string(idx));
        long long exp = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
            ++c.i;
            exp = parse_exponent(c);
        }
        if (exp != 0) letters.push_back(Letter{static_cast<int>(idx.get_si()), exp});
        expectLetter = false;
    }
    return FreeWord(std::move(letters));
}

namespace {

void append_term(std::ostringstream& os, bool& first, const std::string& coeffAbs, int sgn,
                 const std::string& var, long exp)
{
    if (first) {
        if (sgn < 0) os << '-';
        first = false;
    } else {
        os << (sgn < 0 ? '-' : '+');
    }
    const bool unitCoeff = coeffAbs == "1";
    if (exp == 0) {
        os << coeffAbs;
        return;
    }
    if (!unitCoeff) os << coeffAbs;
    os << var;
    if (exp != 1) os << '^' << exp;
}

std::string rat_abs_str(const Rat& q)
{
    Rat a = q < 0 ? Rat(-q) : q;
    return to_string(a);
}

} // namespace

std::string to_string(const IntPoly& p, const std::string& var, bool ascending)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int i) {
        const Int& c = p.coeff(i);
        if (sign(c) == 0) return;
        append_term(os, first, biorder::abs(c).get_str(), sign(c), var, i);
    };
    if (ascending)
        for (int i = 0; i <= p.degree(); ++i) emit(i);
    else
        for (int i = p.degree(); i >= 0; --i) emit(i);
    return os.str();
}

std::string to_string(const RatPoly& p, const std::string& var, bool ascending)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int i) {
        const Rat& c = p.coeff(i);
        if (sign(c) == 0) return;
        std::string mag = rat_abs_str(c);
        if (i != 0 && mag != "1" && c.get_den() != 1) mag += "*";
        append_term(os, first, mag, sign(c), var, i);
    };
    if (ascending)
        for (int i = 0; i <= p.degree(); ++i) emit(i);
    else
        for (int i = p.degree(); i >= 0; --i) emit(i);
    return os.str();
}

std::string to_string(const LaurentPoly& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.max_exp(); e >= p.min_exp(); --e) {
        const Int& c = p.coeff(e);
        if (sign(c) == 0) continue;
        append_term(os, first, biorder::abs(c).get_str(), sign(c), var, e);
    }
    return os.str();
}

std::string to_string(const FreeWord& w)
{
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << '*';
        first = false;
        os << 'x' << l.gen;
        if (l.exp != 1) os << '^' << l.exp;
    }
    return os.str();
}

} // namespace biorder
