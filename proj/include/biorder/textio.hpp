/*
    textio.hpp

    Shared text syntax: polynomials like x^6+3x^5-x^4-7x^3-x^2+3x+1, Laurent
    terms with negative exponents (x^-3), words like x1*x2^3*x1^-1.
    Whitespace is insignificant.  Parse errors carry the first bad token.
*/
#ifndef BIORDER_TEXTIO_HPP
#define BIORDER_TEXTIO_HPP

#include "biorder/freegroup.hpp"
#include "biorder/intpoly.hpp"

#include <stdexcept>
#include <string>

namespace biorder {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string token)
        : std::runtime_error(what + " (at '" + token + "')"), token_(std::move(token))
    {
    }
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

IntPoly parse_int_poly(const std::string& text);
LaurentPoly parse_laurent(const std::string& text);
FreeWord parse_word(const std::string& text);

std::string to_string(const IntPoly& p, const std::string& var = "x", bool ascending = false);
std::string to_string(const RatPoly& p, const std::string& var = "x", bool ascending = false);
std::string to_string(const LaurentPoly& p, const std::string& var = "x");
std::string to_string(const FreeWord& w);

} // namespace biorder

#endif
