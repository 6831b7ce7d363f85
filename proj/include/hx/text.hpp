#pragma once

#include <string>

#include "hx/moments.hpp"

namespace hx {

// "x+yi" with the given number of significant digits. Pure-real and
// pure-imaginary values drop the vanished part; zero renders as "0".
std::string format_complex(cplx z, int precision = 12);
std::string format_real(double v, int precision = 12);

// Accepts "re", "imi", "re+imi", "re-imi" with a bare "i"/"-i" meaning
// coefficient 1. Throws ParseError on anything else.
cplx parse_complex(const std::string& s);

// Pair literal "(re+imi, re+imi)".
Hypercomplex parse_hypercomplex(const std::string& s);

std::string format_hypercomplex(const Hypercomplex& x, int precision = 12);

// One char per letter: '1' for plain, '*' for star. Must be nonempty.
StarWord parse_star_word(const std::string& s);
std::string to_string(const StarWord& w);

// Canonical JSON encodings:
//   Hypercomplex  {"a":[re,im],"b":[re,im]}
//   Matrix2C      [[[re,im],[re,im]],[[re,im],[re,im]]]
//   SpectralValue {"x":..,"R":..,"value":[re,im],"conjugate":[re,im]}
std::string to_json(const Hypercomplex& x);
std::string to_json(const Matrix2C& M);
std::string to_json(const SpectralValue& sv);
Hypercomplex hypercomplex_from_json(const std::string& s);

// Left-to-right product/sum expressions over pair literals with conventional
// precedence (* binds tighter than +), parentheses for grouping, and inv(...)
// for the ring inverse. A '(' opens a literal when a comma sits at depth one,
// a group otherwise.
Hypercomplex eval_expression(double t, const std::string& expr);

}  // namespace hx
