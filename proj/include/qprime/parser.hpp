#ifndef QPRIME_PARSER_HPP
#define QPRIME_PARSER_HPP

#include <string>

#include "qprime/qmatrix.hpp"

namespace qprime {

// Parses the textual element format produced by QMElement::str(), e.g.
//   "x11 x22 - q x12 x21"
//   "(q + q^-1) x11^2 + q^-1"
// Grammar: + - * / ^ ( ), integers, q, and variables xIJ / x(i,j);
// juxtaposition multiplies. Division requires a scalar divisor.
QMElement parse_element(int m, int n, const std::string& text);

// Same grammar restricted to scalars.
RatFunc parse_scalar(const std::string& text);

} // namespace qprime

#endif
