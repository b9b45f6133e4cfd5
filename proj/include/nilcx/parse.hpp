#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilcx/liealg.hpp"

namespace nilcx {
namespace parse {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Gaussian rational literal: "2", "-1/3", "i", "-i", "i/4", "3i", "1/2+3/4i",
/// "1-i".  Whitespace is ignored.
Scalar parse_scalar(const std::string& text);
std::string print_scalar(const Scalar& s);

/// Salamon tuple like "(0,0,0,12,13+42,14-35)": entry k lists d e^k as a
/// signed sum of two-digit wedge monomials.  Validates d^2 = 0 and throws
/// std::domain_error naming the offending generator if it fails.
RealStructureEquations parse_salamon(const std::string& text);
std::string print_salamon(const RealStructureEquations& eqs);

/// Complex equation DSL: lines "dwJ = <sum>" separated by ';' or newlines,
/// terms "<coeff>*wA^wB" with generators w1..wn, w1b..wnb, e.g.
/// "dw1=0; dw2=0; dw3=w1^w2 + (1/2)*w2^w1b".  Validates integrability.
StructureEquations parse_complex(const std::string& text);
std::string print_complex(const StructureEquations& eqs);

/// Exact rational grid "lo:hi:step" (step > 0), inclusive of hi when met
/// exactly.
std::vector<Rational> parse_grid(const std::string& text);

Rational parse_rational(const std::string& text);

}  // namespace parse
}  // namespace nilcx
