#include "nilcx/parse.hpp"

#include <cctype>

namespace nilcx {
namespace parse {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos++];
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

boost::multiprecision::cpp_int parse_integer(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.pos;
  std::string digits;
  while (cur.pos < cur.text.size() &&
         std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    digits += cur.text[cur.pos++];
  if (digits.empty()) throw ParseError("expected an integer", start);
  return boost::multiprecision::cpp_int(digits);
}

Rational parse_unsigned_rational(Cursor& cur) {
  auto num = parse_integer(cur);
  if (cur.accept('/')) {
    auto den = parse_integer(cur);
    if (den == 0) throw ParseError("zero denominator", cur.pos);
    return Rational(num, den);
  }
  return Rational(num);
}

// One signed part of a scalar literal: "3/4", "3/4i", "i", "i/4".
// Adds it to out; returns the updated cursor state.
void parse_scalar_part(Cursor& cur, Scalar& out, bool negative) {
  Rational value;
  bool imaginary = false;
  if (cur.peek() == 'i') {
    cur.get();
    imaginary = true;
    value = 1;
    if (cur.accept('/')) {
      auto den = parse_integer(cur);
      if (den == 0) throw ParseError("zero denominator", cur.pos);
      value = Rational(1, den);
    }
  } else {
    value = parse_unsigned_rational(cur);
    if (cur.peek() == 'i') {
      cur.get();
      imaginary = true;
    }
  }
  if (negative) value = -value;
  if (imaginary)
    out.im += value;
  else
    out.re += value;
}

Scalar parse_scalar_expr(Cursor& cur) {
  Scalar out;
  bool neg = cur.accept('-');
  if (!neg) cur.accept('+');
  parse_scalar_part(cur, out, neg);
  while (cur.peek() == '+' || cur.peek() == '-') {
    bool minus = cur.get() == '-';
    parse_scalar_part(cur, out, minus);
  }
  return out;
}

int parse_generator(Cursor& cur, int n, bool& barred) {
  cur.skip_ws();
  size_t start = cur.pos;
  if (cur.get() != 'w') throw ParseError("expected a generator 'wJ'", start);
  cur.skip_ws();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected a generator index", cur.pos);
  int j = cur.get() - '0';
  if (j < 1 || j > n)
    throw ParseError("generator index out of range 1.." + std::to_string(n),
                     start);
  barred = cur.accept('b');
  return j;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Cursor cur{text};
  bool neg = cur.accept('-');
  Rational r = parse_unsigned_rational(cur);
  if (!cur.eof()) throw ParseError("trailing characters", cur.pos);
  return neg ? Rational(-r) : r;
}

Scalar parse_scalar(const std::string& text) {
  Cursor cur{text};
  Scalar s = parse_scalar_expr(cur);
  if (!cur.eof()) throw ParseError("trailing characters", cur.pos);
  return s;
}

std::string print_scalar(const Scalar& s) { return to_string(s); }

RealStructureEquations parse_salamon(const std::string& text) {
  Cursor cur{text};
  bool parens = cur.accept('(');
  std::vector<Form> d_of;
  while (true) {
    // entry := "0" | term (("+"|"-") term)*, term := two digits "ab"
    Form entry;
    if (cur.peek() == '0') {
      cur.get();
    } else {
      int sign = 1;
      while (true) {
        cur.skip_ws();
        size_t start = cur.pos;
        char ca = cur.get();
        char cb = cur.get();
        if (!std::isdigit(static_cast<unsigned char>(ca)) ||
            !std::isdigit(static_cast<unsigned char>(cb)))
          throw ParseError("expected a two-digit wedge monomial", start);
        int a = ca - '0', b = cb - '0';
        if (a == 0 || b == 0 || a == b)
          throw ParseError("bad monomial indices", start);
        entry += Scalar(sign) * wedge(Form::gen(a), Form::gen(b));
        if (cur.accept('+')) {
          sign = 1;
        } else if (cur.accept('-')) {
          sign = -1;
        } else {
          break;
        }
      }
    }
    d_of.push_back(std::move(entry));
    if (!cur.accept(',')) break;
  }
  if (parens) cur.expect(')');
  if (!cur.eof()) throw ParseError("trailing characters", cur.pos);

  int m = static_cast<int>(d_of.size());
  RealStructureEquations eqs{m, std::move(d_of)};
  for (const auto& f : eqs.d_of)
    for (const auto& [mono, c] : f.terms)
      if (static_cast<int>(32 - std::countl_zero(mono.holo)) > m)
        throw std::domain_error("salamon: generator index exceeds dimension");
  auto rep = check_jacobi(eqs);
  if (!rep.ok)
    throw std::domain_error("salamon: d^2 != 0 (" + rep.violations.front() +
                            ")");
  return eqs;
}

std::string print_salamon(const RealStructureEquations& eqs) {
  std::string out = "(";
  for (int k = 1; k <= eqs.m; ++k) {
    if (k > 1) out += ",";
    const Form& f = eqs.d_of[k - 1];
    if (f.is_zero()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& [mono, c] : f.terms) {
      if (c != Scalar(1) && c != Scalar(-1))
        throw std::domain_error(
            "print_salamon: coefficients must be +1 or -1");
      int a = std::countr_zero(mono.holo) + 1;
      int b = std::countr_zero(mono.holo & (mono.holo - 1)) + 1;
      bool neg = c == Scalar(-1);
      if (neg && first) out += "-";
      if (!first) out += neg ? "-" : "+";
      out += std::to_string(a) + std::to_string(b);
      first = false;
    }
  }
  return out + ")";
}

StructureEquations parse_complex(const std::string& text) {
  // Split on ';' and newlines, one equation per generator.
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == ';' || ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  lines.push_back(current);
  std::erase_if(lines, [](const std::string& l) {
    return l.find_first_not_of(" \t\r") == std::string::npos;
  });
  int n = static_cast<int>(lines.size());
  if (n != 3)
    throw ParseError("expected exactly three equations dw1..dw3, got " +
                         std::to_string(n),
                     0);

  std::vector<Form> d_of(n);
  std::vector<bool> seen(n, false);
  for (const auto& line : lines) {
    Cursor cur{line};
    cur.skip_ws();
    size_t start = cur.pos;
    if (cur.get() != 'd' || cur.get() != 'w')
      throw ParseError("expected 'dwJ = ...'", start);
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
      throw ParseError("expected a generator index", cur.pos);
    int j = cur.get() - '0';
    if (j < 1 || j > n)
      throw ParseError("equation index out of range", start);
    if (seen[j - 1]) throw ParseError("duplicate equation for dw" +
                                          std::to_string(j), start);
    seen[j - 1] = true;
    cur.expect('=');

    Form rhs;
    if (cur.peek() == '0') {
      cur.get();
      if (!cur.eof()) throw ParseError("trailing characters", cur.pos);
      continue;
    }
    bool neg = cur.accept('-');
    while (true) {
      // term := [coeff '*'] gen '^' gen
      Scalar coeff(1);
      cur.skip_ws();
      if (cur.peek() == '(') {
        cur.get();
        coeff = parse_scalar_expr(cur);
        cur.expect(')');
        cur.expect('*');
      } else if (cur.peek() != 'w') {
        // bare scalar like "2*", "1/2*", "i*"
        coeff = parse_scalar_expr(cur);
        cur.expect('*');
      }
      if (neg) coeff = -coeff;
      bool bar1 = false, bar2 = false;
      int g1 = parse_generator(cur, n, bar1);
      cur.expect('^');
      int g2 = parse_generator(cur, n, bar2);
      Form m1 = bar1 ? Form::gen_bar(g1) : Form::gen(g1);
      Form m2 = bar2 ? Form::gen_bar(g2) : Form::gen(g2);
      rhs += coeff * wedge(m1, m2);
      if (cur.accept('+')) {
        neg = false;
      } else if (cur.accept('-')) {
        neg = true;
      } else {
        break;
      }
    }
    if (!cur.eof()) throw ParseError("trailing characters", cur.pos);
    d_of[j - 1] = std::move(rhs);
  }
  for (int j = 1; j <= n; ++j)
    if (!seen[j - 1])
      throw ParseError("missing equation for dw" + std::to_string(j), 0);

  StructureEquations eqs{n, std::move(d_of)};
  auto rep = check_integrability(eqs);
  if (!rep.ok)
    throw std::domain_error("complex equations not integrable (" +
                            rep.violations.front() + ")");
  return eqs;
}

std::string print_complex(const StructureEquations& eqs) {
  std::string out;
  for (int j = 1; j <= eqs.n; ++j) {
    if (j > 1) out += "; ";
    out += "dw" + std::to_string(j) + "=" + to_string(eqs.d_gen(j));
  }
  return out;
}

std::vector<Rational> parse_grid(const std::string& text) {
  size_t c1 = text.find(':');
  size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ParseError("grid must be lo:hi:step", 0);
  Rational lo = parse_rational(text.substr(0, c1));
  Rational hi = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
  Rational step = parse_rational(text.substr(c2 + 1));
  if (step <= 0) throw ParseError("grid step must be positive", c2 + 1);
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

}  // namespace parse
}  // namespace nilcx
