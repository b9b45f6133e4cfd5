#include "nilcx/scalar.hpp"

namespace nilcx {

namespace {

using boost::multiprecision::cpp_int;

bool integer_sqrt(const cpp_int& n, cpp_int& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  cpp_int r;
  return integer_sqrt(numerator(x), r) && integer_sqrt(denominator(x), r);
}

Rational rational_sqrt(const Rational& x) {
  if (x < 0)
    throw ExactUnrepresentable("rational_sqrt: negative argument " +
                               to_string(x));
  cpp_int rn, rd;
  if (!integer_sqrt(numerator(x), rn) || !integer_sqrt(denominator(x), rd))
    throw ExactUnrepresentable("rational_sqrt: " + to_string(x) +
                               " is not a rational square");
  return Rational(rn, rd);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re != 0) out = to_string(s.re);
  if (s.im != 0) {
    if (!out.empty() && s.im > 0) out += "+";
    if (s.im == 1)
      out += "i";
    else if (s.im == -1)
      out += "-i";
    else
      out += to_string(s.im) + "i";
  }
  return out;
}

}  // namespace nilcx
