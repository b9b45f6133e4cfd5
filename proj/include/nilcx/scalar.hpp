#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace nilcx {

using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation would need an irrational value (e.g. a square
/// root of a non-square rational) that the exact scalar cannot represent.
struct ExactUnrepresentable : std::runtime_error {
  explicit ExactUnrepresentable(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when inputs fall outside the cases the library supports.
struct UnsupportedCase : std::runtime_error {
  explicit UnsupportedCase(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when an internal cross-check fails; indicates a bug, never bad input.
struct InternalAlarm : std::logic_error {
  explicit InternalAlarm(const std::string& what) : std::logic_error(what) {}
};

/// Exact Gaussian rational a + b*i.  All rank and dimension decisions in the
/// library run over this field; there is no rounding anywhere.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  Scalar(long r) : re(r) {}                 // NOLINT
  Scalar(int r) : re(r) {}                  // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  /// |s|^2 as a rational (always real and >= 0).
  Rational norm_sq() const { return re * re + im * im; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    // Purely real/imaginary factors dominate in practice; skip the zero limbs.
    if (a.im == 0) {
      if (a.re == 0) return Scalar();
      return Scalar(a.re * b.re, a.re * b.im);
    }
    if (b.im == 0) {
      if (b.re == 0) return Scalar();
      return Scalar(a.re * b.re, a.im * b.re);
    }
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    Rational n = b.norm_sq();
    if (n == 0) throw std::domain_error("Scalar: division by zero");
    return Scalar((a.re * b.re + a.im * b.im) / n,
                  (a.im * b.re - a.re * b.im) / n);
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }
};

/// Exact square root of a rational; throws ExactUnrepresentable if the value
/// is not the square of a rational.
Rational rational_sqrt(const Rational& x);

/// True iff x is the square of a rational.
bool is_rational_square(const Rational& x);

std::string to_string(const Rational& r);
std::string to_string(const Scalar& s);

}  // namespace nilcx
