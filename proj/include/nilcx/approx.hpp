#pragma once

// Binary64 verification of the deformation fixtures whose real coframes
// involve radicals.  This path never feeds a rank or dimension decision: it
// only measures residuals of fixture data against the exact expected
// equations.

#include <array>
#include <complex>

#include "nilcx/liealg.hpp"

namespace nilcx {
namespace approx {

using CD = std::complex<double>;

struct Fixture {
  std::array<std::array<double, 6>, 6> J{};   // J e^a = sum_b J[a][b] e^b
  std::array<std::array<CD, 6>, 3> omega{};   // (1,0)-coframe over e^1..e^6
  RealStructureEquations real;                // exact underlying algebra
  StructureEquations expected;                // exact complex equations
};

/// Largest of: |J^2 + Id|, |omega J - i omega|, and the coefficient gap
/// between d(omega^k) expressed in the omega coframe and the expected
/// equations.
double residual(const Fixture& fixture);

/// The h5 deformation with D = i d(t, lambda); 0 <= t < 1/2, lambda != 1.
/// Parameters are exact; only the coframe entries are binary64.
Fixture example46(const Rational& lambda, const Rational& t);
/// The h15 family parametrized by s = sin t in [-1, 1].
Fixture example48(const Rational& s);
/// The two h5 deformations around (1, 0, 0).
Fixture example58_lambda(const Rational& lambda);  // lambda^2 in [0, 1/2)
Fixture example58_x(const Rational& x);            // x in (-1/4, infinity)

}  // namespace approx
}  // namespace nilcx
