#include "nilcx/approx.hpp"

#include <cmath>

#include "nilcx/classify.hpp"
#include "nilcx/parse.hpp"

namespace nilcx {
namespace approx {

namespace {

using AForm = BasicForm<CD>;

CD to_cd(const Scalar& s) {
  return {static_cast<double>(s.re), static_cast<double>(s.im)};
}

AForm to_approx(const Form& f) {
  AForm out;
  for (const auto& [m, c] : f.terms) out.terms.emplace(m, to_cd(c));
  return out;
}

// Solve the 6x6 complex system A x = b by Gaussian elimination with partial
// pivoting.
std::array<CD, 6> solve6(std::array<std::array<CD, 6>, 6> a,
                         std::array<CD, 6> b) {
  for (int c = 0; c < 6; ++c) {
    int piv = c;
    for (int r = c + 1; r < 6; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 6; ++r) {
      CD f = a[r][c] / a[c][c];
      for (int j = c; j < 6; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::array<CD, 6> x{};
  for (int r = 5; r >= 0; --r) {
    CD acc = b[r];
    for (int j = r + 1; j < 6; ++j) acc -= a[r][j] * x[j];
    x[r] = acc / a[r][r];
  }
  return x;
}

RealStructureEquations real_h5() {
  return parse::parse_salamon("(0,0,0,0,13+42,14+23)");
}
RealStructureEquations real_h15() {
  return parse::parse_salamon("(0,0,0,12,13+42,14+23)");
}

double dbl(const Rational& r) { return static_cast<double>(r); }

}  // namespace

double residual(const Fixture& fixture) {
  const auto& J = fixture.J;
  double worst = 0;

  // J^2 = -Id
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double acc = 0;
      for (int c = 0; c < 6; ++c) acc += J[a][c] * J[c][b];
      worst = std::max(worst, std::abs(acc + (a == b ? 1.0 : 0.0)));
    }

  // omega^k J = i omega^k (J acts on the coframe)
  for (const auto& om : fixture.omega)
    for (int b = 0; b < 6; ++b) {
      CD acc = 0;
      for (int a = 0; a < 6; ++a) acc += om[a] * J[a][b];
      worst = std::max(worst, std::abs(acc - CD(0, 1) * om[b]));
    }

  // Express each e^a in the coframe [omega; conj(omega)].
  std::array<std::array<CD, 6>, 6> big{};
  for (int k = 0; k < 3; ++k)
    for (int b = 0; b < 6; ++b) {
      big[b][k] = fixture.omega[k][b];  // transposed: columns are the coframe
      big[b][3 + k] = std::conj(fixture.omega[k][b]);
    }
  std::vector<AForm> e_images(6);
  for (int a = 0; a < 6; ++a) {
    std::array<CD, 6> rhs{};
    rhs[a] = 1;
    auto sol = solve6(big, rhs);
    AForm img;
    for (int k = 0; k < 3; ++k) {
      img += AForm::monomial(Monomial{1u << k, 0}, sol[k]);
      img += AForm::monomial(Monomial{0, 1u << k}, sol[3 + k]);
    }
    e_images[a] = std::move(img);
  }

  // d omega^k in the omega coframe versus the expected equations.
  for (int k = 0; k < 3; ++k) {
    AForm domega;
    for (int a = 0; a < 6; ++a) {
      if (fixture.omega[k][a] == CD(0)) continue;
      domega += fixture.omega[k][a] * to_approx(fixture.real.d_of[a]);
    }
    AForm in_w = substitute<CD>(domega, e_images, e_images);
    AForm diff = in_w - to_approx(fixture.expected.d_of[k]);
    for (const auto& [m, c] : diff.terms) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

Fixture example46(const Rational& lambda_q, const Rational& t_q) {
  Rational l2_q = lambda_q * lambda_q;
  Rational d_q;
  if (lambda_q == 0)
    d_q = t_q;
  else if (l2_q < Rational(1, 2))
    d_q = t_q * l2_q / 4;
  else if (l2_q < 1)
    d_q = t_q * (1 - l2_q) / 4;
  else
    d_q = -t_q * (1 - l2_q) / 4;

  double lambda = dbl(lambda_q), l2 = dbl(l2_q), d = dbl(d_q);
  double al = std::sqrt((1 - l2) * (1 - l2) - 4 * d * d);

  Fixture fx;
  fx.J[0] = {4 * d * (1 - lambda) / (al * al), -(1 - l2) / al,
             -2 * d * (1 - lambda) * (1 - lambda) / (al * al),
             8 * d * d * (1 - lambda) / (al * al * al), 0, 0};
  fx.J[1] = {(1 - l2) / al, 0, 0, 2 * d * (1 - l2) / (al * al), 0, 0};
  fx.J[2] = {-2 * d / ((1 - lambda) * (1 - lambda)),
             -2 * al / ((1 - l2) * (1 - lambda)), 0,
             -(1 + lambda) * (1 + lambda) / al, 0, 0};
  fx.J[3] = {-2 * (1 - lambda) / al, 2 * d / (1 - l2),
             (1 - lambda) * (1 - lambda) / al,
             -4 * d * (1 - lambda) / (al * al), 0, 0};
  fx.J[4] = {0, 0, 0, 0, 2 * d / (1 - l2),
             -(4 * d * d + (1 - l2) * (1 - l2)) / (al * (1 - l2))};
  fx.J[5] = {0, 0, 0, 0, al / (1 - l2), -2 * d / (1 - l2)};

  fx.omega[0] = {(1 - l2) / al, CD(0, 1), 0, 2 * d * (1 - l2) / (al * al), 0,
                 0};
  fx.omega[1] = {CD(-(1 - lambda) / al, 2 * d / (al * (1 - lambda))),
                 CD(0, 1 / (1 - lambda)), (1 - lambda) / al,
                 CD(-2 * d * (1 - lambda) / (al * al),
                    (1 - l2) * (1 - l2) / ((1 - lambda) * al * al)),
                 0, 0};
  fx.omega[2] = {0, 0, 0, 0, 1, CD(-2 * d / al, (1 - l2) / al)};

  fx.real = real_h5();
  fx.expected = classify::equations_of(classify::TwoStepTriple{
      1, Scalar(lambda_q), Scalar(Rational(0), d_q)});
  return fx;
}

Fixture example48(const Rational& s_q) {
  double s = dbl(s_q);
  double a1 = std::sqrt(3 * (3 - s) * (7 + 3 * s) / ((5 + s) * (11 - s)));
  double a3 = std::sqrt(3 * (3 - s) * (11 - s) / ((5 + s) * (7 + 3 * s)));
  double a5 = std::sqrt((11 - s) * (7 + 3 * s) / (3 * (3 - s) * (5 + s)));

  Fixture fx;
  fx.J[0][1] = -a1;
  fx.J[1][0] = 1 / a1;
  fx.J[2][3] = a3;
  fx.J[3][2] = -1 / a3;
  fx.J[4][5] = -a5;
  fx.J[5][4] = 1 / a5;

  fx.omega[0] = {std::sqrt((11 - s) * (5 + s)) / 4,
                 CD(0, std::sqrt(3 * (3 - s) * (7 + 3 * s)) / 4), 0, 0, 0, 0};
  fx.omega[1] = {
      0, 0, (5 + s) * (7 + 3 * s) / 8,
      CD(0,
         -std::sqrt(3 * (5 + s) * (3 - s) * (11 - s) * (7 + 3 * s)) / 8),
      0, 0};
  double c = (5 + s) * (7 + 3 * s) / 128;
  fx.omega[2] = {0, 0, 0, 0, c * 3 * (3 - s) * std::sqrt((11 - s) * (5 + s)),
                 CD(0, c * (11 - s) * std::sqrt(3 * (3 - s) * (7 + 3 * s)))};

  fx.real = real_h15();
  // Rescale omega^3 so the equations land on the normalized triple:
  // (0, 1, 1/4) at s = 1, (1, 4/(1-s), (1+s)/(2(1-s))) otherwise.
  if (s_q == 1) {
    for (auto& zc : fx.omega[2]) zc *= 0.5;
    fx.expected = classify::equations_of(
        classify::ThreeStepTriple{0, Scalar(1), Scalar(Rational(1, 4))});
  } else {
    double scale = 2 / (1 - s);
    for (auto& zc : fx.omega[2]) zc *= scale;
    fx.expected = classify::equations_of(classify::ThreeStepTriple{
        1, Scalar(Rational(4 / (1 - s_q))),
        Scalar(Rational((1 + s_q) / (2 * (1 - s_q))))});
  }
  return fx;
}

Fixture example58_lambda(const Rational& lambda_q) {
  double lambda = dbl(lambda_q);
  Fixture fx;
  fx.J[0][1] = -1;
  fx.J[1][0] = 1;
  fx.J[2][1] = -2 / (1 - lambda);
  fx.J[2][3] = -(1 + lambda) / (1 - lambda);
  fx.J[3][0] = -2 / (1 + lambda);
  fx.J[3][2] = (1 - lambda) / (1 + lambda);
  fx.J[4][5] = -1;
  fx.J[5][4] = 1;
  for (int k = 0; k < 3; ++k) {
    for (int b = 0; b < 6; ++b) fx.omega[k][b] = CD(0, -fx.J[2 * k][b]);
    fx.omega[k][2 * k] += 1;
  }
  // The raw coframe gives d omega^3 a 1/(1+lambda) factor; rescale omega^3.
  for (auto& z : fx.omega[2]) z *= (1 + lambda);

  fx.real = real_h5();
  fx.expected = classify::equations_of(
      classify::TwoStepTriple{1, Scalar(lambda_q), Scalar(0)});
  return fx;
}

Fixture example58_x(const Rational& x_q) {
  double x = dbl(x_q);
  double r = std::sqrt(1 + 4 * x);
  Fixture fx;
  fx.J[0][1] = (4 * x - 1) / r;
  fx.J[0][3] = 2 * x / r;
  fx.J[1][0] = r;
  fx.J[1][2] = 2 * x / r;
  fx.J[2][1] = -2 * r;
  fx.J[2][3] = -r;
  fx.J[3][0] = -2 * r;
  fx.J[3][2] = (1 - 4 * x) / r;
  fx.J[4][5] = -r;
  fx.J[5][4] = 1 / r;

  // omega^1 = i(e^2 - i J e^2), omega^2 = (e^3 - i J e^3)/r,
  // omega^3 = e^5 - i J e^5.
  for (int b = 0; b < 6; ++b) {
    fx.omega[0][b] = CD(0, 1) * CD((b == 1 ? 1.0 : 0.0), -fx.J[1][b]);
    fx.omega[1][b] = CD((b == 2 ? 1.0 : 0.0), -fx.J[2][b]) / r;
    fx.omega[2][b] = CD((b == 4 ? 1.0 : 0.0), -fx.J[4][b]);
  }

  fx.real = real_h5();
  fx.expected = classify::equations_of(
      classify::TwoStepTriple{1, Scalar(0), Scalar(x_q)});
  return fx;
}

}  // namespace approx
}  // namespace nilcx
