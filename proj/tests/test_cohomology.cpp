#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcx/cohomology.hpp"
#include "testutil.hpp"

using namespace nilcx;
using namespace nilcx::cohomology;

namespace {

Form w(int j) { return Form::gen(j); }
Form wb(int j) { return Form::gen_bar(j); }
Form ww(int a, int b) { return wedge(Form::gen(a), Form::gen(b)); }
Form wB(int a, int b) { return wedge(Form::gen(a), Form::gen_bar(b)); }

StructureEquations two_step(int rho, const Scalar& lambda, const Scalar& D) {
  return {3, {Form{}, Form{},
              Scalar(rho) * ww(1, 2) + wB(1, 1) + lambda * wB(1, 2) +
                  D * wedge(w(2), wb(2))}};
}

StructureEquations three_step(int rho, const Scalar& B, const Scalar& c) {
  return {3, {Form{}, wB(1, 1),
              Scalar(rho) * ww(1, 2) + B * wB(1, 2) + c * wB(2, 1)}};
}

StructureEquations torus() { return {3, {Form{}, Form{}, Form{}}}; }
StructureEquations h6() { return two_step(1, Scalar(1), Scalar(0)); }

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// The listed forms are closed and represent a complete set of classes:
// span(listed + image) == kernel.
void check_representative_set(const StructureEquations& eqs, int p, int q,
                              const std::vector<Form>& listed) {
  auto ker = linalg::kernel(delbar_matrix(eqs, p, q));
  auto im = q == 0 ? linalg::SubspaceBasis::zero(ker.ambient_dim)
                   : linalg::image(delbar_matrix(eqs, p, q - 1));
  linalg::Mat rows = im.rows;
  for (const auto& f : listed) {
    CHECK(project(differential(eqs, f), p, q + 1).is_zero());
    rows.push_back(coordinates(f, eqs.n, p, q));
  }
  auto span = linalg::row_reduce(rows, ker.ambient_dim);
  CHECK(span == ker);
}

}  // namespace

TEST_CASE("torus dolbeault and de rham") {
  auto eqs = torus();
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(dolbeault(eqs, p, q).dimension == binom(3, p) * binom(3, q));
  for (int k = 0; k <= 6; ++k)
    CHECK(de_rham(eqs, k).dimension == binom(6, k));
}

TEST_CASE("h6 hodge diamond of the canonical structure") {
  auto t = hodge_table(h6());
  int expected[4][4] = {{1, 2, 2, 1},    // h[0][q]
                        {2, 5, 5, 2},    // h[1][q]
                        {2, 5, 5, 2},    // h[2][q]
                        {1, 2, 2, 1}};   // h[3][q]
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(t.h[p][q] == expected[p][q]);
  // symmetric diamond
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(t.h[p][q] == t.h[q][p]);
  // E_1 totals match the Betti numbers (degeneration at the first step)
  CHECK(t.row_total(1) == 4);
  CHECK(t.row_total(2) == 9);
  CHECK(t.row_total(3) == 12);
  CHECK(t.betti[1] == 4);
  CHECK(t.betti[2] == 9);
  CHECK(t.betti[3] == 12);
}

TEST_CASE("h6 listed classes generate the cohomology") {
  auto eqs = h6();
  check_representative_set(eqs, 1, 1,
                           {wB(1, 2), wB(2, 1), wB(2, 2),
                            wB(1, 3) + wB(3, 2), wB(3, 1) + wB(3, 2)});
  check_representative_set(
      eqs, 2, 1,
      {wedge(ww(1, 2), wb(2)), wedge(ww(1, 3), wb(1)),
       wedge(ww(1, 2), wb(3)) + wedge(ww(2, 3), wb(1)),
       wedge(ww(1, 2), wb(3)) - wedge(ww(2, 3), wb(2)),
       wedge(ww(1, 3), wb(2))});
  check_representative_set(eqs, 1, 0, {w(1), w(2)});
  check_representative_set(eqs, 2, 0, {ww(1, 2), ww(1, 3)});
}

TEST_CASE("abelian structures have h01 = n") {
  CHECK(dolbeault(three_step(0, Scalar(1), Scalar(Rational(1, 4))), 0, 1)
            .dimension == 3);
  CHECK(dolbeault(two_step(0, Scalar(1), Scalar(Rational(1, 8))), 0, 1)
            .dimension == 3);
  CHECK(dolbeault(torus(), 0, 1).dimension == 3);
}

TEST_CASE("h15 betti numbers") {
  auto eqs = three_step(1, Scalar(1), Scalar(1));
  CHECK(de_rham(eqs, 1).dimension == 3);
  CHECK(de_rham(eqs, 2).dimension == 5);
  CHECK(de_rham(eqs, 3).dimension == 6);
}

TEST_CASE("representatives are closed and independent modulo image") {
  testutil::Rng rng;
  auto eqs = three_step(1, Scalar(4), Scalar(Rational(1, 2)));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      auto g = dolbeault(eqs, p, q);
      CHECK(static_cast<int>(g.representatives.size()) == g.dimension);
      for (const auto& r : g.representatives)
        CHECK(project(differential(eqs, r), p, q + 1).is_zero());
    }
  for (int k = 0; k <= 6; ++k) {
    auto g = de_rham(eqs, k);
    for (const auto& r : g.representatives)
      CHECK(differential(eqs, r).is_zero());
  }
}

TEST_CASE("serre duality on sample canonical structures") {
  for (const auto& eqs :
       {h6(), two_step(1, Scalar(0), Scalar(0)), three_step(1, Scalar(4), Scalar(Rational(1, 2))),
        three_step(0, Scalar(1), Scalar(Rational(1, 4))), torus()}) {
    auto t = hodge_table(eqs);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) CHECK(t.h[p][q] == t.h[3 - p][3 - q]);
  }
}

TEST_CASE("real de rham matches complexified betti") {
  auto eqs = three_step(1, Scalar(2), Scalar(3));
  auto real = realify(eqs);
  for (int k = 0; k <= 3; ++k)
    CHECK(de_rham(real, k).dimension == de_rham(eqs, k).dimension);
}

TEST_CASE("frolicher inequality holds on the sample corpus") {
  for (const auto& eqs :
       {h6(), three_step(1, Scalar(1), Scalar(1)), torus(),
        two_step(1, Scalar(1), Scalar::i())}) {
    auto t = hodge_table(eqs);  // throws InternalAlarm on violation
    for (int k = 0; k <= 6; ++k) CHECK(t.row_total(k) >= t.betti[k]);
  }
}
