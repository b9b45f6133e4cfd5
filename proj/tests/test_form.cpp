#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcx/form.hpp"
#include "testutil.hpp"

using namespace nilcx;

namespace {
Form w(int j) { return Form::gen(j); }
Form wb(int j) { return Form::gen_bar(j); }
}  // namespace

TEST_CASE("wedge basics") {
  CHECK(wedge(w(1), w(1)).is_zero());
  CHECK(wedge(w(1), wb(1)) == Form::monomial({0b001, 0b001}));
  CHECK(wedge(wb(1), w(1)) == Scalar(-1) * Form::monomial({0b001, 0b001}));
  // w^{12} ^ w^{1b2b} = w^{12 1b 2b}, canonical order, sign +1.
  Form w12 = wedge(w(1), w(2));
  Form w1b2b = wedge(wb(1), wb(2));
  CHECK(wedge(w12, w1b2b) == Form::monomial({0b011, 0b011}));
}

TEST_CASE("graded anticommutativity") {
  testutil::Rng rng;
  for (int it = 0; it < 100; ++it) {
    int pa = static_cast<int>(rng.range(0, 2)), qa = static_cast<int>(rng.range(0, 2));
    int pb = static_cast<int>(rng.range(0, 2)), qb = static_cast<int>(rng.range(0, 2));
    Form a = testutil::random_homogeneous(rng, 3, pa, qa);
    Form b = testutil::random_homogeneous(rng, 3, pb, qb);
    int sign = ((pa + qa) * (pb + qb)) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == Scalar(sign) * wedge(b, a));
  }
}

TEST_CASE("associativity on random homogeneous forms") {
  testutil::Rng rng;
  for (int it = 0; it < 60; ++it) {
    Form a = testutil::random_homogeneous(rng, 3, 1, 0);
    Form b = testutil::random_homogeneous(rng, 3, 0, 1);
    Form c = testutil::random_homogeneous(rng, 3, 1, 1);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("conjugation") {
  // conj(w^1 ^ w^2b) = w^1b ^ w^2 = -w^{2 1b}
  Form f = wedge(w(1), wb(2));
  CHECK(conjugate(f) == Scalar(-1) * wedge(w(2), wb(1)));
  // conj(i w^{1 1b}) = i w^{1 1b}
  Form g = Scalar::i() * wedge(w(1), wb(1));
  CHECK(conjugate(g) == g);

  testutil::Rng rng;
  for (int it = 0; it < 100; ++it) {
    Form a = testutil::random_form(rng, 3);
    CHECK(conjugate(conjugate(a)) == a);
    Form b = testutil::random_form(rng, 3);
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
  }
}

TEST_CASE("conjugation is multiplicative") {
  testutil::Rng rng;
  for (int it = 0; it < 80; ++it) {
    Form a = testutil::random_homogeneous(rng, 3, static_cast<int>(rng.range(0, 1)),
                                          static_cast<int>(rng.range(0, 1)));
    Form b = testutil::random_homogeneous(rng, 3, static_cast<int>(rng.range(0, 1)),
                                          static_cast<int>(rng.range(0, 1)));
    CHECK(conjugate(wedge(a, b)) == wedge(conjugate(a), conjugate(b)));
  }
}

TEST_CASE("projection") {
  Form f = wedge(w(1), w(2)) + wedge(w(1), wb(1));
  CHECK(project(f, 2, 0) == wedge(w(1), w(2)));
  CHECK(project(f, 0, 2).is_zero());

  testutil::Rng rng;
  for (int it = 0; it < 50; ++it) {
    Form a = testutil::random_form(rng, 3);
    Form total;
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) total += project(a, p, q);
    CHECK(total == a);
  }
}

TEST_CASE("bidegree dimensions") {
  CHECK(bidegree_basis(3, 1, 1).size() == 9);
  CHECK(bidegree_basis(3, 2, 0).size() == 3);
  int total = 0;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) total += static_cast<int>(bidegree_basis(3, p, q).size());
  CHECK(total == 64);
  // generic n
  CHECK(bidegree_basis(4, 2, 1).size() == 24);
}

TEST_CASE("coordinates round-trip and lex position") {
  // w^1 ^ w^2b sits at position 1 of the lex basis of (1,1): (1;1b),(1;2b),...
  Form f = wedge(w(1), wb(2));
  auto v = coordinates(f, 3, 1, 1);
  REQUIRE(v.size() == 9);
  for (size_t i = 0; i < v.size(); ++i)
    CHECK(v[i] == (i == 1 ? Scalar(1) : Scalar(0)));

  auto zeros = coordinates(Form{}, 3, 1, 1);
  CHECK(zeros.size() == 9);

  testutil::Rng rng;
  for (int it = 0; it < 50; ++it) {
    Form a = testutil::random_homogeneous(rng, 3, 2, 1);
    CHECK(from_coordinates(coordinates(a, 3, 2, 1), 3, 2, 1) == a);
  }
  CHECK_THROWS_AS((void)coordinates(f + w(1), 3, 1, 1), std::domain_error);
}

TEST_CASE("degree basis puts higher p first") {
  auto basis = degree_basis(3, 2);
  CHECK(basis.size() == 6 + 9);  // (2,0) then (1,1) then (0,2): 3+9+3
  CHECK(basis.size() == 15);
  CHECK(basis[0].p() == 2);
  CHECK(basis[3].p() == 1);
  CHECK(basis[14].p() == 0);

  testutil::Rng rng;
  for (int it = 0; it < 30; ++it) {
    Form a = testutil::random_homogeneous(rng, 3, 1, 1) +
             testutil::random_homogeneous(rng, 3, 2, 0);
    CHECK(from_degree_coordinates(degree_coordinates(a, 3, 2), 3, 2) == a);
  }
}

TEST_CASE("substitute acts as pullback") {
  // w^1 -> w^2, w^2 -> w^1 flips the sign of w^{12}.
  std::vector<Form> holo = {w(2), w(1), w(3)};
  std::vector<Form> anti = {wb(1), wb(2), wb(3)};
  Form f = wedge(w(1), w(2));
  CHECK(substitute<Scalar>(f, holo, anti) == Scalar(-1) * f);
}

TEST_CASE("printing round-trips visually") {
  Form f = wedge(w(1), w(2)) - Scalar::i() * wedge(w(2), wb(3));
  CHECK(to_string(f) == "w1^w2 - i*w2^w3b");
  CHECK(to_string(Form{}) == "0");
}
