#pragma once

#include <bit>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilcx/scalar.hpp"

namespace nilcx {

/// A wedge monomial on the 2n generators w^1..w^n, w^1b..w^nb, stored as two
/// index bitmasks (bit j-1 set <=> generator j present).  The canonical
/// generator order is unbarred ascending, then barred ascending; every sign
/// in the library is relative to this order.
struct Monomial {
  uint32_t holo = 0;
  uint32_t anti = 0;

  int p() const { return std::popcount(holo); }
  int q() const { return std::popcount(anti); }
  int degree() const { return p() + q(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = lex_mask(a.holo, b.holo); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = lex_mask(a.anti, b.anti); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Ascending index lists compared lexicographically (so w^{12} < w^{13} <
  /// w^{23}); this is NOT numeric mask order.
  static int lex_mask(uint32_t a, uint32_t b) {
    while (a != 0 || b != 0) {
      if (a == 0) return -1;  // prefix of b
      if (b == 0) return 1;
      int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) return ia < ib ? -1 : 1;
      a &= a - 1;
      b &= b - 1;
    }
    return 0;
  }
};

/// Number of transpositions mod 2 needed to merge two ascending disjoint
/// masks into one ascending mask: one swap for each pair (x in a, y in b)
/// with x > y.
inline int merge_parity(uint32_t a, uint32_t b) {
  int parity = 0;
  while (b != 0) {
    int y = std::countr_zero(b);
    parity ^= std::popcount(a >> (y + 1)) & 1;
    b &= b - 1;
  }
  return parity;
}

/// Wedge of two monomials: zero (returns false) on a repeated generator,
/// otherwise fills out and the sign of sorting the concatenation into
/// canonical order.
inline bool wedge_monomials(const Monomial& a, const Monomial& b,
                            Monomial& out, int& sign) {
  if ((a.holo & b.holo) != 0 || (a.anti & b.anti) != 0) return false;
  int parity = (a.q() * b.p()) & 1;  // b's unbarred block crosses a's barred
  parity ^= merge_parity(a.holo, b.holo);
  parity ^= merge_parity(a.anti, b.anti);
  out = Monomial{a.holo | b.holo, a.anti | b.anti};
  sign = parity ? -1 : 1;
  return true;
}

namespace detail {
inline bool scalar_is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar scalar_conj(const Scalar& s) { return s.conj(); }
// binary64 instantiation used only by the approximate fixture checks
inline bool scalar_is_zero(const std::complex<double>& s) {
  return s.real() == 0.0 && s.imag() == 0.0;
}
inline std::complex<double> scalar_conj(const std::complex<double>& s) {
  return std::conj(s);
}
}  // namespace detail

/// Sparse linear combination of monomials.  Zero coefficients are never
/// stored, so operator== is structural equality of the term maps.
template <class S>
struct BasicForm {
  std::map<Monomial, S> terms;

  BasicForm() = default;

  static BasicForm zero() { return {}; }
  static BasicForm monomial(Monomial m, S c = S(1)) {
    BasicForm f;
    if (!detail::scalar_is_zero(c)) f.terms.emplace(m, std::move(c));
    return f;
  }
  /// w^j (1-based index).
  static BasicForm gen(int j) { return monomial({1u << (j - 1), 0}); }
  /// w^jb (1-based index).
  static BasicForm gen_bar(int j) { return monomial({0, 1u << (j - 1)}); }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Monomial& m, const S& c) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(const BasicForm& a) { return S(-1) * a; }
  friend BasicForm operator*(const S& c, const BasicForm& f) {
    BasicForm r;
    if (detail::scalar_is_zero(c)) return r;
    for (const auto& [m, x] : f.terms) r.add_term(m, c * x);
    return r;
  }
  friend bool operator==(const BasicForm&, const BasicForm&) = default;

  /// True iff every stored monomial has bidegree exactly (p, q).
  bool is_homogeneous(int p, int q) const {
    for (const auto& [m, c] : terms)
      if (m.p() != p || m.q() != q) return false;
    return true;
  }
  /// True iff all monomials share one total degree (zero counts as any).
  bool is_pure_degree(int k) const {
    for (const auto& [m, c] : terms)
      if (m.degree() != k) return false;
    return true;
  }
};

template <class S>
BasicForm<S> wedge(const BasicForm<S>& a, const BasicForm<S>& b) {
  BasicForm<S> r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m;
      int sign;
      if (!wedge_monomials(ma, mb, m, sign)) continue;
      r.add_term(m, sign < 0 ? -(ca * cb) : ca * cb);
    }
  return r;
}

/// Complex conjugation: conjugates coefficients and swaps barred/unbarred
/// generators; the (-1)^{pq} sign moves the new unbarred block to the front.
template <class S>
BasicForm<S> conjugate(const BasicForm<S>& f) {
  BasicForm<S> r;
  for (const auto& [m, c] : f.terms) {
    int parity = (m.p() * m.q()) & 1;
    S cc = detail::scalar_conj(c);
    r.add_term(Monomial{m.anti, m.holo}, parity ? -cc : cc);
  }
  return r;
}

template <class S>
BasicForm<S> project(const BasicForm<S>& f, int p, int q) {
  BasicForm<S> r;
  for (const auto& [m, c] : f.terms)
    if (m.p() == p && m.q() == q) r.terms.emplace(m, c);
  return r;
}

/// Pullback of f under the algebra morphism sending w^j to holo_images[j-1]
/// and w^jb to anti_images[j-1] (each a 1-form or any form of odd degree).
template <class S>
BasicForm<S> substitute(const BasicForm<S>& f,
                        std::span<const BasicForm<S>> holo_images,
                        std::span<const BasicForm<S>> anti_images) {
  BasicForm<S> r;
  for (const auto& [m, c] : f.terms) {
    BasicForm<S> prod = BasicForm<S>::monomial(Monomial{}, S(1));
    for (uint32_t bits = m.holo; bits != 0; bits &= bits - 1)
      prod = wedge(prod, holo_images[std::countr_zero(bits)]);
    for (uint32_t bits = m.anti; bits != 0; bits &= bits - 1)
      prod = wedge(prod, anti_images[std::countr_zero(bits)]);
    r += c * prod;
  }
  return r;
}

using Form = BasicForm<Scalar>;

/// The fixed lexicographic basis of the (p, q) monomials on n generators,
/// ordered by the unbarred index list first, then the barred one.
std::vector<Monomial> bidegree_basis(int n, int p, int q);

/// Basis of all monomials of total degree k, grouped by holomorphic degree p
/// DESCENDING, lexicographic inside each block.  With this order the
/// filtration subspace F^p is spanned by a prefix of the coordinates.
std::vector<Monomial> degree_basis(int n, int k);

/// Coefficient vector of a (p,q)-homogeneous form in the bidegree_basis
/// order.  Throws std::domain_error on non-homogeneous input.
std::vector<Scalar> coordinates(const Form& f, int n, int p, int q);

/// Inverse of coordinates().
Form from_coordinates(std::span<const Scalar> coords, int n, int p, int q);

/// Coefficient vector in the degree_basis order (any form of pure degree k).
std::vector<Scalar> degree_coordinates(const Form& f, int n, int k);
Form from_degree_coordinates(std::span<const Scalar> coords, int n, int k);

std::string to_string(const Monomial& m);
std::string to_string(const Form& f);

}  // namespace nilcx
