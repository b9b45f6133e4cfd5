#include "nilcx/form.hpp"

#include <algorithm>

namespace nilcx {

namespace {

// All size-k subsets of {0..n-1} in lexicographic order of the ascending
// index list, as bitmasks.
void subsets_lex(int n, int k, std::vector<uint32_t>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (k == 0) out.assign(1, 0u);
}

}  // namespace

std::vector<Monomial> bidegree_basis(int n, int p, int q) {
  std::vector<Monomial> basis;
  if (p < 0 || q < 0 || p > n || q > n) return basis;
  std::vector<uint32_t> hs, as;
  subsets_lex(n, p, hs);
  subsets_lex(n, q, as);
  basis.reserve(hs.size() * as.size());
  for (uint32_t h : hs)
    for (uint32_t a : as) basis.push_back(Monomial{h, a});
  return basis;
}

std::vector<Monomial> degree_basis(int n, int k) {
  std::vector<Monomial> basis;
  for (int p = std::min(k, n); p >= 0 && k - p <= n; --p) {
    auto block = bidegree_basis(n, p, k - p);
    basis.insert(basis.end(), block.begin(), block.end());
  }
  return basis;
}

std::vector<Scalar> coordinates(const Form& f, int n, int p, int q) {
  if (!f.is_homogeneous(p, q))
    throw std::domain_error("coordinates: form is not (p,q)-homogeneous");
  auto basis = bidegree_basis(n, p, q);
  std::vector<Scalar> v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    auto it = f.terms.find(basis[i]);
    if (it != f.terms.end()) v[i] = it->second;
  }
  return v;
}

Form from_coordinates(std::span<const Scalar> coords, int n, int p, int q) {
  auto basis = bidegree_basis(n, p, q);
  if (coords.size() != basis.size())
    throw std::domain_error("from_coordinates: wrong vector length");
  Form f;
  for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

std::vector<Scalar> degree_coordinates(const Form& f, int n, int k) {
  if (!f.is_pure_degree(k))
    throw std::domain_error("degree_coordinates: form is not of pure degree");
  auto basis = degree_basis(n, k);
  std::vector<Scalar> v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    auto it = f.terms.find(basis[i]);
    if (it != f.terms.end()) v[i] = it->second;
  }
  return v;
}

Form from_degree_coordinates(std::span<const Scalar> coords, int n, int k) {
  auto basis = degree_basis(n, k);
  if (coords.size() != basis.size())
    throw std::domain_error("from_degree_coordinates: wrong vector length");
  Form f;
  for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  bool first = true;
  for (uint32_t bits = m.holo; bits != 0; bits &= bits - 1) {
    if (!first) s += "^";
    s += "w" + std::to_string(std::countr_zero(bits) + 1);
    first = false;
  }
  for (uint32_t bits = m.anti; bits != 0; bits &= bits - 1) {
    if (!first) s += "^";
    s += "w" + std::to_string(std::countr_zero(bits) + 1) + "b";
    first = false;
  }
  return s;
}

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms) {
    std::string cs = to_string(c);
    // Only a one-part coefficient may donate its sign to the joiner; a
    // two-part one like -1/2+i must stay inside parentheses.
    bool multi = cs.find_first_of("+-", 1) != std::string::npos;
    if (!s.empty()) {
      if (!multi && cs.size() && cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    if (m.degree() == 0) {
      s += multi ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      s += to_string(m);
    } else if (cs == "-1") {
      s += "-" + to_string(m);
    } else {
      s += (multi ? "(" + cs + ")" : cs) + "*" + to_string(m);
    }
  }
  return s;
}

}  // namespace nilcx
