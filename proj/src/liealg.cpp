#include "nilcx/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace nilcx {

namespace {

using linalg::LinearMap;
using linalg::Mat;
using linalg::SubspaceBasis;
using linalg::Vec;

// d(g_1 ^ ... ^ g_k) = sum_i (-1)^i d(g_i) ^ (rest); d(g_i) has even degree
// so it can be moved to the front for free.
template <class GenDiff>
Form derive_monomial(const Monomial& m, const Scalar& coeff, GenDiff&& dgen) {
  Form out;
  int pos = 0;
  for (uint32_t bits = m.holo; bits != 0; bits &= bits - 1, ++pos) {
    int j = std::countr_zero(bits) + 1;
    Monomial rest{m.holo & ~(1u << (j - 1)), m.anti};
    Scalar c = (pos & 1) ? -coeff : coeff;
    out += c * wedge(dgen(j, false), Form::monomial(rest));
  }
  for (uint32_t bits = m.anti; bits != 0; bits &= bits - 1, ++pos) {
    int j = std::countr_zero(bits) + 1;
    Monomial rest{m.holo, m.anti & ~(1u << (j - 1))};
    Scalar c = (pos & 1) ? -coeff : coeff;
    out += c * wedge(dgen(j, true), Form::monomial(rest));
  }
  return out;
}

Scalar require_real(const Scalar& s, const char* where) {
  if (s.im != 0)
    throw InternalAlarm(std::string(where) + ": expected a real coefficient");
  return s;
}

// Bracket [e_a, e_b] of the dual basis, recovered from d via
// d e^k (X, Y) = -e^k([X, Y]).
Mat bracket_table(const RealStructureEquations& eqs) {
  int m = eqs.m;
  Mat table(m * m, Vec(m));
  for (int k = 1; k <= m; ++k)
    for (const auto& [mono, c] : eqs.d_of[k - 1].terms) {
      if (mono.anti != 0 || mono.degree() != 2)
        throw std::domain_error("real equations must be unbarred 2-forms");
      int a = std::countr_zero(mono.holo) + 1;
      int b = std::countr_zero(mono.holo & (mono.holo - 1)) + 1;
      // d e^k = ... + c e^{ab}  =>  [e_a, e_b] gains -c e_k.
      table[(a - 1) * m + (b - 1)][k - 1] -= c;
      table[(b - 1) * m + (a - 1)][k - 1] += c;
    }
  return table;
}

Vec bracket_with(const Mat& table, int m, int a, const Vec& v) {
  Vec out(m);
  for (int b = 1; b <= m; ++b) {
    if (v[b - 1].is_zero()) continue;
    const Vec& ab = table[(a - 1) * m + (b - 1)];
    for (int k = 0; k < m; ++k) out[k] += v[b - 1] * ab[k];
  }
  return out;
}

// b_k of the real algebra: dim ker(d on degree k) - rank(d on degree k-1).
LinearMap real_d_matrix(const RealStructureEquations& eqs, int k) {
  auto dom = bidegree_basis(eqs.m, k, 0);
  auto cod = bidegree_basis(eqs.m, k + 1, 0);
  LinearMap d = LinearMap::zero(static_cast<int>(dom.size()),
                                static_cast<int>(cod.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    Form df = real_differential(eqs, Form::monomial(dom[j]));
    Vec col = coordinates(df, eqs.m, k + 1, 0);
    for (size_t i = 0; i < cod.size(); ++i) d.matrix[i][j] = col[i];
  }
  return d;
}

struct AlphaData {
  SubspaceBasis exact2;   // d(g*) inside Lambda^2 coordinates
  SubspaceBasis wedge4;   // span of pairwise wedges inside Lambda^4
  Mat gram;               // gram[i][j]: v_i ^ v_j = gram[i][j] * normalizer
  bool gram_valid = false;
};

AlphaData alpha_data(const RealStructureEquations& eqs) {
  AlphaData out;
  int m = eqs.m;
  Mat rows;
  for (const auto& f : eqs.d_of) rows.push_back(coordinates(f, m, 2, 0));
  out.exact2 = linalg::row_reduce(rows, static_cast<int>(rows[0].size()));

  int k = out.exact2.rank();
  std::vector<Form> basis_forms;
  for (const auto& r : out.exact2.rows)
    basis_forms.push_back(from_coordinates(r, m, 2, 0));

  int dim4 = static_cast<int>(bidegree_basis(m, 4, 0).size());
  Mat wedges;
  std::vector<std::pair<int, int>> index_of;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      wedges.push_back(coordinates(wedge(basis_forms[i], basis_forms[j]), m, 4, 0));
      index_of.emplace_back(i, j);
    }
  out.wedge4 = k == 0 ? SubspaceBasis::zero(dim4)
                      : linalg::row_reduce(wedges, dim4);

  if (out.wedge4.rank() == 1) {
    // Normalizer: the echelon basis vector of the image line (pivot 1).
    const Vec& w0 = out.wedge4.rows[0];
    int pivot = 0;
    while (w0[pivot].is_zero()) ++pivot;
    out.gram.assign(k, Vec(k));
    for (size_t t = 0; t < wedges.size(); ++t) {
      auto [i, j] = index_of[t];
      Scalar c = require_real(wedges[t][pivot], "alpha_invariant");
      out.gram[i][j] = c;
      out.gram[j][i] = c;
    }
    out.gram_valid = true;
  }
  return out;
}

int alpha_from_gram(const SubspaceBasis& exact2, const Mat& gram) {
  int k = exact2.rank();
  LinearMap q{k, k, gram};
  SubspaceBasis radical = linalg::kernel(q);
  int rad = radical.rank();
  int rank = k - rad;
  if (rank == 0) return k;
  if (rank == 1) return rad;
  if (rank > 2)
    throw UnsupportedCase("alpha_invariant: quadratic form has rank > 2");
  // rank == 2: definite complement has only the radical as isotropic set,
  // indefinite adds two independent isotropic lines.
  SubspaceBasis full = SubspaceBasis::full(k);
  SubspaceBasis comp = linalg::quotient_representatives(full, radical);
  const Vec& u1 = comp.rows[0];
  const Vec& u2 = comp.rows[1];
  auto pair = [&](const Vec& a, const Vec& b) {
    Scalar s;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
  };
  Scalar det = pair(u1, u1) * pair(u2, u2) - pair(u1, u2) * pair(u1, u2);
  if (det.re == 0)
    throw InternalAlarm("alpha_invariant: degenerate complement");
  return det.re < 0 ? rad + 2 : rad;
}

}  // namespace

Form differential(const StructureEquations& eqs, const Form& f) {
  Form out;
  auto dgen = [&](int j, bool barred) {
    return barred ? conjugate(eqs.d_gen(j)) : eqs.d_gen(j);
  };
  for (const auto& [m, c] : f.terms) out += derive_monomial(m, c, dgen);
  return out;
}

Form real_differential(const RealStructureEquations& eqs, const Form& f) {
  Form out;
  auto dgen = [&](int j, bool barred) -> Form {
    if (barred)
      throw std::domain_error("real_differential: barred generator in input");
    return eqs.d_of[j - 1];
  };
  for (const auto& [m, c] : f.terms) out += derive_monomial(m, c, dgen);
  return out;
}

std::pair<Form, Form> del_and_delbar(const StructureEquations& eqs,
                                     const Form& f) {
  if (f.is_zero()) return {Form{}, Form{}};
  const Monomial& first = f.terms.begin()->first;
  int p = first.p(), q = first.q();
  if (!f.is_homogeneous(p, q))
    throw std::domain_error("del_and_delbar: form is not (p,q)-homogeneous");
  Form df = differential(eqs, f);
  Form del = project(df, p + 1, q);
  Form delbar = project(df, p, q + 1);
  if (del + delbar != df)
    throw std::domain_error(
        "del_and_delbar: d f has an unexpected bidegree component "
        "(integrability violated)");
  return {del, delbar};
}

IntegrabilityReport check_integrability(const StructureEquations& eqs) {
  IntegrabilityReport rep;
  for (int j = 1; j <= eqs.n; ++j) {
    const Form& d = eqs.d_gen(j);
    if (!d.is_pure_degree(2)) {
      rep.ok = false;
      rep.violations.push_back("d w" + std::to_string(j) +
                               " is not a 2-form");
      continue;
    }
    if (!project(d, 0, 2).is_zero()) {
      rep.ok = false;
      rep.violations.push_back("w" + std::to_string(j) +
                               ": nonzero (0,2) component of d");
    }
    if (!differential(eqs, d).is_zero()) {
      rep.ok = false;
      rep.violations.push_back("w" + std::to_string(j) + ": d^2 != 0");
    }
  }
  return rep;
}

IntegrabilityReport check_jacobi(const RealStructureEquations& eqs) {
  IntegrabilityReport rep;
  for (int a = 1; a <= eqs.m; ++a) {
    if (!real_differential(eqs, eqs.d_of[a - 1]).is_zero()) {
      rep.ok = false;
      rep.violations.push_back("e" + std::to_string(a) + ": d^2 != 0");
    }
  }
  return rep;
}

int alpha_invariant(const RealStructureEquations& eqs) {
  AlphaData data = alpha_data(eqs);
  if (data.exact2.rank() == 0) return 0;
  if (data.wedge4.rank() == 0) return data.exact2.rank();
  if (!data.gram_valid)
    throw UnsupportedCase(
        "alpha_invariant: wedge squares do not lie in a line of 4-forms");
  return alpha_from_gram(data.exact2, data.gram);
}

int alpha_invariant(const StructureEquations& eqs) {
  return alpha_invariant(realify(eqs));
}

Fingerprint fingerprint(const RealStructureEquations& eqs) {
  auto rep = check_jacobi(eqs);
  if (!rep.ok) throw std::domain_error("fingerprint: d^2 != 0");

  int m = eqs.m;
  Fingerprint fp;
  Mat table = bracket_table(eqs);

  Mat gen1;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) gen1.push_back(table[(a - 1) * m + (b - 1)]);
  SubspaceBasis g1 = linalg::row_reduce(gen1, m);
  auto next_term = [&](const SubspaceBasis& gs) {
    Mat gen;
    for (int a = 1; a <= m; ++a)
      for (const auto& v : gs.rows) gen.push_back(bracket_with(table, m, a, v));
    return gen.empty() ? SubspaceBasis::zero(m) : linalg::row_reduce(gen, m);
  };
  SubspaceBasis g2 = next_term(g1);
  SubspaceBasis g3 = next_term(g2);
  fp.dim_derived = g1.rank();
  fp.dim_g2 = g2.rank();
  fp.dim_g3 = g3.rank();

  // Center: stack ad(., e_b) over all b.
  LinearMap ad = LinearMap::zero(m, m * m);
  for (int b = 1; b <= m; ++b)
    for (int a = 1; a <= m; ++a) {
      const Vec& ab = table[(a - 1) * m + (b - 1)];
      for (int k = 0; k < m; ++k) ad.matrix[(b - 1) * m + k][a - 1] = ab[k];
    }
  fp.dim_center = linalg::kernel(ad).rank();

  int prev_rank = 0;
  for (int k = 1; k <= 3; ++k) {
    LinearMap d = real_d_matrix(eqs, k);
    int rk = linalg::rank(d);
    fp.betti[k - 1] = d.domain_dim - rk - prev_rank;
    prev_rank = rk;
  }

  AlphaData data = alpha_data(eqs);
  fp.dim_dg = data.exact2.rank();
  fp.wedge_rank = data.wedge4.rank();
  if (fp.dim_dg == 0)
    fp.alpha = 0;
  else if (fp.wedge_rank == 0)
    fp.alpha = fp.dim_dg;
  else if (data.gram_valid)
    fp.alpha = alpha_from_gram(data.exact2, data.gram);
  else
    fp.alpha = -1;  // outside the conic regime; wedge_rank disambiguates
  return fp;
}

Fingerprint fingerprint(const StructureEquations& eqs) {
  return fingerprint(realify(eqs));
}

RealStructureEquations realify(const StructureEquations& eqs) {
  int n = eqs.n;
  int m = 2 * n;
  // w^k = e^{2k-1} + i e^{2k}, w^kb = e^{2k-1} - i e^{2k}.
  std::vector<Form> holo(n), anti(n);
  for (int k = 1; k <= n; ++k) {
    holo[k - 1] = Form::gen(2 * k - 1) + Scalar::i() * Form::gen(2 * k);
    anti[k - 1] = Form::gen(2 * k - 1) - Scalar::i() * Form::gen(2 * k);
  }
  RealStructureEquations real;
  real.m = m;
  real.d_of.resize(m);
  Scalar half(Rational(1, 2));
  Scalar half_over_i(Rational(0), Rational(-1, 2));  // 1/(2i)
  for (int k = 1; k <= n; ++k) {
    Form dw = eqs.d_gen(k);
    Form dwb = conjugate(dw);
    Form d_re = substitute<Scalar>(half * (dw + dwb), holo, anti);
    Form d_im = substitute<Scalar>(half_over_i * (dw - dwb), holo, anti);
    for (const auto& [mono, c] : d_re.terms) require_real(c, "realify");
    for (const auto& [mono, c] : d_im.terms) require_real(c, "realify");
    real.d_of[2 * k - 2] = std::move(d_re);
    real.d_of[2 * k - 1] = std::move(d_im);
  }
  return real;
}

StructureEquations complexify(const RealStructureEquations& eqs,
                              const AlmostComplexMatrix& J) {
  int m = eqs.m;
  int n = m / 2;
  const Mat& Jm = J.entries;
  if (static_cast<int>(Jm.size()) != m)
    throw std::domain_error("complexify: J has wrong size");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Scalar s;
      for (int c = 0; c < m; ++c) s += Jm[a][c] * Jm[c][b];
      if (s != Scalar(a == b ? -1 : 0))
        throw std::domain_error("complexify: J^2 != -Id");
    }

  // sigma^k = e^{2k-1} - i J e^{2k-1}, as coordinate rows over e^1..e^m.
  Mat sigma(n, Vec(m));
  for (int k = 1; k <= n; ++k) {
    int a = 2 * k - 1;
    for (int b = 0; b < m; ++b) sigma[k - 1][b] = -Scalar::i() * Jm[a - 1][b];
    sigma[k - 1][a - 1] += Scalar(1);
  }
  if (linalg::row_reduce(sigma, m).rank() != n) {
    // Fall back to the echelon basis of the +i eigenspace of J on forms.
    LinearMap shifted = LinearMap::zero(m, m);
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a)
        shifted.matrix[b][a] =
            Jm[a][b] - (a == b ? Scalar::i() : Scalar(0));
    SubspaceBasis eig = linalg::kernel(shifted);
    if (eig.rank() != n)
      throw std::domain_error("complexify: +i eigenspace has wrong dimension");
    sigma = eig.rows;
  }

  // Invert [sigma; conj(sigma)] to express each e^a in the new coframe.
  Mat big(m, Vec(m));
  for (int k = 0; k < n; ++k)
    for (int b = 0; b < m; ++b) {
      big[k][b] = sigma[k][b];
      big[n + k][b] = sigma[k][b].conj();
    }
  LinearMap big_t = LinearMap::zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) big_t.matrix[i][j] = big[j][i];
  std::vector<Form> e_images(m);
  for (int a = 0; a < m; ++a) {
    Vec rhs(m);
    rhs[a] = Scalar(1);
    auto sol = linalg::solve(big_t, rhs);
    if (!sol) throw std::domain_error("complexify: coframe change singular");
    Form img;
    for (int k = 0; k < n; ++k) {
      img += (*sol)[k] * Form::gen(k + 1);
      img += (*sol)[n + k] * Form::gen_bar(k + 1);
    }
    e_images[a] = std::move(img);
  }

  StructureEquations out;
  out.n = n;
  out.d_of.resize(n);
  for (int k = 0; k < n; ++k) {
    Form dsigma;
    for (int b = 0; b < m; ++b) {
      if (sigma[k][b].is_zero()) continue;
      dsigma += sigma[k][b] * eqs.d_of[b];
    }
    out.d_of[k] = substitute<Scalar>(dsigma, e_images, e_images);
  }
  auto rep = check_integrability(out);
  if (!rep.ok) {
    std::string msg = "complexify: J is not integrable:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw std::domain_error(msg);
  }
  return out;
}

std::string to_string(const Fingerprint& fp) {
  std::ostringstream os;
  os << "(g1=" << fp.dim_derived << ", g2=" << fp.dim_g2 << ", g3=" << fp.dim_g3
     << ", center=" << fp.dim_center << ", b=(" << fp.betti[0] << ","
     << fp.betti[1] << "," << fp.betti[2] << "), alpha=" << fp.alpha
     << ", dg=" << fp.dim_dg << ", wr=" << fp.wedge_rank << ")";
  return os.str();
}

}  // namespace nilcx
