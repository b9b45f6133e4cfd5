#include "nilcx/cohomology.hpp"

#include <functional>

namespace nilcx {
namespace cohomology {

using linalg::LinearMap;
using linalg::SubspaceBasis;
using linalg::Vec;

namespace {

// ker modulo im with canonical echelon representatives.
CohomologyGroup quotient_group(const SubspaceBasis& ker,
                               const SubspaceBasis& im,
                               const std::function<Form(const Vec&)>& lift) {
  for (const auto& row : im.rows)
    if (!linalg::member(row, ker))
      throw InternalAlarm("cohomology: image not contained in kernel");
  SubspaceBasis reps = linalg::quotient_representatives(ker, im);
  CohomologyGroup g;
  g.dimension = ker.rank() - im.rank();
  if (g.dimension != reps.rank())
    throw InternalAlarm("cohomology: rank-nullity cross-check failed");
  for (const auto& row : reps.rows) g.representatives.push_back(lift(row));
  return g;
}

LinearMap operator_matrix(int n, int p, int q, int dp, int dq,
                          const std::function<Form(const Form&)>& op) {
  auto dom = bidegree_basis(n, p, q);
  auto cod = bidegree_basis(n, p + dp, q + dq);
  LinearMap m = LinearMap::zero(static_cast<int>(dom.size()),
                                static_cast<int>(cod.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    Form img = op(Form::monomial(dom[j]));
    Vec col = coordinates(img, n, p + dp, q + dq);
    for (size_t i = 0; i < cod.size(); ++i) m.matrix[i][j] = col[i];
  }
  return m;
}

}  // namespace

LinearMap delbar_matrix(const StructureEquations& eqs, int p, int q) {
  return operator_matrix(eqs.n, p, q, 0, 1, [&](const Form& f) {
    return project(differential(eqs, f), p, q + 1);
  });
}

LinearMap del_matrix(const StructureEquations& eqs, int p, int q) {
  return operator_matrix(eqs.n, p, q, 1, 0, [&](const Form& f) {
    return project(differential(eqs, f), p + 1, q);
  });
}

LinearMap d_matrix(const StructureEquations& eqs, int k) {
  auto dom = degree_basis(eqs.n, k);
  auto cod = degree_basis(eqs.n, k + 1);
  LinearMap m = LinearMap::zero(static_cast<int>(dom.size()),
                                static_cast<int>(cod.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    Form img = differential(eqs, Form::monomial(dom[j]));
    Vec col = degree_coordinates(img, eqs.n, k + 1);
    for (size_t i = 0; i < cod.size(); ++i) m.matrix[i][j] = col[i];
  }
  return m;
}

CohomologyGroup dolbeault(const StructureEquations& eqs, int p, int q) {
  int n = eqs.n;
  SubspaceBasis ker = linalg::kernel(delbar_matrix(eqs, p, q));
  SubspaceBasis im =
      q == 0 ? SubspaceBasis::zero(ker.ambient_dim)
             : linalg::image(delbar_matrix(eqs, p, q - 1));
  return quotient_group(ker, im, [n, p, q](const Vec& v) {
    return from_coordinates(v, n, p, q);
  });
}

CohomologyGroup de_rham(const StructureEquations& eqs, int k) {
  int n = eqs.n;
  SubspaceBasis ker = linalg::kernel(d_matrix(eqs, k));
  SubspaceBasis im = k == 0 ? SubspaceBasis::zero(ker.ambient_dim)
                            : linalg::image(d_matrix(eqs, k - 1));
  return quotient_group(ker, im, [n, k](const Vec& v) {
    return from_degree_coordinates(v, n, k);
  });
}

CohomologyGroup de_rham(const RealStructureEquations& eqs, int k) {
  int m = eqs.m;
  auto matrix_at = [&](int deg) {
    auto dom = bidegree_basis(m, deg, 0);
    auto cod = bidegree_basis(m, deg + 1, 0);
    LinearMap d = LinearMap::zero(static_cast<int>(dom.size()),
                                  static_cast<int>(cod.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
      Vec col = coordinates(real_differential(eqs, Form::monomial(dom[j])), m,
                            deg + 1, 0);
      for (size_t i = 0; i < cod.size(); ++i) d.matrix[i][j] = col[i];
    }
    return d;
  };
  SubspaceBasis ker = linalg::kernel(matrix_at(k));
  SubspaceBasis im = k == 0 ? SubspaceBasis::zero(ker.ambient_dim)
                            : linalg::image(matrix_at(k - 1));
  return quotient_group(ker, im, [m, k](const Vec& v) {
    return from_coordinates(v, m, k, 0);
  });
}

HodgeTable hodge_table(const StructureEquations& eqs) {
  HodgeTable t;
  for (int p = 0; p <= eqs.n; ++p)
    for (int q = 0; q <= eqs.n; ++q) t.h[p][q] = dolbeault(eqs, p, q).dimension;
  for (int k = 0; k <= 2 * eqs.n; ++k) t.betti[k] = de_rham(eqs, k).dimension;
  for (int k = 0; k <= 2 * eqs.n; ++k)
    if (t.row_total(k) < t.betti[k])
      throw InternalAlarm("hodge_table: Frolicher inequality violated");
  return t;
}

}  // namespace cohomology
}  // namespace nilcx
