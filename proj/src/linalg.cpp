#include "nilcx/linalg.hpp"

#include <algorithm>

namespace nilcx {
namespace linalg {

namespace {

void check_ambient(const Mat& vectors, int ambient_dim) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::domain_error("linalg: ambient dimension mismatch");
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    if (m[r][c] != Scalar(1)) {
      Scalar inv = Scalar(1) / m[r][c];
      for (int j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(pivots.size());
  return pivots;
}

}  // namespace

SubspaceBasis SubspaceBasis::full(int ambient) {
  SubspaceBasis s{ambient, Mat(ambient, Vec(ambient))};
  for (int i = 0; i < ambient; ++i) s.rows[i][i] = Scalar(1);
  return s;
}

LinearMap LinearMap::zero(int domain, int codomain) {
  return {domain, codomain, Mat(codomain, Vec(domain))};
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m = zero(dim, dim);
  for (int i = 0; i < dim; ++i) m.matrix[i][i] = Scalar(1);
  return m;
}

Vec LinearMap::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != domain_dim)
    throw std::domain_error("LinearMap::apply: dimension mismatch");
  Vec out(codomain_dim);
  for (int i = 0; i < codomain_dim; ++i)
    for (int j = 0; j < domain_dim; ++j)
      if (!matrix[i][j].is_zero() && !v[j].is_zero())
        out[i] += matrix[i][j] * v[j];
  return out;
}

SubspaceBasis row_reduce(const Mat& vectors, int ambient_dim) {
  check_ambient(vectors, ambient_dim);
  Mat m = vectors;
  rref(m);
  return {ambient_dim, std::move(m)};
}

SubspaceBasis row_reduce(const Mat& vectors) {
  if (vectors.empty())
    throw std::domain_error("row_reduce: ambient dimension unknown for []");
  return row_reduce(vectors, static_cast<int>(vectors[0].size()));
}

SubspaceBasis kernel(const LinearMap& m) {
  Mat a = m.matrix;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(m.domain_dim, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat basis;
  for (int c = 0; c < m.domain_dim; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.domain_dim);
    v[c] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  // Free-column construction is already echelon up to row order; reduce for
  // the canonical form.
  return row_reduce(basis, m.domain_dim);
}

SubspaceBasis image(const LinearMap& m) {
  Mat cols(m.domain_dim, Vec(m.codomain_dim));
  for (int i = 0; i < m.codomain_dim; ++i)
    for (int j = 0; j < m.domain_dim; ++j) cols[j][i] = m.matrix[i][j];
  return row_reduce(cols, m.codomain_dim);
}

int rank(const LinearMap& m) { return image(m).rank(); }

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::domain_error("sum: ambient dimension mismatch");
  Mat m = a.rows;
  m.insert(m.end(), b.rows.begin(), b.rows.end());
  return row_reduce(m, a.ambient_dim);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::domain_error("intersect: ambient dimension mismatch");
  int ka = a.rank(), kb = b.rank();
  if (ka == 0 || kb == 0) return SubspaceBasis::zero(a.ambient_dim);
  // Stacked system: alpha^T A = beta^T B, i.e. A^T alpha - B^T beta = 0.
  LinearMap stacked = LinearMap::zero(ka + kb, a.ambient_dim);
  for (int i = 0; i < a.ambient_dim; ++i) {
    for (int j = 0; j < ka; ++j) stacked.matrix[i][j] = a.rows[j][i];
    for (int j = 0; j < kb; ++j) stacked.matrix[i][ka + j] = -b.rows[j][i];
  }
  SubspaceBasis ker = kernel(stacked);
  Mat vectors;
  for (const auto& coeffs : ker.rows) {
    Vec v(a.ambient_dim);
    for (int j = 0; j < ka; ++j)
      if (!coeffs[j].is_zero())
        for (int i = 0; i < a.ambient_dim; ++i)
          v[i] += coeffs[j] * a.rows[j][i];
    vectors.push_back(std::move(v));
  }
  return row_reduce(vectors, a.ambient_dim);
}

bool member(const Vec& v, const SubspaceBasis& a) {
  if (static_cast<int>(v.size()) != a.ambient_dim)
    throw std::domain_error("member: ambient dimension mismatch");
  Vec w = v;
  for (const auto& row : a.rows) {
    int pc = -1;
    for (int c = 0; c < a.ambient_dim; ++c)
      if (!row[c].is_zero()) {
        pc = c;
        break;
      }
    if (pc < 0 || w[pc].is_zero()) continue;
    Scalar f = w[pc];
    for (int c = 0; c < a.ambient_dim; ++c) w[c] -= f * row[c];
  }
  return std::all_of(w.begin(), w.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::optional<Vec> coordinates_in(const Vec& v, const SubspaceBasis& a) {
  Vec w = v;
  Vec coords(a.rank());
  for (int r = 0; r < a.rank(); ++r) {
    const auto& row = a.rows[r];
    int pc = -1;
    for (int c = 0; c < a.ambient_dim; ++c)
      if (!row[c].is_zero()) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    coords[r] = w[pc];
    if (coords[r].is_zero()) continue;
    for (int c = 0; c < a.ambient_dim; ++c) w[c] -= coords[r] * row[c];
  }
  for (const auto& s : w)
    if (!s.is_zero()) return std::nullopt;
  return coords;
}

SubspaceBasis preimage(const LinearMap& m, const SubspaceBasis& target) {
  if (target.ambient_dim != m.codomain_dim)
    throw std::domain_error("preimage: target lives in the wrong space");
  SubspaceBasis ann = annihilator(target);
  // v in preimage  <=>  (Ann . M) v = 0
  LinearMap composed = LinearMap::zero(m.domain_dim, ann.rank());
  for (int i = 0; i < ann.rank(); ++i)
    for (int j = 0; j < m.domain_dim; ++j) {
      Scalar s;
      for (int k = 0; k < m.codomain_dim; ++k)
        s += ann.rows[i][k] * m.matrix[k][j];
      composed.matrix[i][j] = s;
    }
  if (ann.rank() == 0) return SubspaceBasis::full(m.domain_dim);
  return kernel(composed);
}

SubspaceBasis map_subspace(const LinearMap& m, const SubspaceBasis& s) {
  if (s.ambient_dim != m.domain_dim)
    throw std::domain_error("map_subspace: dimension mismatch");
  Mat images;
  for (const auto& row : s.rows) images.push_back(m.apply(row));
  return row_reduce(images, m.codomain_dim);
}

SubspaceBasis annihilator(const SubspaceBasis& a) {
  LinearMap rows_as_map{a.ambient_dim, a.rank(), a.rows};
  if (a.rank() == 0) return SubspaceBasis::full(a.ambient_dim);
  return kernel(rows_as_map);
}

SubspaceBasis quotient_representatives(const SubspaceBasis& big,
                                       const SubspaceBasis& small) {
  if (big.ambient_dim != small.ambient_dim)
    throw std::domain_error("quotient_representatives: ambient mismatch");
  Mat reduced;
  for (const auto& row : big.rows) {
    Vec w = row;
    for (const auto& srow : small.rows) {
      int pc = -1;
      for (int c = 0; c < small.ambient_dim; ++c)
        if (!srow[c].is_zero()) {
          pc = c;
          break;
        }
      if (pc < 0 || w[pc].is_zero()) continue;
      Scalar f = w[pc];
      for (int c = 0; c < small.ambient_dim; ++c) w[c] -= f * srow[c];
    }
    reduced.push_back(std::move(w));
  }
  return row_reduce(reduced, big.ambient_dim);
}

std::optional<Vec> solve(const LinearMap& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.codomain_dim)
    throw std::domain_error("solve: rhs dimension mismatch");
  Mat aug(m.codomain_dim, Vec(m.domain_dim + 1));
  for (int i = 0; i < m.codomain_dim; ++i) {
    for (int j = 0; j < m.domain_dim; ++j) aug[i][j] = m.matrix[i][j];
    aug[i][m.domain_dim] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  Vec x(m.domain_dim);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.domain_dim) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = aug[r][m.domain_dim];
  }
  return x;
}

}  // namespace linalg
}  // namespace nilcx
