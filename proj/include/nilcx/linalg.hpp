#pragma once

#include <optional>
#include <vector>

#include "nilcx/scalar.hpp"

namespace nilcx {
namespace linalg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

/// Canonical reduced basis of a linear subspace of Scalar^ambient_dim.
/// Rows are in reduced row-echelon form: nonzero, pivots strictly
/// increasing, pivot entries 1, pivot columns otherwise zero.  Two values
/// represent the same subspace iff their rows are identical.
struct SubspaceBasis {
  int ambient_dim = 0;
  Mat rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool operator==(const SubspaceBasis&) const = default;

  static SubspaceBasis zero(int ambient) { return {ambient, {}}; }
  static SubspaceBasis full(int ambient);
};

/// Dense matrix of a linear map Scalar^domain_dim -> Scalar^codomain_dim,
/// stored row-major (matrix[r][c]), acting on column vectors.
struct LinearMap {
  int domain_dim = 0;
  int codomain_dim = 0;
  Mat matrix;  // codomain_dim rows of length domain_dim

  static LinearMap zero(int domain, int codomain);
  static LinearMap identity(int dim);

  Vec apply(const Vec& v) const;
};

/// Canonical reduced echelon basis of the span of the given vectors.
/// Pivoting is first-nonzero-column, no magnitude pivoting: the output is a
/// deterministic canonical form.
SubspaceBasis row_reduce(const Mat& vectors, int ambient_dim);
SubspaceBasis row_reduce(const Mat& vectors);  // ambient from vectors[0]

/// Basis of the null space {v : m v = 0}.
SubspaceBasis kernel(const LinearMap& m);

/// Basis of the column span of m.
SubspaceBasis image(const LinearMap& m);

int rank(const LinearMap& m);

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

bool member(const Vec& v, const SubspaceBasis& a);

/// Coordinates of v in the row basis of a, if v lies in the subspace.
std::optional<Vec> coordinates_in(const Vec& v, const SubspaceBasis& a);

/// m^{-1}(target) = {v : m v in target}.
SubspaceBasis preimage(const LinearMap& m, const SubspaceBasis& target);

/// Image of a subspace under a map, as a canonical basis.
SubspaceBasis map_subspace(const LinearMap& m, const SubspaceBasis& s);

/// Annihilator {w : r . w = 0 for every row r of a} under the plain
/// (non-conjugated) dot pairing.
SubspaceBasis annihilator(const SubspaceBasis& a);

/// Canonical representatives of the quotient big/small: each row of big
/// reduced modulo small, re-reduced to echelon form.  Requires small <= big.
SubspaceBasis quotient_representatives(const SubspaceBasis& big,
                                       const SubspaceBasis& small);

/// One solution x of m x = b, if any.
std::optional<Vec> solve(const LinearMap& m, const Vec& b);

}  // namespace linalg
}  // namespace nilcx
