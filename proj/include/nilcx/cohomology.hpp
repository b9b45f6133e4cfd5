#pragma once

#include <array>
#include <vector>

#include "nilcx/liealg.hpp"

namespace nilcx {
namespace cohomology {

/// A cohomology group with canonical representatives: the echelon basis of
/// the kernel reduced modulo the image (deterministic in the monomial order).
struct CohomologyGroup {
  int dimension = 0;
  std::vector<Form> representatives;
};

/// H^{p,q}_delbar(g): kernel of delbar on (p,q) modulo its image from
/// (p,q-1).  Requires an integrable structure.
CohomologyGroup dolbeault(const StructureEquations& eqs, int p, int q);

/// H^k of the complexified Chevalley-Eilenberg complex.
CohomologyGroup de_rham(const StructureEquations& eqs, int k);
/// H^k of a real algebra; dimensions are the real Betti numbers.
CohomologyGroup de_rham(const RealStructureEquations& eqs, int k);

/// Matrix of delbar : (p,q) -> (p,q+1) in the lex monomial bases.
linalg::LinearMap delbar_matrix(const StructureEquations& eqs, int p, int q);
/// Matrix of del : (p,q) -> (p+1,q).
linalg::LinearMap del_matrix(const StructureEquations& eqs, int p, int q);
/// Matrix of d on total degree k, in the degree_basis order.
linalg::LinearMap d_matrix(const StructureEquations& eqs, int k);

struct HodgeTable {
  std::array<std::array<int, 4>, 4> h{};  // h[p][q], 0 <= p,q <= n
  std::array<int, 7> betti{};             // b_0..b_{2n}

  int row_total(int k) const {
    int s = 0;
    for (int p = 0; p <= 3; ++p)
      if (k - p >= 0 && k - p <= 3) s += h[p][k - p];
    return s;
  }
};

/// Full Hodge diamond plus Betti numbers.  Verifies the Frolicher
/// inequality sum_{p+q=k} h^{p,q} >= b_k and raises InternalAlarm if it
/// fails (it is a theorem; a violation means a bug).
HodgeTable hodge_table(const StructureEquations& eqs);

}  // namespace cohomology
}  // namespace nilcx
