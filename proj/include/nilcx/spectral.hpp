#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilcx/cohomology.hpp"
#include "nilcx/liealg.hpp"

namespace nilcx {
namespace spectral {

/// One page of the spectral sequence of the filtered total complex.
struct SpectralTerm {
  int r = 0;
  std::vector<std::vector<int>> dims;  // dims[p][q], 0 <= p,q <= n
  /// Canonical representative space per (p,q): echelon basis of Z_r reduced
  /// modulo B_r, in the degree_basis coordinates of degree p+q.
  std::vector<std::vector<linalg::SubspaceBasis>> reps;

  int total(int k) const {
    int s = 0;
    int n = static_cast<int>(dims.size()) - 1;
    for (int p = 0; p <= n; ++p)
      if (k - p >= 0 && k - p <= n) s += dims[p][k - p];
    return s;
  }
};

struct Behaviour {
  std::string signature;     // e.g. "E1≇E2≅E∞"
  int degeneration_step = 1; // least r with dims(E_r) = dims(E_infty)
};

/// Computes and caches the pages of one structure.  The filtration
/// F^p A^k = span of monomials with holomorphic degree >= p is normative;
/// Z_r^{p,q} = F^p A^{p+q} cap d^{-1}(F^{p+r} A^{p+q+1}) and
/// B_r^{p,q} = Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}.
/// Immutable after construction apart from the internal memo; not intended
/// to be shared across threads while pages are still being filled in.
class SpectralSequence {
 public:
  explicit SpectralSequence(StructureEquations eqs);

  const StructureEquations& equations() const { return eqs_; }
  const SpectralTerm& term(int r);

  /// Induced map E_r^{p,q} -> E_r^{p+r,q-r+1} on the canonical
  /// representatives.  Verifies that d maps boundaries to boundaries.
  linalg::LinearMap dr_map(int r, int p, int q);

  Behaviour behaviour();
  /// E_4 = E_infty for n = 3; stabilization is asserted.
  const SpectralTerm& einfty();

  /// sum_p dim E_infty^{p,k-p} = b_k for every k; on failure returns false
  /// and fills the report.
  bool einfty_check(std::string* report = nullptr);

 private:
  linalg::SubspaceBasis filtration(int p, int k) const;
  const linalg::SubspaceBasis& z_space(int s, int a, int k);
  linalg::SubspaceBasis b_space(int r, int p, int q);

  StructureEquations eqs_;
  int n_;
  std::vector<linalg::LinearMap> d_;               // d on degree k, k = 0..2n
  std::map<std::tuple<int, int, int>, linalg::SubspaceBasis> z_memo_;
  std::map<std::tuple<int, int, int>, linalg::SubspaceBasis> b_memo_;
  std::map<int, SpectralTerm> terms_;
};

SpectralTerm er_term(const StructureEquations& eqs, int r);
linalg::LinearMap dr_map(const StructureEquations& eqs, int r, int p, int q);
Behaviour behaviour(const StructureEquations& eqs);
bool einfty_check(const StructureEquations& eqs, std::string* report = nullptr);

}  // namespace spectral
}  // namespace nilcx
