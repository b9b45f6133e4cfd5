#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/form.hpp"
#include "nilcx/linalg.hpp"

namespace nilcx {

/// Complex structure equations: the differentials d w^{j} (j = 1..n) of a
/// (1,0)-coframe.  Single source of truth for d, del and delbar.
struct StructureEquations {
  int n = 3;
  std::vector<Form> d_of;  // d_of[j-1] = d w^j, a pure degree-2 form

  const Form& d_gen(int j) const { return d_of[j - 1]; }
};

/// Real structure equations d e^a (a = 1..m) in generators e^1..e^m.  Forms
/// use only unbarred monomials and real rational coefficients.
struct RealStructureEquations {
  int m = 6;
  std::vector<Form> d_of;  // d_of[a-1] = d e^a
};

/// A real almost-complex structure given by its action on the coframe:
/// J(e^a) = sum_b entries[a-1][b-1] e^b.
struct AlmostComplexMatrix {
  linalg::Mat entries;  // m x m over Scalar (real entries expected)
};

struct IntegrabilityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// The Chevalley-Eilenberg differential extended as an anti-derivation, with
/// d(w^jb) = conjugate(d w^j).
Form differential(const StructureEquations& eqs, const Form& f);
Form real_differential(const RealStructureEquations& eqs, const Form& f);

/// (del f, delbar f) = (pi_{p+1,q} d f, pi_{p,q+1} d f) for a
/// (p,q)-homogeneous f.  Throws if d f has any other bidegree component.
std::pair<Form, Form> del_and_delbar(const StructureEquations& eqs,
                                     const Form& f);

/// True iff d^2 w^j = 0 and pi_{0,2}(d w^j) = 0 for every generator.
IntegrabilityReport check_integrability(const StructureEquations& eqs);

/// d^2 = 0 on all generators of a real algebra.
IntegrabilityReport check_jacobi(const RealStructureEquations& eqs);

/// Isomorphism invariants of the underlying real Lie algebra.  The last two
/// fields refine the classification where the first seven collide.
struct Fingerprint {
  int dim_derived = 0;         // dim [g, g]
  int dim_g2 = 0;              // dim [g, [g, g]]
  int dim_g3 = 0;
  int dim_center = 0;
  std::array<int, 3> betti{};  // b1, b2, b3
  int alpha = 0;               // -1 when outside the conic regime
  int dim_dg = 0;              // dim d(g*)
  int wedge_rank = 0;          // dim span{tau ^ sigma : tau, sigma in d(g*)}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const RealStructureEquations& eqs);
Fingerprint fingerprint(const StructureEquations& eqs);

/// Maximum number of linearly independent decomposable exact real 2-forms.
/// Computed by signature counting on the quadratic form tau -> tau ^ tau,
/// which must take values in a line of 4-forms; otherwise UnsupportedCase.
int alpha_invariant(const RealStructureEquations& eqs);
int alpha_invariant(const StructureEquations& eqs);

/// Underlying real structure equations in the basis e^{2k-1} = Re w^k,
/// e^{2k} = Im w^k.
RealStructureEquations realify(const StructureEquations& eqs);

/// Structure equations of the complex structure J on a real algebra, in the
/// (1,0)-coframe e^{2k-1} - i J e^{2k-1} (falling back to an echelon basis
/// of the +i eigenspace when that recipe is degenerate).  Exact; requires
/// J^2 = -Id and integrability.
StructureEquations complexify(const RealStructureEquations& eqs,
                              const AlmostComplexMatrix& J);

std::string to_string(const Fingerprint& fp);

}  // namespace nilcx
