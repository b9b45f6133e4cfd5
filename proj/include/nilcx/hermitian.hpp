#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcx/classify.hpp"
#include "nilcx/liealg.hpp"

namespace nilcx {
namespace hermitian {

/// Parameters of an invariant Hermitian structure
///   2 Omega = i(r2 w^{1 1b} + s2 w^{2 2b} + t2 w^{3 3b})
///             + u w^{1 2b} - conj(u) w^{2 1b} + v w^{2 3b} - conj(v) w^{3 2b}
///             + z w^{1 3b} - conj(z) w^{3 1b},
/// with r2, s2, t2 real.
struct HermitianParams {
  Scalar r2{1}, s2{1}, t2{1};
  Scalar u{0}, v{0}, z{0};
};

Form build_omega(const HermitianParams& p);

enum class Positivity { positive, degenerate, indefinite };

/// positive: all four defining inequalities strict; degenerate: Omega^3 = 0;
/// indefinite otherwise.
Positivity is_positive(const HermitianParams& p);

struct MetricFlags {
  bool balanced = false;
  bool gauduchon = false;
  bool sg = false;
};

/// balanced: d(Omega^2) = 0; gauduchon: del delbar (Omega^2) = 0;
/// sG: del(Omega^2) is delbar-exact from (3,1).  Requires a positive metric
/// and asserts balanced => sG => gauduchon.
MetricFlags metric_flags(const StructureEquations& eqs,
                         const HermitianParams& p);

struct Existence {
  bool exists = false;
  std::optional<HermitianParams> witness;  // verified before returning
};

/// Class-level answers: an algebra carries some complex structure with an
/// sG (equivalently balanced) metric iff it is one of h1..h6 or h19-.
bool sg_exists(classify::AlgebraClass cls);
bool balanced_exists(classify::AlgebraClass cls);

/// Structure-level deciders with verified witnesses.
Existence balanced_exists(const classify::TwoStepTriple& t);
Existence balanced_exists(const classify::ThreeStepTriple& t);
Existence balanced_exists(const classify::ParallelizableStructure& t);
Existence balanced_exists(const classify::NonNilpotentParams& t);

Existence sg_exists(const classify::TwoStepTriple& t);
Existence sg_exists(const classify::ThreeStepTriple& t);
Existence sg_exists(const classify::ParallelizableStructure& t);
Existence sg_exists(const classify::NonNilpotentParams& t);

/// True iff del w^j = 0 for every generator.
bool is_abelian(const StructureEquations& eqs);

/// sg/balanced existence for raw equations, decidable when the structure is
/// abelian or the class settles the answer outright; UnsupportedCase when
/// the decision would need the family normal form.
std::pair<bool, bool> sg_balanced_by_class(const StructureEquations& eqs);

struct SgE2Sample {
  std::string label;
  StructureEquations eqs;
  bool sg = false;
  classify::AlgebraClass cls;
};
struct SgE2Row {
  std::string label;
  bool sg = false;
  int degeneration_step = 0;
  bool consistent = true;
};
struct SgE2Report {
  std::vector<SgE2Row> rows;
  bool all_consistent = true;
};

/// sG existence forces degeneration at the second step, and at the first
/// step away from h5.
SgE2Report sg_implies_e2(const std::vector<SgE2Sample>& suite);

}  // namespace hermitian
}  // namespace nilcx
