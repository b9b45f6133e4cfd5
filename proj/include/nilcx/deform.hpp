#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilcx/classify.hpp"
#include "nilcx/hermitian.hpp"
#include "nilcx/spectral.hpp"

namespace nilcx {
namespace deform {

enum class FamilyTag {
  h5_ex46,        // D = i d(t, lambda) on h5; parameter t in [0, 1/2)
  h15_ex48,       // parameter s = sin t in [-1, 1]
  h5_ex58_lambda, // (1, lambda, 0); lambda^2 in [0, 1/2)
  h5_ex58_x,      // (1, 0, x); x in (-1/4, infinity)
  h4_thm59,       // Kuranishi disc parameter a, |a| < 1
};

struct Family {
  FamilyTag tag = FamilyTag::h15_ex48;
  Rational lambda46;  // the fixed lambda of h5_ex46; unused otherwise
};

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

/// One family member: normalized equations, the declared triple when the
/// parameter admits one, and (for h4_thm59) the raw Kuranishi-basis form.
struct Instance {
  StructureEquations eqs;
  std::string triple_label;
  std::optional<classify::TwoStepTriple> two;
  std::optional<classify::ThreeStepTriple> three;
  std::optional<StructureEquations> raw;
};

Instance instantiate(const Family& f, const Scalar& param);

struct SweepRow {
  Scalar param;
  std::string triple;
  classify::AlgebraClass cls{};
  std::array<std::vector<std::vector<int>>, 4> er_dims;  // E_1..E_4
  std::string behaviour;
  int degeneration_step = 0;
  bool sg = false;
  bool balanced = false;
  bool failed = false;
  std::string error;
};

/// Pure per-parameter evaluation; every row runs the class consistency check
/// and the E_infinity/Betti accounting, failing the row (not the sweep) on a
/// violation.
SweepRow compute_row(const Family& f, const Scalar& param);

/// Serial reference implementation.
std::vector<SweepRow> sweep(const Family& f, const std::vector<Scalar>& params);
/// Same contract, rows evaluated in parallel when OpenMP is available.
std::vector<SweepRow> sweep_parallel(const Family& f,
                                     const std::vector<Scalar>& params);

struct SemicontJump {
  int r = 0, p = 0, q = 0;
  int center_dim = 0;
  std::vector<int> nearby_dims;
  bool upper = false;  // center strictly above every nearby value
};

struct SemicontReport {
  Scalar center;
  std::vector<Scalar> nearby;
  std::vector<SemicontJump> jumps;
};

/// Tabulates dim E_r^{p,q} at the center parameter against the nearby ones
/// and flags every cell where the center value is strictly larger (upper
/// jump) or strictly smaller (lower jump) than all nearby values.
SemicontReport semicontinuity_report(const Family& f, const Scalar& center,
                                     const std::vector<Scalar>& nearby);

}  // namespace deform
}  // namespace nilcx
