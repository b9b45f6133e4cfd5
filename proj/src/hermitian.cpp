#include "nilcx/hermitian.hpp"

#include "nilcx/cohomology.hpp"
#include "nilcx/spectral.hpp"

namespace nilcx {
namespace hermitian {

using classify::AlgebraClass;

namespace {

Form w(int j) { return Form::gen(j); }
Form wb(int j) { return Form::gen_bar(j); }

Rational real_of(const Scalar& s, const char* what) {
  if (s.im != 0)
    throw std::domain_error(std::string(what) + " must be real");
  return s.re;
}

bool in_sg_class_list(AlgebraClass cls) {
  switch (cls) {
    case AlgebraClass::h1:
    case AlgebraClass::h2:
    case AlgebraClass::h3:
    case AlgebraClass::h4:
    case AlgebraClass::h5:
    case AlgebraClass::h6:
    case AlgebraClass::h19minus:
      return true;
    default:
      return false;
  }
}

HermitianParams diagonal_metric() { return {}; }

// A returned witness must be positive and must actually satisfy the flag it
// certifies.
HermitianParams checked(const StructureEquations& eqs, HermitianParams p,
                        bool needs_balanced) {
  if (is_positive(p) != Positivity::positive)
    throw InternalAlarm("metric witness is not positive");
  MetricFlags f = metric_flags(eqs, p);
  if (needs_balanced ? !f.balanced : !f.sg)
    throw InternalAlarm("metric witness fails its certifying flag");
  return p;
}

}  // namespace

Form build_omega(const HermitianParams& p) {
  real_of(p.r2, "r2");
  real_of(p.s2, "s2");
  real_of(p.t2, "t2");
  Scalar half(Rational(1, 2));
  Scalar hi = half * Scalar::i();
  Form omega = hi * p.r2 * wedge(w(1), wb(1)) + hi * p.s2 * wedge(w(2), wb(2)) +
               hi * p.t2 * wedge(w(3), wb(3));
  omega += half * p.u * wedge(w(1), wb(2)) - half * p.u.conj() * wedge(w(2), wb(1));
  omega += half * p.v * wedge(w(2), wb(3)) - half * p.v.conj() * wedge(w(3), wb(2));
  omega += half * p.z * wedge(w(1), wb(3)) - half * p.z.conj() * wedge(w(3), wb(1));
  return omega;
}

Positivity is_positive(const HermitianParams& p) {
  Rational r2 = real_of(p.r2, "r2");
  Rational s2 = real_of(p.s2, "s2");
  Rational t2 = real_of(p.t2, "t2");
  Rational nu = p.u.norm_sq(), nv = p.v.norm_sq(), nz = p.z.norm_sq();
  // 2 Re(i conj(u) conj(v) z)
  Scalar cross = Scalar::i() * p.u.conj() * p.v.conj() * p.z;
  Rational det_term = r2 * s2 * t2 + 2 * cross.re - t2 * nu - r2 * nv - s2 * nz;
  if (r2 * s2 > nu && s2 * t2 > nv && r2 * t2 > nz && det_term > 0)
    return Positivity::positive;
  Form omega = build_omega(p);
  if (wedge(wedge(omega, omega), omega).is_zero()) return Positivity::degenerate;
  return Positivity::indefinite;
}

MetricFlags metric_flags(const StructureEquations& eqs,
                         const HermitianParams& p) {
  if (is_positive(p) != Positivity::positive)
    throw std::domain_error("metric_flags: metric is not positive definite");
  Form omega = build_omega(p);
  Form omega2 = wedge(omega, omega);

  MetricFlags flags;
  Form d2 = differential(eqs, omega2);
  flags.balanced = d2.is_zero();

  auto [del2, delbar2] = del_and_delbar(eqs, omega2);
  Form del_delbar = project(differential(eqs, delbar2), 3, 3);
  flags.gauduchon = del_delbar.is_zero();

  auto im = linalg::image(cohomology::delbar_matrix(eqs, 3, 1));
  flags.sg = linalg::member(coordinates(del2, eqs.n, 3, 2), im);

  if ((flags.balanced && !flags.sg) || (flags.sg && !flags.gauduchon))
    throw InternalAlarm("metric_flags: balanced => sG => gauduchon broken");
  return flags;
}

bool sg_exists(AlgebraClass cls) { return in_sg_class_list(cls); }
bool balanced_exists(AlgebraClass cls) { return in_sg_class_list(cls); }

Existence balanced_exists(const classify::TwoStepTriple& t) {
  StructureEquations eqs = classify::equations_of(t);
  Rational lambda = real_of(t.lambda, "lambda");
  Rational x = t.D.re, y = t.D.im;
  if (lambda != 0) {
    // lambda^4 - 4 x lambda^2 - 4 y^2 > 0 is the solvability condition;
    // the witness takes s^2 at the midpoint of the feasible interval and
    // u = y/lambda + i (s^2+x)/lambda.
    Rational l2 = lambda * lambda;
    if (!(l2 * l2 - 4 * x * l2 - 4 * y * y > 0)) return {false, {}};
    Rational s2((l2 - 2 * x) / 2);
    HermitianParams p;
    p.s2 = Scalar(s2);
    p.u = Scalar(y / lambda, (s2 + x) / lambda);
    return {true, checked(eqs, p, true)};
  }
  if (y != 0 || x >= 0) return {false, {}};
  HermitianParams p;
  p.s2 = Scalar(-x);
  return {true, checked(eqs, p, true)};
}

Existence balanced_exists(const classify::ThreeStepTriple&) {
  return {false, {}};
}

Existence balanced_exists(const classify::ParallelizableStructure& t) {
  StructureEquations eqs = classify::equations_of(t);
  return {true, checked(eqs, diagonal_metric(), true)};
}

Existence balanced_exists(const classify::NonNilpotentParams& t) {
  if (t.eps != 0) return {false, {}};
  StructureEquations eqs = classify::equations_of(t);
  return {true, checked(eqs, diagonal_metric(), true)};
}

Existence sg_exists(const classify::TwoStepTriple& t) {
  Existence balanced = balanced_exists(t);
  if (t.rho == 0) return balanced;  // abelian: sG iff balanced
  if (balanced.exists) return balanced;
  // rho = 1: every positive metric is sG.
  StructureEquations eqs = classify::equations_of(t);
  return {true, checked(eqs, diagonal_metric(), false)};
}

Existence sg_exists(const classify::ThreeStepTriple&) { return {false, {}}; }

Existence sg_exists(const classify::ParallelizableStructure& t) {
  return balanced_exists(t);
}

Existence sg_exists(const classify::NonNilpotentParams& t) {
  return balanced_exists(t);
}

bool is_abelian(const StructureEquations& eqs) {
  for (int j = 1; j <= eqs.n; ++j)
    if (!project(eqs.d_gen(j), 2, 0).is_zero()) return false;
  return true;
}

std::pair<bool, bool> sg_balanced_by_class(const StructureEquations& eqs) {
  AlgebraClass cls = classify::identify(eqs);
  if (!in_sg_class_list(cls)) return {false, false};
  switch (cls) {
    case AlgebraClass::h1:
    case AlgebraClass::h6:
    case AlgebraClass::h19minus:
      return {true, true};
    default:
      break;
  }
  if (is_abelian(eqs)) {
    // For abelian structures sG and balanced coincide, and among the
    // abelian structures on h2..h5 only h3(-) and the abelian h5 family
    // admit balanced metrics.
    if (cls == AlgebraClass::h2 || cls == AlgebraClass::h4)
      return {false, false};
    throw UnsupportedCase(
        "sg_balanced_by_class: abelian h3/h5 need the family normal form");
  }
  // Non-abelian h2/h4/h5: sG always; balanced needs the triple.
  throw UnsupportedCase(
      "sg_balanced_by_class: balanced existence needs the family normal form");
}

SgE2Report sg_implies_e2(const std::vector<SgE2Sample>& suite) {
  SgE2Report report;
  for (const auto& sample : suite) {
    SgE2Row row;
    row.label = sample.label;
    row.sg = sample.sg;
    row.degeneration_step =
        spectral::behaviour(sample.eqs).degeneration_step;
    if (sample.sg) {
      row.consistent = row.degeneration_step <= 2;
      if (sample.cls != AlgebraClass::h5)
        row.consistent = row.consistent && row.degeneration_step == 1;
    }
    report.all_consistent = report.all_consistent && row.consistent;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hermitian
}  // namespace nilcx
