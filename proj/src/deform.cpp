#include "nilcx/deform.hpp"

#include "nilcx/parse.hpp"

namespace nilcx {
namespace deform {

using classify::AlgebraClass;
using classify::ThreeStepTriple;
using classify::TwoStepTriple;

namespace {

Form w(int j) { return Form::gen(j); }
Form wb(int j) { return Form::gen_bar(j); }

Rational real_param(const Scalar& s, const char* family) {
  if (s.im != 0)
    throw std::domain_error(std::string(family) + ": parameter must be real");
  return s.re;
}

std::string triple_str(const TwoStepTriple& t) {
  return "(" + std::to_string(t.rho) + ", " + to_string(t.lambda) + ", " +
         to_string(t.D) + ")";
}
std::string triple_str(const ThreeStepTriple& t) {
  return "(" + std::to_string(t.rho) + ", " + to_string(t.B) + ", " +
         to_string(t.c) + ")";
}

}  // namespace

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::h5_ex46: return "h5_ex46";
    case FamilyTag::h15_ex48: return "h15_ex48";
    case FamilyTag::h5_ex58_lambda: return "h5_ex58_lambda";
    case FamilyTag::h5_ex58_x: return "h5_ex58_x";
    case FamilyTag::h4_thm59: return "h4_thm59";
  }
  return "?";
}

FamilyTag family_from_name(const std::string& name) {
  if (name == "h5_ex46") return FamilyTag::h5_ex46;
  if (name == "h15_ex48") return FamilyTag::h15_ex48;
  if (name == "h5_ex58_lambda") return FamilyTag::h5_ex58_lambda;
  if (name == "h5_ex58_x") return FamilyTag::h5_ex58_x;
  if (name == "h4_thm59") return FamilyTag::h4_thm59;
  throw std::domain_error("unknown deformation family: " + name);
}

Instance instantiate(const Family& f, const Scalar& param) {
  Instance inst;
  switch (f.tag) {
    case FamilyTag::h5_ex46: {
      Rational t = real_param(param, "h5_ex46");
      if (t < 0 || t >= Rational(1, 2))
        throw std::domain_error("h5_ex46: t must lie in [0, 1/2)");
      Rational lambda = f.lambda46;
      if (lambda < 0 || lambda == 1)
        throw std::domain_error("h5_ex46: lambda must be >= 0 and != 1");
      Rational l2 = lambda * lambda;
      Rational d;
      if (lambda == 0)
        d = t;
      else if (l2 < Rational(1, 2))
        d = t * l2 / 4;
      else if (l2 < 1)
        d = t * (1 - l2) / 4;
      else
        d = -t * (1 - l2) / 4;
      TwoStepTriple triple{1, Scalar(lambda), Scalar(Rational(0), d)};
      inst.two = triple;
      inst.eqs = classify::equations_of(triple);
      inst.triple_label = triple_str(triple);
      return inst;
    }
    case FamilyTag::h15_ex48: {
      Rational s = real_param(param, "h15_ex48");
      if (s < -1 || s > 1)
        throw std::domain_error("h15_ex48: s must lie in [-1, 1]");
      ThreeStepTriple triple =
          s == 1 ? ThreeStepTriple{0, Scalar(1), Scalar(Rational(1, 4))}
                 : ThreeStepTriple{1, Scalar(Rational(4 / (1 - s))),
                                   Scalar(Rational((1 + s) / (2 * (1 - s))))};
      inst.three = triple;
      inst.eqs = classify::equations_of(triple);
      inst.triple_label = triple_str(triple);
      return inst;
    }
    case FamilyTag::h5_ex58_lambda: {
      Rational lambda = real_param(param, "h5_ex58_lambda");
      if (lambda < 0 || 2 * lambda * lambda >= 1)
        throw std::domain_error(
            "h5_ex58_lambda: lambda^2 must lie in [0, 1/2)");
      TwoStepTriple triple{1, Scalar(lambda), Scalar(0)};
      inst.two = triple;
      inst.eqs = classify::equations_of(triple);
      inst.triple_label = triple_str(triple);
      return inst;
    }
    case FamilyTag::h5_ex58_x: {
      Rational x = real_param(param, "h5_ex58_x");
      if (4 * x <= -1)
        throw std::domain_error("h5_ex58_x: x must satisfy x > -1/4");
      TwoStepTriple triple{1, Scalar(0), Scalar(x)};
      inst.two = triple;
      inst.eqs = classify::equations_of(triple);
      inst.triple_label = triple_str(triple);
      return inst;
    }
    case FamilyTag::h4_thm59: {
      const Scalar& a = param;
      Rational norm = a.norm_sq();
      if (!(norm < 1))
        throw std::domain_error("h4_thm59: need |a| < 1");
      // Raw Kuranishi-basis equations:
      // 2(1-|a|^2) d mu3 = 2 conj(a) mu^{12} + i mu^{1 1b} + mu^{1 2b}
      //                    + mu^{2 1b} - i |a|^2 mu^{2 2b}.
      Scalar scale = Scalar(1) / Scalar(Rational(2 * (1 - norm)));
      Form dmu3 = Scalar(2) * a.conj() * wedge(w(1), w(2)) +
                  Scalar::i() * wedge(w(1), wb(1)) + wedge(w(1), wb(2)) +
                  wedge(w(2), wb(1)) -
                  Scalar::i() * Scalar(Rational(norm)) * wedge(w(2), wb(2));
      StructureEquations raw{3, {Form{}, Form{}, scale * dmu3}};
      auto rep = check_integrability(raw);
      if (!rep.ok) throw InternalAlarm("h4_thm59: raw equations invalid");
      inst.raw = raw;
      if (a.is_zero()) {
        inst.eqs = raw;
        inst.triple_label = "abelian h4 (a=0)";
        return inst;
      }
      if (!is_rational_square(norm))
        throw ExactUnrepresentable(
            "h4_thm59: |a| is irrational; only the raw form exists for a = " +
            to_string(a));
      Rational mod = rational_sqrt(norm);
      TwoStepTriple triple{1, Scalar(Rational(1 / mod)),
                           Scalar(Rational((1 - norm) / (4 * norm)))};
      inst.two = triple;
      inst.eqs = classify::equations_of(triple);
      inst.triple_label = triple_str(triple);
      return inst;
    }
  }
  throw std::domain_error("instantiate: unknown family");
}

SweepRow compute_row(const Family& f, const Scalar& param) {
  SweepRow row;
  row.param = param;
  try {
    Instance inst = instantiate(f, param);
    row.triple = inst.triple_label;

    if (inst.two) {
      row.cls = classify::classify_2step(*inst.two);
      auto sg = hermitian::sg_exists(*inst.two);
      auto bal = hermitian::balanced_exists(*inst.two);
      row.sg = sg.exists;
      row.balanced = bal.exists;
    } else if (inst.three) {
      row.cls = classify::classify_3step(*inst.three);
      row.sg = hermitian::sg_exists(*inst.three).exists;
      row.balanced = hermitian::balanced_exists(*inst.three).exists;
    } else {
      row.cls = classify::identify(inst.eqs);
      auto [sg, bal] = hermitian::sg_balanced_by_class(inst.eqs);
      row.sg = sg;
      row.balanced = bal;
    }

    if (classify::identify(inst.eqs) != row.cls)
      throw InternalAlarm("sweep row: classify and identify disagree");

    spectral::SpectralSequence ss(inst.eqs);
    for (int r = 1; r <= 4; ++r) row.er_dims[r - 1] = ss.term(r).dims;
    auto b = ss.behaviour();
    row.behaviour = b.signature;
    row.degeneration_step = b.degeneration_step;
    std::string report;
    if (!ss.einfty_check(&report))
      throw InternalAlarm("sweep row: E_infinity/Betti accounting failed: " +
                          report);
  } catch (const InternalAlarm& e) {
    row.failed = true;
    row.error = std::string("internal alarm: ") + e.what();
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> sweep(const Family& f,
                            const std::vector<Scalar>& params) {
  std::vector<SweepRow> rows;
  rows.reserve(params.size());
  for (const Scalar& p : params) rows.push_back(compute_row(f, p));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const Family& f,
                                     const std::vector<Scalar>& params) {
  std::vector<SweepRow> rows(params.size());
#ifdef NILCX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0;
       i < static_cast<std::ptrdiff_t>(params.size()); ++i)
    rows[i] = compute_row(f, params[i]);
  return rows;
}

SemicontReport semicontinuity_report(const Family& f, const Scalar& center,
                                     const std::vector<Scalar>& nearby) {
  SemicontReport report;
  report.center = center;
  report.nearby = nearby;

  auto dims_of = [&](const Scalar& p) {
    spectral::SpectralSequence ss(instantiate(f, p).eqs);
    std::array<std::vector<std::vector<int>>, 4> dims;
    for (int r = 1; r <= 4; ++r) dims[r - 1] = ss.term(r).dims;
    return dims;
  };

  auto center_dims = dims_of(center);
  std::vector<std::array<std::vector<std::vector<int>>, 4>> nearby_dims;
  for (const Scalar& p : nearby) nearby_dims.push_back(dims_of(p));

  for (int r = 1; r <= 4; ++r)
    for (size_t p = 0; p < center_dims[r - 1].size(); ++p)
      for (size_t q = 0; q < center_dims[r - 1][p].size(); ++q) {
        int c = center_dims[r - 1][p][q];
        bool above_all = !nearby.empty(), below_all = !nearby.empty();
        std::vector<int> vals;
        for (const auto& nd : nearby_dims) {
          int v = nd[r - 1][p][q];
          vals.push_back(v);
          above_all = above_all && c > v;
          below_all = below_all && c < v;
        }
        if (above_all || below_all)
          report.jumps.push_back({r, static_cast<int>(p),
                                  static_cast<int>(q), c, vals, above_all});
      }
  return report;
}

}  // namespace deform
}  // namespace nilcx
