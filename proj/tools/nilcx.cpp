// Command-line front end: classification, cohomology, Frolicher pages,
// Hermitian metric existence, equivalence checks and deformation sweeps for
// invariant complex structures on 6-dimensional nilpotent Lie algebras.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "nilcx/classify.hpp"
#include "nilcx/deform.hpp"
#include "nilcx/hermitian.hpp"
#include "nilcx/parse.hpp"
#include "nilcx/serialize.hpp"

using namespace nilcx;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::string output;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw std::domain_error("cannot open output file " + g.output);
  out << text;
}

void emit_json(const GlobalOpts& g, const json& j) {
  emit(g, j.dump(2) + "\n");
}

struct FamilyFlags {
  std::string family;
  int rho = 1;
  std::string lambda = "0";
  std::string D = "0";
  std::string B = "0";
  std::string c = "0";
  int eps = 0;
  std::string sign = "minus";
  std::string input_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "two-step | three-step | non-nilpotent | parallelizable");
    cmd->add_option("--rho", rho, "0 or 1");
    cmd->add_option("--lambda", lambda, "two-step lambda (rational >= 0)");
    cmd->add_option("--D", D, "two-step D (Gaussian rational, Im D >= 0)");
    cmd->add_option("--B", B, "three-step B (Gaussian rational)");
    cmd->add_option("--c", c, "three-step c (rational >= 0)");
    cmd->add_option("--eps", eps, "non-nilpotent eps (0 or 1)");
    cmd->add_option("--sign", sign, "non-nilpotent sign: plus | minus");
    cmd->add_option("--input", input_file,
                    "file in Salamon or complex-DSL notation");
  }
};

struct ResolvedInput {
  std::optional<classify::TwoStepTriple> two;
  std::optional<classify::ThreeStepTriple> three;
  std::optional<classify::ParallelizableStructure> para;
  std::optional<classify::NonNilpotentParams> nonnil;
  std::optional<StructureEquations> complex_eqs;
  std::optional<RealStructureEquations> real_eqs;
  std::string label;

  const StructureEquations& eqs() const {
    if (!complex_eqs)
      throw std::domain_error(
          "this command needs complex structure equations (a family or a "
          "complex-DSL input file)");
    return *complex_eqs;
  }
};

ResolvedInput resolve(const FamilyFlags& f) {
  ResolvedInput in;
  if (!f.input_file.empty()) {
    std::ifstream file(f.input_file);
    if (!file) throw std::domain_error("cannot read " + f.input_file);
    std::string text((std::istreambuf_iterator<char>(file)),
                     std::istreambuf_iterator<char>());
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
      throw parse::ParseError("empty input file", 0);
    if (text[first] == '(') {
      in.real_eqs = parse::parse_salamon(text);
      in.label = parse::print_salamon(*in.real_eqs);
    } else {
      in.complex_eqs = parse::parse_complex(text);
      in.label = parse::print_complex(*in.complex_eqs);
    }
    return in;
  }
  if (f.family == "two-step") {
    classify::TwoStepTriple t{f.rho, parse::parse_scalar(f.lambda),
                              parse::parse_scalar(f.D)};
    in.two = t;
    in.complex_eqs = classify::equations_of(t);
    in.label = "(" + std::to_string(t.rho) + ", " + to_string(t.lambda) +
               ", " + to_string(t.D) + ")";
  } else if (f.family == "three-step") {
    classify::ThreeStepTriple t{f.rho, parse::parse_scalar(f.B),
                                parse::parse_scalar(f.c)};
    in.three = t;
    in.complex_eqs = classify::equations_of(t);
    in.label = "(" + std::to_string(t.rho) + ", " + to_string(t.B) + ", " +
               to_string(t.c) + ")";
  } else if (f.family == "non-nilpotent") {
    classify::NonNilpotentParams t{
        f.eps, (f.sign == "plus" || f.sign == "+") ? +1 : -1};
    in.nonnil = t;
    in.complex_eqs = classify::equations_of(t);
    in.label = std::string("(eps=") + std::to_string(t.eps) +
               (t.sign > 0 ? ", +)" : ", -)");
  } else if (f.family == "parallelizable") {
    classify::ParallelizableStructure t{f.rho};
    in.para = t;
    in.complex_eqs = classify::equations_of(t);
    in.label = "(rho=" + std::to_string(t.rho) + ", parallelizable)";
  } else if (f.family.empty()) {
    throw std::domain_error("provide --family or --input");
  } else {
    throw std::domain_error("unknown family: " + f.family);
  }
  return in;
}

classify::AlgebraClass class_of(const ResolvedInput& in) {
  if (in.two) return classify::classify_2step(*in.two);
  if (in.three) return classify::classify_3step(*in.three);
  if (in.para) return classify::classify_parallelizable(*in.para);
  if (in.nonnil) return classify::classify_non_nilpotent(*in.nonnil);
  if (in.real_eqs) return classify::identify(*in.real_eqs);
  return classify::identify(in.eqs());
}

hermitian::HermitianParams parse_metric(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 6)
    throw parse::ParseError("--metric needs six values r2,s2,t2,u,v,z", 0);
  hermitian::HermitianParams p;
  p.r2 = parse::parse_scalar(parts[0]);
  p.s2 = parse::parse_scalar(parts[1]);
  p.t2 = parse::parse_scalar(parts[2]);
  p.u = parse::parse_scalar(parts[3]);
  p.v = parse::parse_scalar(parts[4]);
  p.z = parse::parse_scalar(parts[5]);
  return p;
}

std::vector<Scalar> parse_param_list(const std::string& text) {
  std::vector<Scalar> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(parse::parse_scalar(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse::parse_scalar(cur));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact classification, Frolicher spectral sequence and Hermitian "
      "metric analysis of invariant complex structures on 6-dimensional "
      "nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--output may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", g.output, "write to a file instead of stdout");

  FamilyFlags fc, fh, ff, fm;
  std::string metric;
  auto* c_classify = app.add_subcommand(
      "classify", "algebra class and canonical form of a structure");
  fc.attach(c_classify);
  auto* c_cohomology =
      app.add_subcommand("cohomology", "Hodge table and Betti numbers");
  fh.attach(c_cohomology);
  auto* c_frolicher = app.add_subcommand(
      "frolicher", "E_r dimension tables, behaviour, degeneration step");
  ff.attach(c_frolicher);
  auto* c_metrics = app.add_subcommand(
      "metrics", "balanced/Gauduchon/sG flags and existence with witness");
  fm.attach(c_metrics);
  c_metrics->add_option("--metric", metric,
                        "six values r2,s2,t2,u,v,z to test directly");

  std::string l1 = "0", d1 = "0", l2 = "0", d2 = "0";
  auto* c_equiv = app.add_subcommand(
      "equiv", "equivalence of two non-abelian two-step triples");
  c_equiv->add_option("--lambda1", l1, "first triple lambda");
  c_equiv->add_option("--D1", d1, "first triple D");
  c_equiv->add_option("--lambda2", l2, "second triple lambda");
  c_equiv->add_option("--D2", d2, "second triple D");

  std::string family_name, grid, params_list, lambda46 = "0";
  bool serial = false;
  auto* c_sweep = app.add_subcommand(
      "sweep", "evaluate a deformation family over a parameter grid");
  c_sweep->add_option("--family-name", family_name,
                      "h5_ex46 | h15_ex48 | h5_ex58_lambda | h5_ex58_x | "
                      "h4_thm59")
      ->required();
  c_sweep->add_option("--grid", grid, "rational grid lo:hi:step");
  c_sweep->add_option("--params", params_list,
                      "explicit comma-separated parameter list");
  c_sweep->add_option("--lambda46", lambda46, "fixed lambda of h5_ex46");
  c_sweep->add_flag("--serial", serial,
                    "use the serial reference implementation");

  std::string center, nearby, sc_family, sc_lambda46 = "0";
  auto* c_semicont = app.add_subcommand(
      "semicont", "compare E_r dimensions at a center parameter vs nearby");
  c_semicont->add_option("--family-name", sc_family, "deformation family")
      ->required();
  c_semicont->add_option("--center", center, "center parameter")->required();
  c_semicont->add_option("--nearby", nearby, "comma-separated parameters")
      ->required();
  c_semicont->add_option("--lambda46", sc_lambda46, "fixed lambda of h5_ex46");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  if (c_classify->parsed()) {
    ResolvedInput in = resolve(fc);
    auto cls = class_of(in);
    std::string canonical;
    if (in.two) {
      try {
        auto can = classify::canonical_form(*in.two);
        canonical = "(" + std::to_string(can.triple.rho) + ", " +
                    to_string(can.triple.lambda) + ", " +
                    to_string(can.triple.D) + ")";
      } catch (const ExactUnrepresentable&) {
        canonical = "not exactly representable";
      } catch (const UnsupportedCase&) {
        canonical = "outside the supported reductions";
      }
    } else if (in.three) {
      canonical = in.label;  // three-step triples are already canonical
    }
    if (g.format == "json") {
      json out{{"algebra_class", classify::to_string(cls)},
               {"triple", in.label}};
      if (!canonical.empty()) out["canonical_triple"] = canonical;
      emit_json(g, out);
    } else {
      std::string text = classify::to_string(cls) + "\n";
      if (!canonical.empty()) text += "canonical: " + canonical + "\n";
      emit(g, text);
    }
    return 0;
  }

  if (c_cohomology->parsed()) {
    ResolvedInput in = resolve(fh);
    auto table = cohomology::hodge_table(in.eqs());
    if (g.format == "json")
      emit_json(g, serialize::hodge_json(table));
    else if (g.format == "csv")
      emit(g, serialize::hodge_csv(table));
    else
      emit(g, serialize::hodge_text(table));
    return 0;
  }

  if (c_frolicher->parsed()) {
    ResolvedInput in = resolve(ff);
    spectral::SpectralSequence ss(in.eqs());
    std::string report;
    if (!ss.einfty_check(&report))
      throw InternalAlarm("E_infinity/Betti accounting failed: " + report);
    if (g.format == "json")
      emit_json(g, serialize::frolicher_json(ss));
    else if (g.format == "csv")
      emit(g, serialize::frolicher_csv(ss));
    else
      emit(g, serialize::frolicher_text(ss));
    return 0;
  }

  if (c_metrics->parsed()) {
    ResolvedInput in = resolve(fm);
    json out;
    std::string text;
    if (!metric.empty()) {
      auto flags = hermitian::metric_flags(in.eqs(), parse_metric(metric));
      out["flags"] = json{{"balanced", flags.balanced},
                          {"gauduchon", flags.gauduchon},
                          {"sg", flags.sg}};
      text += "balanced=" + std::to_string(flags.balanced) +
              " gauduchon=" + std::to_string(flags.gauduchon) +
              " sg=" + std::to_string(flags.sg) + "\n";
    }
    hermitian::Existence sg, balanced;
    bool decided = true;
    if (in.two) {
      sg = hermitian::sg_exists(*in.two);
      balanced = hermitian::balanced_exists(*in.two);
    } else if (in.three) {
      sg = hermitian::sg_exists(*in.three);
      balanced = hermitian::balanced_exists(*in.three);
    } else if (in.para) {
      sg = hermitian::sg_exists(*in.para);
      balanced = hermitian::balanced_exists(*in.para);
    } else if (in.nonnil) {
      sg = hermitian::sg_exists(*in.nonnil);
      balanced = hermitian::balanced_exists(*in.nonnil);
    } else {
      decided = false;
    }
    if (decided) {
      out["metrics"] = serialize::metrics_json(sg, balanced);
      text += std::string("sg-exists: ") + (sg.exists ? "yes" : "no") + "\n";
      text += std::string("balanced-exists: ") +
              (balanced.exists ? "yes" : "no") + "\n";
      const auto& witness = balanced.witness ? balanced.witness : sg.witness;
      if (witness)
        text += "witness: " + serialize::witness_text(*witness) + "\n";
    }
    if (g.format == "json")
      emit_json(g, out);
    else
      emit(g, text);
    return 0;
  }

  if (c_equiv->parsed()) {
    classify::TwoStepTriple a{1, parse::parse_scalar(l1),
                              parse::parse_scalar(d1)};
    classify::TwoStepTriple b{1, parse::parse_scalar(l2),
                              parse::parse_scalar(d2)};
    bool eq = classify::equivalent_2step(a, b);
    json out{{"equivalent", eq}};
    std::string text = eq ? "equivalent\n" : "not equivalent\n";
    if (eq && !a.D.is_zero()) {
      auto wit = classify::automorphism_witness(a, b);
      out["witness"] = json{{"a", to_string(wit.a)}, {"b", to_string(wit.b)},
                            {"c", to_string(wit.c)}, {"e", to_string(wit.e)},
                            {"f", to_string(wit.f)}};
      text += "witness: a=" + to_string(wit.a) + " b=" + to_string(wit.b) +
              " c=" + to_string(wit.c) + " e=" + to_string(wit.e) +
              " f=" + to_string(wit.f) + "\n";
    }
    if (g.format == "json")
      emit_json(g, out);
    else
      emit(g, text);
    return 0;
  }

  if (c_sweep->parsed()) {
    deform::Family fam{deform::family_from_name(family_name),
                       parse::parse_rational(lambda46)};
    std::vector<Scalar> params;
    if (!grid.empty())
      for (const auto& r : parse::parse_grid(grid)) params.emplace_back(r);
    for (const auto& s : parse_param_list(params_list)) params.push_back(s);
    if (params.empty())
      throw std::domain_error("sweep: provide --grid or --params");
    auto rows =
        serial ? deform::sweep(fam, params) : deform::sweep_parallel(fam, params);
    if (g.format == "json")
      emit_json(g, serialize::sweep_json(rows));
    else if (g.format == "csv")
      emit(g, serialize::sweep_csv(rows));
    else
      emit(g, serialize::sweep_text(rows));
    for (const auto& row : rows)
      if (row.failed && row.error.rfind("internal alarm:", 0) == 0)
        throw InternalAlarm(row.error);
    return 0;
  }

  if (c_semicont->parsed()) {
    deform::Family fam{deform::family_from_name(sc_family),
                       parse::parse_rational(sc_lambda46)};
    auto report = deform::semicontinuity_report(
        fam, parse::parse_scalar(center), parse_param_list(nearby));
    if (g.format == "json")
      emit_json(g, serialize::semicont_json(report));
    else if (g.format == "csv")
      emit(g, serialize::semicont_csv(report));
    else
      emit(g, serialize::semicont_text(report));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InternalAlarm& e) {
    std::cerr << "internal consistency alarm: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
