#include "nilcx/serialize.hpp"

#include <sstream>

namespace nilcx {
namespace serialize {

namespace {

json dims_json(const std::vector<std::vector<int>>& dims) {
  json out = json::array();
  for (const auto& row : dims) out.push_back(row);
  return out;
}

std::string dims_text(const std::vector<std::vector<int>>& dims,
                      const std::string& name) {
  std::ostringstream os;
  os << name << " (rows p = 0..3, columns q = 0..3):\n";
  for (const auto& row : dims) {
    os << "  ";
    for (int v : row) os << v << " ";
    os << "\n";
  }
  return os.str();
}

}  // namespace

json hodge_json(const cohomology::HodgeTable& t) {
  json h = json::array();
  for (int p = 0; p <= 3; ++p) {
    json row = json::array();
    for (int q = 0; q <= 3; ++q) row.push_back(t.h[p][q]);
    h.push_back(row);
  }
  json b = json::array();
  for (int k = 0; k <= 6; ++k) b.push_back(t.betti[k]);
  return json{{"hodge", h}, {"betti", b}};
}

json frolicher_json(spectral::SpectralSequence& ss) {
  json pages;
  for (int r = 1; r <= 4; ++r)
    pages["E" + std::to_string(r)] = dims_json(ss.term(r).dims);
  auto b = ss.behaviour();
  return json{{"frolicher", pages},
              {"behaviour", b.signature},
              {"degeneration_step", b.degeneration_step}};
}

json witness_json(const hermitian::HermitianParams& p) {
  return json{{"r2", to_string(p.r2)}, {"s2", to_string(p.s2)},
              {"t2", to_string(p.t2)}, {"u", to_string(p.u)},
              {"v", to_string(p.v)},   {"z", to_string(p.z)}};
}

json metrics_json(const hermitian::Existence& sg,
                  const hermitian::Existence& balanced) {
  json m{{"sg_exists", sg.exists}, {"balanced_exists", balanced.exists}};
  if (balanced.witness)
    m["witness"] = witness_json(*balanced.witness);
  else if (sg.witness)
    m["witness"] = witness_json(*sg.witness);
  else
    m["witness"] = nullptr;
  return m;
}

json sweep_json(const std::vector<deform::SweepRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r{{"param", to_string(row.param)},
           {"triple", row.triple},
           {"failed", row.failed}};
    if (row.failed) {
      r["error"] = row.error;
    } else {
      r["algebra_class"] = classify::to_string(row.cls);
      json pages;
      for (int k = 1; k <= 4; ++k)
        pages["E" + std::to_string(k)] = dims_json(row.er_dims[k - 1]);
      r["frolicher"] = pages;
      r["behaviour"] = row.behaviour;
      r["degeneration_step"] = row.degeneration_step;
      r["metrics"] = json{{"sg_exists", row.sg},
                          {"balanced_exists", row.balanced},
                          {"witness", nullptr}};
    }
    out.push_back(std::move(r));
  }
  return json{{"rows", out}};
}

json semicont_json(const deform::SemicontReport& report) {
  json jumps = json::array();
  for (const auto& j : report.jumps)
    jumps.push_back(json{{"r", j.r},
                         {"p", j.p},
                         {"q", j.q},
                         {"center_dim", j.center_dim},
                         {"nearby_dims", j.nearby_dims},
                         {"kind", j.upper ? "upper" : "lower"}});
  json nearby = json::array();
  for (const auto& p : report.nearby) nearby.push_back(to_string(p));
  return json{{"center", to_string(report.center)},
              {"nearby", nearby},
              {"jumps", jumps}};
}

std::string hodge_text(const cohomology::HodgeTable& t) {
  std::ostringstream os;
  os << "Hodge numbers h^{p,q} (rows p = 0..3, columns q = 0..3):\n";
  for (int p = 0; p <= 3; ++p) {
    os << "  ";
    for (int q = 0; q <= 3; ++q) os << t.h[p][q] << " ";
    os << "\n";
  }
  os << "Betti numbers b_0..b_6: ";
  for (int k = 0; k <= 6; ++k) os << t.betti[k] << " ";
  os << "\n";
  return os.str();
}

std::string frolicher_text(spectral::SpectralSequence& ss) {
  std::ostringstream os;
  for (int r = 1; r <= 4; ++r)
    os << dims_text(ss.term(r).dims, "E_" + std::to_string(r));
  auto b = ss.behaviour();
  os << "behaviour: " << b.signature << "\n";
  os << "degeneration step: " << b.degeneration_step << "\n";
  return os.str();
}

std::string witness_text(const hermitian::HermitianParams& p) {
  std::ostringstream os;
  os << "r2=" << to_string(p.r2) << " s2=" << to_string(p.s2)
     << " t2=" << to_string(p.t2) << " u=" << to_string(p.u)
     << " v=" << to_string(p.v) << " z=" << to_string(p.z);
  return os.str();
}

std::string sweep_text(const std::vector<deform::SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "param=" << to_string(row.param);
    if (row.failed) {
      os << "  FAILED: " << row.error << "\n";
      continue;
    }
    os << "  triple=" << row.triple
       << "  class=" << classify::to_string(row.cls)
       << "  behaviour=" << row.behaviour
       << "  step=" << row.degeneration_step << "  sg=" << (row.sg ? 1 : 0)
       << "  balanced=" << (row.balanced ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string semicont_text(const deform::SemicontReport& report) {
  std::ostringstream os;
  os << "center=" << to_string(report.center) << " nearby=";
  for (const auto& p : report.nearby) os << to_string(p) << " ";
  os << "\n";
  if (report.jumps.empty()) {
    os << "no jumps\n";
    return os.str();
  }
  for (const auto& j : report.jumps) {
    os << "E_" << j.r << "^{" << j.p << "," << j.q
       << "}: center=" << j.center_dim << " nearby=";
    for (int v : j.nearby_dims) os << v << " ";
    os << (j.upper ? "(upper jump)" : "(lower jump)") << "\n";
  }
  return os.str();
}

std::string sweep_csv(const std::vector<deform::SweepRow>& rows) {
  std::ostringstream os;
  os << "param,triple,class,behaviour,degeneration_step,sg,balanced,failed";
  for (int r = 1; r <= 4; ++r)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) os << ",E" << r << "_" << p << q;
  os << "\n";
  for (const auto& row : rows) {
    os << to_string(row.param) << ",\"" << row.triple << "\",";
    if (row.failed) {
      os << ",,,,," << "1";
      for (int i = 0; i < 64; ++i) os << ",";
      os << "\n";
      continue;
    }
    os << classify::to_string(row.cls) << "," << row.behaviour << ","
       << row.degeneration_step << "," << (row.sg ? 1 : 0) << ","
       << (row.balanced ? 1 : 0) << ",0";
    for (int r = 1; r <= 4; ++r)
      for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) os << "," << row.er_dims[r - 1][p][q];
    os << "\n";
  }
  return os.str();
}

std::string hodge_csv(const cohomology::HodgeTable& t) {
  std::ostringstream os;
  os << "p,q,h\n";
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      os << p << "," << q << "," << t.h[p][q] << "\n";
  for (int k = 0; k <= 6; ++k) os << "b," << k << "," << t.betti[k] << "\n";
  return os.str();
}

std::string frolicher_csv(spectral::SpectralSequence& ss) {
  std::ostringstream os;
  os << "r,p,q,dim\n";
  for (int r = 1; r <= 4; ++r) {
    const auto& dims = ss.term(r).dims;
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        os << r << "," << p << "," << q << "," << dims[p][q] << "\n";
  }
  return os.str();
}

std::string semicont_csv(const deform::SemicontReport& report) {
  std::ostringstream os;
  os << "r,p,q,center_dim,kind\n";
  for (const auto& j : report.jumps)
    os << j.r << "," << j.p << "," << j.q << "," << j.center_dim << ","
       << (j.upper ? "upper" : "lower") << "\n";
  return os.str();
}

}  // namespace serialize
}  // namespace nilcx
