#include "nilcx/spectral.hpp"

#include <sstream>

namespace nilcx {
namespace spectral {

using linalg::LinearMap;
using linalg::Mat;
using linalg::SubspaceBasis;
using linalg::Vec;

SpectralSequence::SpectralSequence(StructureEquations eqs)
    : eqs_(std::move(eqs)), n_(eqs_.n) {
  auto rep = check_integrability(eqs_);
  if (!rep.ok)
    throw std::domain_error("SpectralSequence: structure is not integrable");
  d_.reserve(2 * n_ + 1);
  for (int k = 0; k <= 2 * n_; ++k) d_.push_back(cohomology::d_matrix(eqs_, k));
}

SubspaceBasis SpectralSequence::filtration(int p, int k) const {
  if (k < 0 || k > 2 * n_) return SubspaceBasis::zero(0);
  auto basis = degree_basis(n_, k);
  int dim = static_cast<int>(basis.size());
  // degree_basis sorts by holomorphic degree descending, so F^p is a
  // coordinate prefix.
  int count = 0;
  while (count < dim && basis[count].p() >= p) ++count;
  Mat rows(count, Vec(dim));
  for (int i = 0; i < count; ++i) rows[i][i] = Scalar(1);
  return {dim, std::move(rows)};
}

const SubspaceBasis& SpectralSequence::z_space(int s, int a, int k) {
  auto key = std::make_tuple(s, a, k);
  auto it = z_memo_.find(key);
  if (it != z_memo_.end()) return it->second;
  SubspaceBasis z = SubspaceBasis::zero(0);
  if (k >= 0 && k <= 2 * n_) {
    // F^p is a coordinate prefix, so "v in F^a and d v in F^{a+s}" is one
    // kernel problem: the tail coordinates of v and of d v must vanish.
    int dim_k = static_cast<int>(degree_basis(n_, k).size());
    int head_v = filtration(a, k).rank();
    int head_dv = k < 2 * n_ ? filtration(a + s, k + 1).rank() : 0;
    int dim_k1 = k < 2 * n_ ? d_[k].codomain_dim : 0;
    LinearMap constraints =
        LinearMap::zero(dim_k, (dim_k - head_v) + (dim_k1 - head_dv));
    int row = 0;
    for (int i = head_v; i < dim_k; ++i, ++row)
      constraints.matrix[row][i] = Scalar(1);
    for (int i = head_dv; i < dim_k1; ++i, ++row)
      constraints.matrix[row] = d_[k].matrix[i];
    z = linalg::kernel(constraints);
  }
  return z_memo_.emplace(key, std::move(z)).first->second;
}

SubspaceBasis SpectralSequence::b_space(int r, int p, int q) {
  auto key = std::make_tuple(r, p, q);
  auto it = b_memo_.find(key);
  if (it != b_memo_.end()) return it->second;
  int k = p + q;
  SubspaceBasis b = z_space(r - 1, p + 1, k);
  if (k >= 1) {
    const SubspaceBasis& zd = z_space(r - 1, p - r + 1, k - 1);
    b = linalg::sum(b, linalg::map_subspace(d_[k - 1], zd));
  }
  return b_memo_.emplace(key, std::move(b)).first->second;
}

const SpectralTerm& SpectralSequence::term(int r) {
  auto it = terms_.find(r);
  if (it != terms_.end()) return it->second;
  if (r < 0) throw std::domain_error("er_term: r must be >= 0");

  SpectralTerm t;
  t.r = r;
  t.dims.assign(n_ + 1, std::vector<int>(n_ + 1, 0));
  t.reps.assign(n_ + 1, std::vector<SubspaceBasis>(n_ + 1));
  for (int p = 0; p <= n_; ++p)
    for (int q = 0; q <= n_; ++q) {
      int k = p + q;
      if (r == 0) {
        // E_0^{p,q} = F^p / F^{p+1}
        SubspaceBasis zp = filtration(p, k);
        t.reps[p][q] = linalg::quotient_representatives(zp, filtration(p + 1, k));
        t.dims[p][q] = t.reps[p][q].rank();
        continue;
      }
      const SubspaceBasis& z = z_space(r, p, k);
      SubspaceBasis b = b_space(r, p, q);
      if (linalg::sum(b, z) != z)
        throw InternalAlarm("spectral: boundaries escape cycles");
      t.reps[p][q] = linalg::quotient_representatives(z, b);
      t.dims[p][q] = z.rank() - b.rank();
      if (t.dims[p][q] != t.reps[p][q].rank())
        throw InternalAlarm("spectral: representative count mismatch");
    }
  return terms_.emplace(r, std::move(t)).first->second;
}

LinearMap SpectralSequence::dr_map(int r, int p, int q) {
  if (r < 1) throw std::domain_error("dr_map: r must be >= 1");
  int k = p + q;
  int tp = p + r, tq = q - r + 1;
  const SpectralTerm& page = term(r);
  auto in_range = [&](int a, int b) {
    return a >= 0 && a <= n_ && b >= 0 && b <= n_;
  };
  int src_dim = in_range(p, q) ? page.dims[p][q] : 0;
  int tgt_dim = in_range(tp, tq) ? page.dims[tp][tq] : 0;
  LinearMap m = LinearMap::zero(src_dim, tgt_dim);
  if (src_dim == 0 || k >= 2 * n_) return m;
  if (tgt_dim == 0) {
    // Still check d Z_r lands in B-material of the (empty) target so that
    // the induced map is genuinely zero.
    for (const auto& row : page.reps[p][q].rows) {
      Vec dv = d_[k].apply(row);
      if (!linalg::member(dv, b_space(r, tp, tq)))
        throw InternalAlarm("dr_map: nonzero image in a zero target cell");
    }
    return m;
  }

  SubspaceBasis tgt_b = b_space(r, tp, tq);
  // Well-definedness: d maps source boundaries into target boundaries.
  for (const auto& row : b_space(r, p, q).rows)
    if (!linalg::member(d_[k].apply(row), tgt_b))
      throw InternalAlarm("dr_map: representative-dependent image");

  const SubspaceBasis& tgt_reps = page.reps[tp][tq];
  int amb = tgt_b.ambient_dim;
  LinearMap expand = LinearMap::zero(tgt_dim + tgt_b.rank(), amb);
  for (int c = 0; c < tgt_dim; ++c)
    for (int i = 0; i < amb; ++i) expand.matrix[i][c] = tgt_reps.rows[c][i];
  for (int c = 0; c < tgt_b.rank(); ++c)
    for (int i = 0; i < amb; ++i)
      expand.matrix[i][tgt_dim + c] = tgt_b.rows[c][i];

  for (int j = 0; j < src_dim; ++j) {
    Vec dv = d_[k].apply(page.reps[p][q].rows[j]);
    auto sol = linalg::solve(expand, dv);
    if (!sol) throw InternalAlarm("dr_map: image outside Z_r of the target");
    for (int i = 0; i < tgt_dim; ++i) m.matrix[i][j] = (*sol)[i];
  }
  return m;
}

const SpectralTerm& SpectralSequence::einfty() {
  const SpectralTerm& e4 = term(n_ + 1);
  if (term(n_ + 2).dims != e4.dims)
    throw InternalAlarm("spectral: dims not stable at r = n + 1");
  return e4;
}

Behaviour SpectralSequence::behaviour() {
  const SpectralTerm& inf = einfty();
  int step = n_ + 1;
  while (step > 1 && term(step - 1).dims == inf.dims) --step;
  Behaviour b;
  b.degeneration_step = step;
  if (step == 1) {
    b.signature = "E1≅E∞";
    return b;
  }
  std::ostringstream os;
  os << "E1";
  for (int r = 2; r <= step; ++r)
    os << (term(r - 1).dims == term(r).dims ? "≅" : "≇") << "E" << r;
  os << "≅E∞";
  b.signature = os.str();
  return b;
}

bool SpectralSequence::einfty_check(std::string* report) {
  const SpectralTerm& inf = einfty();
  bool ok = true;
  std::ostringstream os;
  for (int k = 0; k <= 2 * n_; ++k) {
    int bk = linalg::kernel(d_[k]).rank() -
             (k > 0 ? linalg::rank(d_[k - 1]) : 0);
    if (inf.total(k) != bk) {
      ok = false;
      os << "degree " << k << ": sum dim E_inf = " << inf.total(k)
         << " but b_" << k << " = " << bk << "; ";
    }
  }
  if (!ok && report) *report = os.str();
  return ok;
}

SpectralTerm er_term(const StructureEquations& eqs, int r) {
  SpectralSequence ss(eqs);
  return ss.term(r);
}

LinearMap dr_map(const StructureEquations& eqs, int r, int p, int q) {
  SpectralSequence ss(eqs);
  return ss.dr_map(r, p, q);
}

Behaviour behaviour(const StructureEquations& eqs) {
  SpectralSequence ss(eqs);
  return ss.behaviour();
}

bool einfty_check(const StructureEquations& eqs, std::string* report) {
  SpectralSequence ss(eqs);
  return ss.einfty_check(report);
}

}  // namespace spectral
}  // namespace nilcx
