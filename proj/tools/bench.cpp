// Compares the serial reference sweep against the OpenMP row evaluation on
// a family grid and checks that both produce identical rows.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "nilcx/deform.hpp"

using namespace nilcx;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool rows_equal(const std::vector<deform::SweepRow>& a,
                const std::vector<deform::SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].param != b[i].param || a[i].triple != b[i].triple ||
        a[i].behaviour != b[i].behaviour || a[i].er_dims != b[i].er_dims ||
        a[i].sg != b[i].sg || a[i].balanced != b[i].balanced ||
        a[i].failed != b[i].failed)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int points = 33;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--points") == 0 && i + 1 < argc)
      points = std::atoi(argv[i + 1]);

  deform::Family fam{deform::FamilyTag::h15_ex48, 0};
  std::vector<Scalar> params;
  for (int i = 0; i < points; ++i)
    params.emplace_back(Rational(2 * i - (points - 1), points - 1 + (points == 1)));

  auto t0 = Clock::now();
  auto serial = deform::sweep(fam, params);
  auto t1 = Clock::now();
  auto parallel = deform::sweep_parallel(fam, params);
  auto t2 = Clock::now();

  double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("rows: %d\n", points);
  std::printf("serial reference: %.3f s\n", ts);
  std::printf("parallel sweep:   %.3f s\n", tp);
  std::printf("speedup:          %.2fx\n", tp > 0 ? ts / tp : 0.0);
#ifdef NILCX_HAVE_OPENMP
  std::printf("openmp: enabled\n");
#else
  std::printf("openmp: not available (parallel path ran serially)\n");
#endif
  if (!rows_equal(serial, parallel)) {
    std::printf("MISMATCH: parallel sweep differs from the reference\n");
    return 1;
  }
  std::printf("outputs identical\n");
  return 0;
}
