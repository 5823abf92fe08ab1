// Timings of the OpenMP kernels against their serial reference paths.

#include <chrono>
#include <cstdio>

#include "bnzero/distance.hpp"
#include "bnzero/psi_kernel.hpp"

using namespace bnzero;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  const PhiProfile power = PhiProfile::power(0.3);
  const SeriesSpec zeta = SeriesSpec::zeta();

  PsiNormSettings serial_cfg, parallel_cfg;
  serial_cfg.parallel = false;
  parallel_cfg.parallel = true;

  double serial_norm = 0.0, parallel_norm = 0.0;
  const double t_norm_serial =
      time_ms([&] { serial_norm = psi_norm(zeta, power, 0.45, serial_cfg).norm_sq; });
  const double t_norm_parallel =
      time_ms([&] { parallel_norm = psi_norm(zeta, power, 0.45, parallel_cfg).norm_sq; });

  std::printf("psi_norm (k_max=%lld, sigma1=0.3, r=0.45)\n",
              static_cast<long long>(serial_cfg.k_max));
  std::printf("  serial   %8.1f ms   norm_sq = %.15g\n", t_norm_serial, serial_norm);
  std::printf("  parallel %8.1f ms   norm_sq = %.15g\n", t_norm_parallel, parallel_norm);
  std::printf("  bit-identical: %s   speedup: %.2fx\n",
              serial_norm == parallel_norm ? "yes" : "NO", t_norm_serial / t_norm_parallel);

  std::vector<double> alphas = {0.25, 0.5, 0.75, 1.0};
  std::vector<AdmissibleSequence> gens;
  for (size_t k = 0; k + 1 < alphas.size(); ++k) {
    gens.push_back(AdmissibleSequence::construct({alphas[k], alphas[k + 1]}, 1));
  }

  FamilyQuadConfig serial_q, parallel_q;
  serial_q.parallel = false;
  parallel_q.parallel = true;
  GeneratorFamily fam_serial(zeta, power, 0.45, gens, serial_q);
  GeneratorFamily fam_parallel(zeta, power, 0.45, gens, parallel_q);

  double d_serial = 0.0, d_parallel = 0.0;
  const double t_dist_serial =
      time_ms([&] { d_serial = distance(fam_serial, Complex(0.5, 1.0)).d_sq; });
  const double t_dist_parallel =
      time_ms([&] { d_parallel = distance(fam_parallel, Complex(0.5, 1.0)).d_sq; });

  std::printf("distance (3 generators, power profile)\n");
  std::printf("  serial   %8.1f ms   d_sq = %.15g\n", t_dist_serial, d_serial);
  std::printf("  parallel %8.1f ms   d_sq = %.15g\n", t_dist_parallel, d_parallel);
  std::printf("  bit-identical: %s   speedup: %.2fx\n", d_serial == d_parallel ? "yes" : "NO",
              t_dist_serial / t_dist_parallel);
  return 0;
}
