// Benchmark comparing the serial reference sweeps against the OpenMP
// path on the two heaviest corpus loops: the inert-active factorization
// uniqueness sweep and the lifting-property oracles.  Both paths must
// produce identical results; the timings quantify the speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#include "corpus.hpp"
#include "fincat.hpp"
#include "gammaskel.hpp"
#include "sweep.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<gammaskel::BasedMap> all_maps(int bound) {
  std::vector<gammaskel::BasedMap> maps;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (auto& f : gammaskel::enumerate_based_maps(n, m)) maps.push_back(std::move(f));
  return maps;
}

std::vector<long> factorization_sweep(const std::vector<gammaskel::BasedMap>& maps, sweep::Mode mode) {
  return sweep::failing_indices(static_cast<long>(maps.size()), mode, [&](long i) {
    const auto& f = maps[static_cast<size_t>(i)];
    const auto fact = gammaskel::factor_inert_active(f);
    if (!(gammaskel::compose(fact.active, fact.inert) == f)) return false;
    int count = 0;
    for (int a = 0; a <= f.dom; ++a)
      for (const auto& u : gammaskel::enumerate_based_maps(f.dom, a)) {
        if (!gammaskel::is_inert(u)) continue;
        for (const auto& v : gammaskel::enumerate_based_maps(a, f.cod))
          if (gammaskel::is_active(v) && gammaskel::compose(v, u) == f) ++count;
      }
    return count == 1;
  });
}

std::pair<std::vector<long>, std::vector<long>> lifting_sweep(const std::vector<fincat::Functor>& fs,
                                                              bool parallel) {
  const auto oracle = corpus::rlp_oracle(fs, parallel);
  return {oracle.iso_disagreements, oracle.acyclic_disagreements};
}

}  // namespace

int main() {
  std::printf("openmp: %s\n", sweep::openmp_enabled() ? "enabled" : "disabled (serial only)");

  const auto maps = all_maps(4);
  auto t0 = Clock::now();
  const auto fs_serial = factorization_sweep(maps, sweep::Mode::Serial);
  const double fact_serial = seconds_since(t0);
  t0 = Clock::now();
  const auto fs_parallel = factorization_sweep(maps, sweep::Mode::Parallel);
  const double fact_parallel = seconds_since(t0);
  std::printf("factorization sweep over %zu maps: serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
              maps.size(), fact_serial, fact_parallel,
              fact_parallel > 0 ? fact_serial / fact_parallel : 0.0,
              fs_serial == fs_parallel ? "results identical" : "RESULTS DIFFER");

  std::vector<fincat::Functor> functors;
  for (const auto& a : corpus::lifting_base_categories())
    for (const auto& b : corpus::lifting_base_categories())
      for (auto& f : fincat::enumerate_functors(a, b)) functors.push_back(std::move(f));
  for (auto& f : corpus::random_functors(200, 42)) functors.push_back(std::move(f));
  t0 = Clock::now();
  const auto ls = lifting_sweep(functors, false);
  const double lift_serial = seconds_since(t0);
  t0 = Clock::now();
  const auto lp = lifting_sweep(functors, true);
  const double lift_parallel = seconds_since(t0);
  std::printf("lifting oracles over %zu functors: serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
              functors.size(), lift_serial, lift_parallel,
              lift_parallel > 0 ? lift_serial / lift_parallel : 0.0,
              ls == lp ? "results identical" : "RESULTS DIFFER");

  const bool ok = fs_serial == fs_parallel && ls == lp && fs_serial.empty() &&
                  ls.first.empty() && ls.second.empty();
  return ok ? 0 : 1;
}
