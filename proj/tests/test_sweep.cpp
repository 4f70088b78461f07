#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "gammaskel.hpp"
#include "sweep.hpp"

TEST_CASE("parallel sweeps agree with the serial reference") {
  auto square = [](long i) { return i * i; };
  auto a = sweep::map_indexed<long>(1000, sweep::Mode::Serial, square);
  auto b = sweep::map_indexed<long>(1000, sweep::Mode::Parallel, square);
  CHECK(a == b);
}

TEST_CASE("failing indices preserve order under both modes") {
  auto pred = [](long i) { return i % 7 != 3; };
  auto a = sweep::failing_indices(200, sweep::Mode::Serial, pred);
  auto b = sweep::failing_indices(200, sweep::Mode::Parallel, pred);
  CHECK(a == b);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
}

TEST_CASE("exceptions propagate out of parallel regions") {
  auto boom = [](long i) -> int {
    if (i == 57) throw std::runtime_error("57");
    return 0;
  };
  CHECK_THROWS_AS(sweep::map_indexed<int>(100, sweep::Mode::Parallel, boom), std::runtime_error);
}

TEST_CASE("a real corpus sweep is mode-independent") {
  std::vector<gammaskel::BasedMap> maps;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (auto& f : gammaskel::enumerate_based_maps(n, m)) maps.push_back(std::move(f));
  auto run = [&](sweep::Mode mode) {
    return sweep::failing_indices(static_cast<long>(maps.size()), mode, [&](long i) {
      const auto& f = maps[static_cast<size_t>(i)];
      const auto fact = gammaskel::factor_inert_active(f);
      return gammaskel::compose(fact.active, fact.inert) == f;
    });
  };
  CHECK(run(sweep::Mode::Serial) == run(sweep::Mode::Parallel));
  CHECK(run(sweep::Mode::Serial).empty());
}
