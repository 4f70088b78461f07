#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammaskel.hpp"

using namespace gammaskel;

TEST_CASE("based map enumeration counts (m+1)^n") {
  CHECK(enumerate_based_maps(1, 1).size() == 2);
  CHECK(enumerate_based_maps(0, 5).size() == 1);
  CHECK(enumerate_based_maps(2, 2).size() == 9);
  CHECK(enumerate_based_maps(4, 4).size() == 625);
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  auto maps = enumerate_based_maps(3, 2);
  for (size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1] < maps[i]);
}

TEST_CASE("support") {
  BasedMap f(3, 2, {0, 1, 1});
  auto s = support(f);
  CHECK(s.elements == std::vector<int>{2, 3});
  CHECK(support(BasedMap::identity(4)).elements == std::vector<int>{1, 2, 3, 4});
  CHECK(support(BasedMap::zero(3, 2)).elements.empty());
}

TEST_CASE("inert-active factorization of the worked example") {
  BasedMap f(3, 2, {0, 1, 1});
  auto [inert, active] = factor_inert_active(f);
  CHECK(inert == BasedMap(3, 2, {0, 1, 2}));
  CHECK(active == BasedMap(2, 2, {1, 1}));
  CHECK(compose(active, inert) == f);
}

TEST_CASE("identity and zero map factor trivially") {
  auto idf = factor_inert_active(BasedMap::identity(3));
  CHECK(idf.inert == BasedMap::identity(3));
  CHECK(idf.active == BasedMap::identity(3));
  auto z = factor_inert_active(BasedMap::zero(3, 2));
  CHECK(z.inert == BasedMap(3, 0, {0, 0, 0}));
  CHECK(z.active == BasedMap(0, 2, {}));
}

// Oracle: factorization recomposes, parts have the right shape, and no
// other inert-active pair composes to f.
TEST_CASE("factorization is unique for all maps with n,m <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& f : enumerate_based_maps(n, m)) {
        auto [inert, active] = factor_inert_active(f);
        REQUIRE(is_inert(inert));
        REQUIRE(is_active(active));
        REQUIRE(compose(active, inert) == f);
        int count = 0;
        for (int a = 0; a <= n; ++a)
          for (const auto& u : enumerate_based_maps(n, a)) {
            if (!is_inert(u)) continue;
            for (const auto& v : enumerate_based_maps(a, m)) {
              if (!is_active(v)) continue;
              if (compose(v, u) == f) ++count;
            }
          }
        REQUIRE(count == 1);
      }
}

TEST_CASE("structural maps") {
  CHECK(delta_left(1, 1) == BasedMap(2, 1, {1, 0}));
  CHECK(delta_right(1, 1) == BasedMap(2, 1, {0, 1}));
  CHECK(multiplication(3) == BasedMap(3, 1, {1, 1, 1}));
  CHECK(smash_object(2, 2) == 4);
  // smash of identities is the identity
  CHECK(smash_map(BasedMap::identity(2), BasedMap::identity(3)) == BasedMap::identity(6));
}

TEST_CASE("block symmetry identities") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const BasedMap tau = active_lift(symmetry_N(k, l));
      CHECK(compose(delta_right(l, k), tau) == delta_left(k, l));
      CHECK(compose(delta_left(l, k), tau) == delta_right(k, l));
    }
}

TEST_CASE("smash is strictly associative and unital on objects") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      CHECK(smash_object(n, 1) == n);
      CHECK(smash_object(1, m) == m);
      for (int p = 0; p <= 3; ++p)
        CHECK(smash_object(smash_object(n, m), p) == smash_object(n, smash_object(m, p)));
    }
  // and on maps: (f^g)^h = f^(g^h) under the fixed identification
  BasedMap f(2, 1, {1, 0}), g(1, 2, {2}), h(2, 2, {2, 2});
  CHECK(smash_map(smash_map(f, g), h) == smash_map(f, smash_map(g, h)));
}

TEST_CASE("text form") {
  CHECK(to_text(BasedMap(3, 2, {0, 1, 1})) == "f: 3->2 [0,1,1]");
}
