// Acceptance suite: every exit criterion of the toolkit, one pass/fail
// line per criterion, with the stated runtime ceilings asserted.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "corpus.hpp"
#include "freeperm.hpp"
#include "leinster.hpp"
#include "segalnerve.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int k, bool ok, const char* what, double secs) {
  std::printf("ACCEPTANCE %2d: %s  %s (%.2fs)\n", k, ok ? "PASS" : "FAIL", what, secs);
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("1: inert-active factorization, unique, under one second") {
  const auto t0 = Clock::now();
  long total = 0;
  bool ok = true;
  for (int n = 0; n <= 4 && ok; ++n)
    for (int m = 0; m <= 4 && ok; ++m)
      for (const auto& f : gammaskel::enumerate_based_maps(n, m)) {
        ++total;
        const auto fact = gammaskel::factor_inert_active(f);
        if (!(gammaskel::compose(fact.active, fact.inert) == f) ||
            !gammaskel::is_inert(fact.inert) || !gammaskel::is_active(fact.active)) {
          ok = false;
          break;
        }
        int count = 0;
        for (int a = 0; a <= n; ++a)
          for (const auto& u : gammaskel::enumerate_based_maps(n, a)) {
            if (!gammaskel::is_inert(u)) continue;
            for (const auto& v : gammaskel::enumerate_based_maps(a, m))
              if (gammaskel::is_active(v) && gammaskel::compose(v, u) == f) ++count;
          }
        if (count != 1) {
          ok = false;
          break;
        }
      }
  const double secs = seconds_since(t0);
  CHECK(total >= 625);
  CHECK(ok);
  CHECK(secs < 1.0);
  line(1, ok && secs < 1.0, "inert-active factorization unique on all maps with n,m <= 4", secs);
}

TEST_CASE("2: lifting oracles with zero disagreements, under thirty seconds") {
  const auto t0 = Clock::now();
  std::vector<fincat::Functor> functors;
  for (const auto& a : corpus::lifting_base_categories())
    for (const auto& b : corpus::lifting_base_categories())
      for (auto& f : fincat::enumerate_functors(a, b)) functors.push_back(std::move(f));
  for (auto& f : corpus::random_functors(200, 42)) functors.push_back(std::move(f));
  const auto oracle = corpus::rlp_oracle(functors, true);
  const double secs = seconds_since(t0);
  CHECK(functors.size() > 200);
  CHECK(oracle.iso_disagreements.empty());
  CHECK(oracle.acyclic_disagreements.empty());
  CHECK(secs < 30.0);
  const bool ok =
      oracle.iso_disagreements.empty() && oracle.acyclic_disagreements.empty() && secs < 30.0;
  line(2, ok, "lifting-property oracles agree on the whole functor corpus", secs);
}

TEST_CASE("3: Grothendieck fragments over representables are permutative") {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 0; n <= 2; ++n) {
    auto lein = leinster::build_leinster(2, 2, 2);
    auto gn = gammacat::representable_gamma(n, 2);
    auto ext = leinster::sm_extension(gn, lein);
    auto groth = leinster::grothendieck_perm(ext);
    const auto r = permcat::check_permutative(*groth.cat);
    if (!r.ok()) ok = false;
    // gamma is an involution everywhere it is defined
    for (fincat::Id a = 0; a < groth.cat->nob() && ok; ++a)
      for (fincat::Id b = 0; b < groth.cat->nob() && ok; ++b) {
        const fincat::Id g = groth.cat->gamma(a, b);
        if (g == fincat::kNone) continue;
        const fincat::Id g2 = groth.cat->gamma(b, a);
        if (g2 == fincat::kNone ||
            groth.cat->base->compose(g2, g) != groth.cat->base->identity(groth.cat->ob_tensor(a, b)))
          ok = false;
      }
  }
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(3, ok, "category-of-elements fragments carry a strict permutative tensor", secs);
}

TEST_CASE("4: Day convolution unit and representable laws, under ten seconds") {
  const auto t0 = Clock::now();
  auto g1 = gammacat::representable_gamma(1, 2);
  auto g2 = gammacat::representable_gamma(2, 2);
  auto p11 = gammacat::day_convolve(g1, g1, 2);
  auto p21 = gammacat::day_convolve(g2, g1, 2);
  auto p22 = gammacat::day_convolve(g2, g2, 2);
  bool ok = gammacat::day_unit_iso(p11, g1).ok();
  ok = ok && gammacat::day_coyoneda_check(p11, 1, 1).ok();
  ok = ok && gammacat::day_unit_iso(p21, g2).ok();
  ok = ok && gammacat::day_coyoneda_check(p21, 2, 1).ok();
  ok = ok && gammacat::day_coyoneda_check(p22, 2, 2).ok();
  ok = ok && p22.degree[1].cat->num_objects() == 16;
  const double secs = seconds_since(t0);
  CHECK(ok);
  CHECK(secs < 10.0);
  line(4, ok && secs < 10.0, "Day convolution: unit laws and the representable product", secs);
}

TEST_CASE("5: Segal nerve counts and comparison functors, under ten seconds") {
  const auto t0 = Clock::now();
  auto z2 = permcat::discrete_perm(corpus::z2());
  auto nerve = segalnerve::segal_nerve(z2, 3);
  bool ok = true;
  for (int n = 0; n <= 3; ++n) {
    if (nerve.degrees[n].objects.size() != (1u << n)) ok = false;
    if (nerve.degrees[n].cat->num_morphisms() != static_cast<int>(1u << n)) ok = false;
  }
  ok = ok && gammacat::segal_check(nerve.gamma).ok();
  for (int k = 0; k <= 3 && ok; ++k)
    for (int l = 0; k + l <= 3 && ok; ++l) {
      auto cmp = gammacat::segal_comparison(nerve.gamma, k, l);
      if (!cmp.comparison.injective_on_objects() || !cmp.comparison.surjective_on_objects() ||
          !fincat::is_fully_faithful(cmp.comparison))
        ok = false;
    }
  auto ec = permcat::chaotic_perm(z2).ec;
  auto en = segalnerve::segal_nerve(ec, 2);
  ok = ok && gammacat::segal_check(en.gamma).ok();
  {
    auto cmp = gammacat::segal_comparison(en.gamma, 1, 1);
    if (!fincat::is_equivalence(cmp.comparison) || cmp.comparison.surjective_on_objects())
      ok = false;  // an equivalence, strictly thicker than an isomorphism
  }
  const double secs = seconds_since(t0);
  CHECK(ok);
  CHECK(secs < 10.0);
  line(5, ok && secs < 10.0, "nerve degrees count 2^n and Segal comparisons behave", secs);
}

TEST_CASE("6: both adjunction triangles hold across the fragments") {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 0; n <= 2; ++n) {
    if (!segalnerve::verify_coreflective(n, 3, n, 2'000'000, 2).ok()) ok = false;
    if (!segalnerve::verify_reflective(n, 3).ok()) ok = false;
  }
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(6, ok, "coreflective and reflective triangle identities on every fragment object", secs);
}

TEST_CASE("7: the comparison with the map-sequence category is an isomorphism") {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 0; n <= 2; ++n)
    for (int entry = 1; entry <= 2; ++entry)
      if (!segalnerve::iso_compare_J(n, 2, entry, 50'000'000).ok()) ok = false;
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(7, ok, "hom bijections and composition preserved against the map-sequence model", secs);
}

TEST_CASE("8: wedge inclusions are monic, fully faithful, essentially surjective") {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 0; n <= 3; ++n)
    if (!segalnerve::wedge_inclusion_check(n, 2).ok()) ok = false;
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(8, ok, "the wedge of generators sits inside each indexing groupoid", secs);
}

TEST_CASE("9: mapping path factorization over fifty corpus functors") {
  const auto t0 = Clock::now();
  int count = 0;
  bool ok = true;
  auto cats = corpus::perm_corpus();
  for (const auto& c : cats)
    for (const auto& d : cats) {
      if (count >= 50) break;
      if (c->nob() > 3 || d->nob() > 3) continue;
      std::vector<permcat::StrictSMFunctor> fs;
      try {
        fs = permcat::enumerate_strict_sm_functors(c, d);
      } catch (const fincat::BudgetExceeded&) {
        continue;
      }
      for (const auto& f : fs) {
        if (count >= 50) break;
        ++count;
        auto m = permcat::mapping_path_factorize(f);
        if (!(permcat::compose(m.p_y, m.i_x).f == f.f)) ok = false;
        if (!fincat::is_isofibration(m.p_y.f)) ok = false;
        if (!fincat::is_equivalence(m.i_x.f)) ok = false;
      }
    }
  const double secs = seconds_since(t0);
  CHECK(count >= 50);
  CHECK(ok);
  line(9, ok && count >= 50, "F = P_Y o i_X exactly, with the stated model properties", secs);
}

TEST_CASE("10: free and lax universality") {
  const auto t0 = Clock::now();
  bool ok = true;
  // restriction bijection for the free permutative category
  for (fincat::CatPtr c :
       {fincat::builtins::terminal(), fincat::builtins::discrete2(), fincat::builtins::arrow_i()}) {
    auto s = freeperm::free_perm(c, 3);
    for (const auto& m : {corpus::trivial_monoid(), corpus::z2(), corpus::z3(), corpus::bool2(),
                          corpus::sat3()}) {
      auto a = permcat::discrete_perm(m);
      if (fincat::enumerate_functors(c, a->base).size() !=
          permcat::enumerate_strict_sm_functors(s.cat, a).size())
        ok = false;
    }
  }
  // extension of lax data: psi o iota = phi, and uniqueness
  auto p = permcat::discrete_perm(corpus::z2());
  auto pe = freeperm::lax_completion(p, 3);
  freeperm::LaxSMData phi;
  phi.dom = p;
  phi.cod = p;
  phi.f = fincat::Functor::identity(p->base);
  phi.mu.assign(4, fincat::kNone);
  for (fincat::Id a = 0; a < 2; ++a)
    for (fincat::Id b = 0; b < 2; ++b) phi.mu[a * 2 + b] = p->base->identity(p->ob_tensor(a, b));
  if (!phi.check().ok()) ok = false;
  auto psi = freeperm::extend_lax_to_strict(pe, phi);
  for (fincat::Id a = 0; a < p->nob(); ++a)
    if (psi.f.ob[pe.iota.ob[a]] != a) ok = false;
  for (fincat::Id m = 0; m < p->base->num_morphisms(); ++m)
    if (psi.f.mor[pe.iota.mor[m]] != m) ok = false;
  int agreeing = 0;
  for (const auto& cand : permcat::enumerate_strict_sm_functors(pe.cat, p)) {
    bool agrees = true;
    for (fincat::Id a = 0; a < p->nob() && agrees; ++a)
      if (cand.f.ob[pe.iota.ob[a]] != a) agrees = false;
    for (fincat::Id m = 0; m < p->base->num_morphisms() && agrees; ++m)
      if (cand.f.mor[pe.iota.mor[m]] != m) agrees = false;
    for (fincat::Id a = 0; a < p->nob() && agrees; ++a)
      for (fincat::Id b = 0; b < p->nob() && agrees; ++b) {
        const fincat::Id mu = pe.iota_mu[a * p->nob() + b];
        if (mu != fincat::kNone && cand.f.mor[mu] != phi.mu[a * 2 + b]) agrees = false;
      }
    if (agrees) {
      ++agreeing;
      if (!(cand.f == psi.f)) ok = false;
    }
  }
  if (agreeing != 1) ok = false;
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(10, ok, "restriction bijections and unique lax-to-strict extensions", secs);
}

TEST_CASE("11: horizontal localization collapses onto degree one, under ten seconds") {
  const auto t0 = Clock::now();
  auto z2 = permcat::discrete_perm(corpus::z2());
  auto nerve = segalnerve::segal_nerve(z2, 3);
  auto lein = leinster::build_leinster(2, 3, 2);
  auto ext = leinster::sm_extension(nerve.gamma, lein);
  auto groth = leinster::grothendieck_perm(ext);
  auto loc = leinster::localize_horizontal(ext, groth);
  bool ok = loc.report.ok();
  ok = ok && fincat::compose(loc.retraction, loc.inclusion) ==
                 fincat::Functor::identity(nerve.gamma.degrees[1]);
  ok = ok && fincat::is_fully_faithful(loc.inclusion) &&
       fincat::is_essentially_surjective(loc.inclusion);
  const double secs = seconds_since(t0);
  CHECK(ok);
  CHECK(secs < 10.0);
  line(11, ok && secs < 10.0, "retraction on the nose, inclusion an equivalence, horizontals invert",
       secs);
}

TEST_CASE("12: bicycles and strict monoidal functors are mutually inverse") {
  const auto t0 = Clock::now();
  bool ok = true;
  std::vector<permcat::PermPtr> cats = {permcat::trivial_perm(), permcat::discrete_perm(corpus::z2()),
                                        permcat::chaotic_perm(permcat::discrete_perm(corpus::z2())).ec};
  for (const auto& c : cats)
    for (int n = 0; n <= 2; ++n)
      if (!segalnerve::bicycle_roundtrip(c, n, 2).ok()) ok = false;
  const double secs = seconds_since(t0);
  CHECK(ok);
  line(12, ok, "the bicycle/functor conversion round-trips on all corpus degrees", secs);
}
