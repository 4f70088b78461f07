#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "freeperm.hpp"

using namespace freeperm;
using fincat::Functor;
using fincat::Id;
using permcat::check_permutative;

namespace {
permcat::Monoid z2m() {
  permcat::Monoid m;
  m.name = "z2";
  m.order = 2;
  m.unit = 0;
  m.mul = {0, 1, 1, 0};
  return m;
}
}  // namespace

TEST_CASE("free perm on the terminal category") {
  auto s = free_perm(fincat::builtins::terminal(), 3);
  CHECK(s.cat->nob() == 4);  // lengths 0..3
  CHECK(check_permutative(*s.cat).ok());
  CHECK(fincat::validate_category(*s.cat->base).ok());
  const Id w2 = s.object_of({0, 0});
  CHECK(s.cat->base->hom(w2, w2).size() == 2);  // Sigma_2
  const Id w3 = s.object_of({0, 0, 0});
  CHECK(s.cat->base->hom(w3, w3).size() == 6);  // Sigma_3
}

TEST_CASE("free perm on the empty category is unit-only") {
  auto s = free_perm(fincat::builtins::empty(), 3);
  CHECK(s.cat->nob() == 1);
  CHECK(s.cat->base->num_morphisms() == 1);
}

TEST_CASE("free perm on the arrow") {
  auto s = free_perm(fincat::builtins::arrow_i(), 2);
  CHECK(fincat::validate_category(*s.cat->base).ok());
  CHECK(check_permutative(*s.cat).ok());
  const Id a = s.object_of({0, 0});
  const Id b = s.object_of({1, 1});
  CHECK(s.cat->base->hom(a, b).size() == 2);  // two shuffles of the arrow pair
}

TEST_CASE("hom-count formula for the symmetric power") {
  for (fincat::CatPtr c :
       {fincat::builtins::terminal(), fincat::builtins::arrow_i(), fincat::builtins::iso_j()}) {
    auto s = free_perm(c, 3);
    for (Id i = 0; i < s.cat->nob(); ++i)
      for (Id j = 0; j < s.cat->nob(); ++j) {
        const auto& xw = s.words[i];
        const auto& yw = s.words[j];
        long expect = 0;
        if (xw.size() == yw.size()) {
          const int n = static_cast<int>(xw.size());
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          do {
            long prod = 1;
            for (int t = 0; t < n; ++t) prod *= static_cast<long>(c->hom(xw[t], yw[perm[t]]).size());
            expect += prod;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (n == 0) expect = 1;
        }
        CHECK(static_cast<long>(s.cat->base->hom(i, j).size()) == expect);
      }
  }
}

TEST_CASE("extension from generators") {
  auto s = free_perm(fincat::builtins::terminal(), 3);
  auto a = permcat::discrete_perm(z2m());
  Functor f(fincat::builtins::terminal(), a->base, {1}, {a->base->identity(1)});
  auto ext = extend_from_generators(s, f, a);
  CHECK(permcat::check_strict_sm_functor(ext).ok());
  CHECK(ext.f.ob[s.object_of({0, 0})] == 0);  // 1 + 1 = 0
  CHECK(ext.f.ob[s.object_of({0, 0, 0})] == 1);
  Functor u(fincat::builtins::terminal(), a->base, {0}, {a->base->identity(0)});
  auto uext = extend_from_generators(s, u, a);
  for (Id o = 0; o < s.cat->nob(); ++o) CHECK(uext.f.ob[o] == 0);
}

TEST_CASE("free universal property: restriction is a bijection") {
  permcat::Monoid sat3;
  sat3.name = "sat3";
  sat3.order = 3;
  sat3.unit = 0;
  sat3.mul = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  for (fincat::CatPtr c :
       {fincat::builtins::terminal(), fincat::builtins::discrete2(), fincat::builtins::arrow_i()}) {
    for (const auto& mon : {z2m(), sat3}) {
      auto a = permcat::discrete_perm(mon);
      auto s = free_perm(c, 3);
      auto functors = fincat::enumerate_functors(c, a->base);
      auto smfunctors = permcat::enumerate_strict_sm_functors(s.cat, a);
      CHECK(functors.size() == smfunctors.size());
      for (size_t p = 0; p < smfunctors.size(); ++p)
        for (size_t q = p + 1; q < smfunctors.size(); ++q) {
          bool same = true;
          for (Id ob = 0; ob < c->num_objects(); ++ob)
            if (smfunctors[p].f.ob[s.object_of({ob})] != smfunctors[q].f.ob[s.object_of({ob})])
              same = false;
          CHECK(!same);  // restriction stays injective
        }
    }
  }
}

TEST_CASE("strict monoidal hom out of a free truncation is generator-determined") {
  auto s = free_perm(fincat::builtins::terminal(), 3);
  auto hom = permcat::strict_sm_hom(s.cat, permcat::discrete_perm(z2m()));
  CHECK(hom.objects.size() == 2);
}

TEST_CASE("lax completion of the trivial permutative category") {
  auto pe = lax_completion(permcat::trivial_perm(), 3);
  CHECK(pe.cat->nob() == 4);
  CHECK(fincat::validate_category(*pe.cat->base).ok());  // can-composition associativity
  CHECK(check_permutative(*pe.cat).ok());
  const Id w2 = pe.object_of({0, 0});
  const Id w1 = pe.object_of({0});
  CHECK(pe.cat->base->hom(w2, w1).size() == 1);
  CHECK(pe.cat->base->hom(w1, pe.object_of({})).empty());
  CHECK(pe.cat->base->hom(pe.object_of({}), pe.object_of({})).size() == 1);
  for (Id o = 0; o < pe.cat->nob(); ++o)
    CHECK(pe.cat->base->is_identity(pe.lambda_p.f.mor[pe.cat->base->identity(o)]));
  CHECK(permcat::check_strict_sm_functor(pe.lambda_p).ok());
}

TEST_CASE("lax completion of z2 and the hom-count oracle") {
  auto p = permcat::discrete_perm(z2m());
  auto pe = lax_completion(p, 3);
  CHECK(fincat::validate_category(*pe.cat->base).ok());
  CHECK(check_permutative(*pe.cat).ok());
  for (Id i = 0; i < pe.cat->nob(); ++i)
    for (Id j = 0; j < pe.cat->nob(); ++j)
      CHECK(static_cast<long>(pe.cat->base->hom(i, j).size()) ==
            completion_hom_count(*p, pe.words[i], pe.words[j]));
  CHECK(pe.iota.validate().ok());
}

TEST_CASE("extension of lax data to the completion") {
  auto p = permcat::discrete_perm(z2m());
  auto pe = lax_completion(p, 3);
  LaxSMData idphi;
  idphi.dom = p;
  idphi.cod = p;
  idphi.f = Functor::identity(p->base);
  idphi.mu.assign(4, fincat::kNone);
  for (Id a = 0; a < 2; ++a)
    for (Id b = 0; b < 2; ++b) idphi.mu[a * 2 + b] = p->base->identity(p->ob_tensor(a, b));
  CHECK(idphi.check().ok());
  auto psi = extend_lax_to_strict(pe, idphi);
  CHECK(permcat::check_strict_sm_functor(psi).ok());
  CHECK(psi.f == pe.lambda_p.f);  // the identity data extends to the fold
  for (Id a = 0; a < p->nob(); ++a) CHECK(psi.f.ob[pe.iota.ob[a]] == a);
  for (Id m = 0; m < p->base->num_morphisms(); ++m) CHECK(psi.f.mor[pe.iota.mor[m]] == m);
  // uniqueness among strict SM functors agreeing with the data on iota
  auto all = permcat::enumerate_strict_sm_functors(pe.cat, p);
  int agreeing = 0;
  for (const auto& cand : all) {
    bool agrees = true;
    for (Id a = 0; a < p->nob() && agrees; ++a)
      if (cand.f.ob[pe.iota.ob[a]] != a) agrees = false;
    for (Id m = 0; m < p->base->num_morphisms() && agrees; ++m)
      if (cand.f.mor[pe.iota.mor[m]] != m) agrees = false;
    for (Id a = 0; a < p->nob() && agrees; ++a)
      for (Id b = 0; b < p->nob() && agrees; ++b) {
        const Id mu = pe.iota_mu[a * p->nob() + b];
        if (mu != fincat::kNone && cand.f.mor[mu] != idphi.mu[a * 2 + b]) agrees = false;
      }
    if (agrees) {
      ++agreeing;
      CHECK(cand.f == psi.f);
    }
  }
  CHECK(agreeing == 1);
}

TEST_CASE("constant lax data extends to a constant strict functor") {
  auto p = permcat::discrete_perm(z2m());
  auto pe = lax_completion(p, 2);
  LaxSMData phi;
  phi.dom = p;
  phi.cod = permcat::trivial_perm();
  phi.f = Functor::constant(p->base, permcat::trivial_perm()->base, 0);
  phi.mu.assign(4, permcat::trivial_perm()->base->identity(0));
  CHECK(phi.check().ok());
  auto psi = extend_lax_to_strict(pe, phi);
  CHECK(permcat::check_strict_sm_functor(psi).ok());
  for (Id o = 0; o < pe.cat->nob(); ++o) CHECK(psi.f.ob[o] == 0);
}

TEST_CASE("oplax data extends along the opposite completion") {
  auto p = permcat::discrete_perm(z2m());
  OplaxSMData phi;
  phi.dom = p;
  phi.cod = p;
  phi.f = Functor::identity(p->base);
  phi.lambda.assign(4, fincat::kNone);
  for (Id a = 0; a < 2; ++a)
    for (Id b = 0; b < 2; ++b) phi.lambda[a * 2 + b] = p->base->identity(p->ob_tensor(a, b));
  CHECK(phi.check().ok());
  auto ext = extend_oplax_to_strict(phi, 2);
  CHECK(permcat::check_strict_sm_functor(ext.psi_op).ok());
}

TEST_CASE("nat skeleton is a valid bounded permutative category") {
  auto n3 = nat_skeleton(3);
  CHECK(n3.cat->nob() == 4);
  CHECK(fincat::validate_category(*n3.cat->base).ok());
  CHECK(check_permutative(*n3.cat).ok());
  long expect = 0;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      expect += static_cast<long>(gammaskel::enumerate_unbased_maps(r, s).size());
  CHECK(n3.cat->base->num_morphisms() == expect);
}

TEST_CASE("opposite permutative category") {
  auto p = permcat::discrete_perm(z2m());
  auto op = opposite_perm(p);
  CHECK(check_permutative(*op.cat).ok());
  auto n2 = nat_skeleton(2);
  auto opn = opposite_perm(n2.cat);
  CHECK(check_permutative(*opn.cat).ok());
  CHECK(fincat::validate_category(*opn.cat->base).ok());
}
