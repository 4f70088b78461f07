#pragma once

#include <optional>
#include <vector>

#include "gammaskel.hpp"
#include "permcat.hpp"

// Truncated free permutative categories S(C), the lax completion P^e with
// its fold functor lambda_P, and the universal extension of (op)lax
// symmetric monoidal data to strict symmetric monoidal functors.

namespace freeperm {

using fincat::CatPtr;
using fincat::Functor;
using fincat::Id;
using fincat::kNone;
using fincat::Report;
using permcat::PermPtr;
using permcat::StrictSMFunctor;

// S(C) truncated at word length `max_len`: objects are words of
// C-objects, hom(x, y) = disjoint union over permutations of products of
// C-homs, tensor is concatenation, symmetry the shuffle permutation.
struct FreePerm {
  PermPtr cat;
  CatPtr generators;
  int max_len = 0;
  std::vector<std::vector<Id>> words;  // per object of cat
  struct MorData {
    std::vector<int> sigma;  // source position i -> target position sigma[i-1] (1-based)
    std::vector<Id> comps;   // f_i : x_i -> y_{sigma(i)} in C
  };
  std::vector<MorData> mor_data;  // per morphism of cat
  Id object_of(const std::vector<Id>& word) const;
};
FreePerm free_perm(CatPtr c, int max_len, long budget = 2'000'000);

// The unique strict SM functor S(C) -> A restricting to F : C -> A along
// the length-one inclusion.  Throws permcat::FragmentError when A's
// tensor is undefined on a required word.
StrictSMFunctor extend_from_generators(const FreePerm& s, const Functor& f, PermPtr a);

// ---- (op)lax symmetric monoidal functor data --------------------------------

// Unital lax symmetric monoidal functor data: mu(a,b) : F(a)@F(b) -> F(a@b).
struct LaxSMData {
  PermPtr dom, cod;
  Functor f;
  std::vector<Id> mu;  // nob x nob of dom, kNone where undefined
  Id mu_at(Id a, Id b) const { return mu[static_cast<size_t>(a) * dom->nob() + b]; }
  Report check() const;
};

// Unital oplax data: lambda(a,b) : F(a@b) -> F(a)@F(b).
struct OplaxSMData {
  PermPtr dom, cod;
  Functor f;
  std::vector<Id> lambda;
  Id lambda_at(Id a, Id b) const { return lambda[static_cast<size_t>(a) * dom->nob() + b]; }
  Report check() const;
};

// ---- the completion P^e ------------------------------------------------------

struct Completion {
  PermPtr cat;   // P^e fragment
  PermPtr base;  // P
  int max_len = 0;
  std::vector<std::vector<Id>> words;  // per object, a word of P-objects
  struct MorData {
    gammaskel::UnbasedMap h;  // source positions -> target positions
    std::vector<Id> comps;    // f_i : tensor of k_j over h^{-1}(i) -> l_i
  };
  std::vector<MorData> mor_data;
  StrictSMFunctor lambda_p;        // P^e -> P
  Functor iota;                    // P -> P^e, the underlying functor of the lax inclusion
  std::vector<Id> iota_mu;         // mu(a,b) : (a,b) -> (a@b) in P^e, nob x nob
  Id object_of(const std::vector<Id>& word) const;
};
// Requires P's tensor defined on every word of length <= max_len that the
// hom-sets mention; throws permcat::FragmentError otherwise.
Completion lax_completion(PermPtr p, int max_len, long budget = 2'000'000);

// psi = lambda_D o phi^e : P^e -> D, the unique strict SM functor with
// psi o iota = phi.
StrictSMFunctor extend_lax_to_strict(const Completion& pe, const LaxSMData& phi);

// Dual wrapper: extends unital oplax data along the opposite-category
// completion and transports the result back.
struct OplaxExtension {
  Completion op_completion;  // completion of dom^op
  StrictSMFunctor psi_op;    // (dom^op)^e -> cod^op
};
OplaxExtension extend_oplax_to_strict(const OplaxSMData& phi, int max_len, long budget = 2'000'000);

// ---- auxiliary fragments ------------------------------------------------------

// The skeleton of finite unbased sets as a bounded permutative category:
// objects 0..max_n, all maps between them, tensor +, block-swap symmetry.
struct NatSkeleton {
  PermPtr cat;
  std::vector<gammaskel::UnbasedMap> maps;  // per morphism
  Id morphism_of(const gammaskel::UnbasedMap& f) const;
};
NatSkeleton nat_skeleton(int max_n);

// |P^e(k, l)| computed from the defining formula without materializing
// the completion: sum over index maps h of products of hom-set sizes.
long completion_hom_count(const permcat::PermCategory& p, const std::vector<Id>& k,
                          const std::vector<Id>& l);

// Opposite permutative category, with the morphism relabelling.
struct OppositePerm {
  PermPtr cat;
  std::vector<Id> mor_of;  // original morphism id -> opposite morphism id
};
OppositePerm opposite_perm(PermPtr p);

}  // namespace freeperm
