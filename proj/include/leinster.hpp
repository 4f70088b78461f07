#pragma once

#include <optional>
#include <vector>

#include "gammacat.hpp"
#include "gammaskel.hpp"
#include "permcat.hpp"

// The Leinster category of finite sequences of naturals, the symmetric
// monoidal extension of a Gamma-category along it, the Grothendieck
// construction with its permutative tensor, and horizontal localization
// for coherently commutative inputs.

namespace leinster {

using fincat::CatPtr;
using fincat::Functor;
using fincat::Id;
using fincat::kNone;
using fincat::Report;
using gammaskel::UnbasedMap;

// Bounded fragment of the Leinster category: objects are sequences
// (m_1,...,m_r) with r <= max_len and entries <= max_entry (and total sum
// <= max_total when nonnegative); a morphism k -> m is a pair (h, phi)
// with h mapping target indices to source indices and phi a map of total
// sets making the defining square commute.
struct LeinsterCategory {
  permcat::PermPtr cat;
  int max_len = 0, max_entry = 0, max_total = -1, min_entry = 0;
  std::vector<std::vector<int>> objects;
  struct MorData {
    UnbasedMap h;    // s -> r, target index to source index
    UnbasedMap phi;  // total(k) -> total(m)
  };
  std::vector<MorData> mor_data;
  Id object_of(const std::vector<int>& seq) const;
  Id morphism_of(Id src, Id tgt, const UnbasedMap& h, const UnbasedMap& phi) const;
  int total(Id ob) const;
};
LeinsterCategory build_leinster(int max_len, int max_entry, int max_total = -1,
                                long budget = 2'000'000, int min_entry = 0);

// Finite product of Gamma-category degrees, with tuple indexing.  Object
// ids are mixed-radix ranks of component tuples; morphism ids are mapped
// through the rank tables (identities are pinned by construction).
struct FiberProduct {
  CatPtr cat;
  std::vector<CatPtr> factors;
  std::vector<long> ob_stride, mor_stride;
  std::vector<Id> mor_tuple_to_id;  // mixed-radix rank -> morphism id
  std::vector<long> id_to_mor_tuple;
  Id ob_tuple(const std::vector<Id>& t) const;
  Id ob_component(Id ob, int i) const;
  Id mor_id_of_tuple(const std::vector<Id>& t) const;
  Id mor_component_of_id(Id m, int i) const;
};
FiberProduct fiber_product(const std::vector<CatPtr>& factors, long budget = 2'000'000);

// The extension L(X): fibers prod_i X(m_i+) and an action functor per
// Leinster morphism.
struct SMExtension {
  LeinsterCategory lein;
  const gammacat::GammaCategory* x = nullptr;
  std::vector<FiberProduct> fibers;        // per Leinster object
  std::vector<Functor> action;             // per Leinster morphism
};
SMExtension sm_extension(const gammacat::GammaCategory& x, const LeinsterCategory& lein,
                         long budget = 2'000'000);

// All composable pairs act compositionally.
Report extension_functoriality(const SMExtension& ext);

// The category of elements of L(X) with the concatenation tensor.
struct Grothendieck {
  permcat::PermPtr cat;
  std::vector<std::pair<Id, Id>> cells;  // (Leinster object, fiber object)
  struct CellMor {
    Id lmor;   // morphism of the Leinster fragment
    Id fmor;   // morphism of the target fiber, from act(x) to y
  };
  std::vector<CellMor> mors;
  permcat::StrictSMFunctor projection;  // to the Leinster fragment
  Id cell_of(Id lob, Id fib) const;
  Id cell_mor_of(Id src_cell, Id lmor, Id fmor) const;
};
Grothendieck grothendieck_perm(const SMExtension& ext, long budget = 2'000'000);

// ---- horizontal localization ---------------------------------------------------

struct Localization {
  CatPtr lbar;                // the collapse model
  std::vector<Id> collapse;   // per cell: object of X(1+)
  struct LMor {
    Id value;  // morphism of X(1+)
  };
  std::vector<LMor> lmors;    // per lbar morphism
  Functor inclusion;          // i : X(1+) -> lbar
  Functor retraction;         // ibar : lbar -> X(1+), ibar o i = id
  // image of every Grothendieck morphism under the projection
  std::vector<Id> pi;         // per groth morphism: lbar morphism
  Report report;              // functoriality of pi, horizontal-to-iso, ibar o i
};
// Requires segal_check(x) to pass; throws std::invalid_argument otherwise.
// The deterministic section of each Segal equivalence picks the least
// preimage and iso witness; prefer_last flips the tie-break so tests can
// confirm the collapse is independent of the choice.
Localization localize_horizontal(const SMExtension& ext, const Grothendieck& groth,
                                 long budget = 2'000'000, bool prefer_last = false);

// Cross-check: the extension action on partition morphisms agrees with
// the iterated binary Segal comparisons composed in the fixed normal
// order.
Report partition_action_check(const SMExtension& ext);

}  // namespace leinster
