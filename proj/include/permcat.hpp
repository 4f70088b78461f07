#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fincat.hpp"

// Permutative categories, possibly as bounded presentations of infinite
// ones: the tensor tables may be partial, and every checker quantifies
// only over the defined fragment.  Strict symmetric monoidal functors,
// unital monoidal natural transformations, the enriched hom StrSMHom,
// chaotic categories, mapping path objects and the cotensor.

namespace permcat {

using fincat::CatPtr;
using fincat::Functor;
using fincat::Id;
using fincat::kNone;
using fincat::NatTrans;
using fincat::Report;

// Thrown when a bounded presentation is too tight for a requested
// construction (a tensor or coherence isomorphism falls outside the
// fragment).
struct FragmentError : std::runtime_error {
  explicit FragmentError(const std::string& what) : std::runtime_error(what) {}
};

class PermCategory {
 public:
  std::string name;
  CatPtr base;
  Id unit = kNone;
  bool bounded = false;  // marks a truncation of an infinite category
  std::vector<Id> generator_objects;
  // For generator-based enumeration: each object as a word in generator
  // objects (empty word = unit).  Only meaningful when generators are set.
  std::vector<std::vector<Id>> object_word;

  explicit PermCategory(CatPtr b) : base(std::move(b)) { reset_tables(); }
  PermCategory() = default;

  Id ob_tensor(Id a, Id b) const { return ob_tensor_[static_cast<size_t>(a) * nob() + b]; }
  Id gamma(Id a, Id b) const { return gamma_[static_cast<size_t>(a) * nob() + b]; }
  Id mor_tensor(Id f, Id g) const {
    auto it = mor_tensor_.find(mkey(f, g));
    return it == mor_tensor_.end() ? kNone : it->second;
  }
  void set_ob_tensor(Id a, Id b, Id ab) { ob_tensor_[static_cast<size_t>(a) * nob() + b] = ab; }
  void set_gamma(Id a, Id b, Id g) { gamma_[static_cast<size_t>(a) * nob() + b] = g; }
  void set_mor_tensor(Id f, Id g, Id fg) { mor_tensor_[mkey(f, g)] = fg; }
  const std::unordered_map<std::uint64_t, Id>& mor_tensor_entries() const { return mor_tensor_; }

  int nob() const { return base ? base->num_objects() : 0; }

 private:
  void reset_tables() {
    ob_tensor_.assign(static_cast<size_t>(nob()) * nob(), kNone);
    gamma_.assign(static_cast<size_t>(nob()) * nob(), kNone);
  }
  static std::uint64_t mkey(Id f, Id g) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) | static_cast<std::uint32_t>(g);
  }
  std::vector<Id> ob_tensor_;
  std::vector<Id> gamma_;
  std::unordered_map<std::uint64_t, Id> mor_tensor_;
};

using PermPtr = std::shared_ptr<const PermCategory>;

// Left-nested tensor of a word of objects; empty word is the unit.
// Throws FragmentError when the fold leaves the defined fragment.
Id tensor_word_ob(const PermCategory& p, std::span<const Id> word);
Id tensor_word_mor(const PermCategory& p, std::span<const Id> word);

// The canonical coherence isomorphism permuting a tensor word:
// a_1 @ ... @ a_n  ->  a_{inv(sigma)(1)} @ ... @ a_{inv(sigma)(n)}
// where sigma maps source positions to target positions.  Computed as a
// composite of adjacent-transposition symmetries; coherence makes the
// decomposition irrelevant.
Id coherence_iso(const PermCategory& p, std::span<const Id> word, std::span<const int> sigma);

// Empty report iff the permutative axioms hold on the defined fragment.
Report check_permutative(const PermCategory& p);

struct StrictSMFunctor {
  PermPtr dom, cod;
  Functor f;

  Id on_ob(Id a) const { return f.ob[a]; }
  Id on_mor(Id m) const { return f.mor[m]; }
  static StrictSMFunctor identity(PermPtr p);
};
StrictSMFunctor compose(const StrictSMFunctor& g, const StrictSMFunctor& f);

Report check_strict_sm_functor(const StrictSMFunctor& fn);

// Unital monoidal natural transformation between strict SM functors.
Report check_monoidal_nat(const PermPtr& dom_cat, const PermPtr& cod_cat, const NatTrans& nt);

// ---- basic builders --------------------------------------------------------

struct Monoid {
  std::string name;
  int order = 1;
  int unit = 0;
  std::vector<int> mul;  // order x order
  int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  bool commutative() const;
};

// Discrete permutative category on a commutative monoid; gamma = id.
PermPtr discrete_perm(const Monoid& m);
// The terminal permutative category.
PermPtr trivial_perm();

// ---- the enriched hom StrSMHom(C, D) ---------------------------------------

struct SMHomCategory {
  CatPtr cat;  // objects index `objects`, morphisms index `transformations`
  std::vector<StrictSMFunctor> objects;
  std::vector<NatTrans> transformations;
};
// Objects: strict SM functors C -> D (enumerated, using C's generators
// when available); morphisms: unital monoidal natural transformations.
SMHomCategory strict_sm_hom(PermPtr c, PermPtr d, long budget = 2'000'000);

// All strict SM functors C -> D.
std::vector<StrictSMFunctor> enumerate_strict_sm_functors(PermPtr c, PermPtr d, long budget = 2'000'000);

// ---- weak-equivalence and acyclic-fibration characterizations ---------------

struct MonoidalInverseWitness {
  Functor quasi_inverse;  // unital functor D -> C
  NatTrans unit;          // id_C => GF, unital monoidal iso
  NatTrans counit;        // FG => id_D, unital monoidal iso
};
// Exhaustive search for a unital quasi-inverse with unital monoidal unit
// and counit isomorphisms.
std::optional<MonoidalInverseWitness> monoidal_quasi_inverse(const StrictSMFunctor& f,
                                                             long budget = 2'000'000);

struct MonoidalSectionWitness {
  Functor section;  // G with FG = id
  NatTrans unit;    // id_C => GF, unital monoidal iso
};
// Exhaustive search for an on-the-nose section with a unital monoidal
// natural isomorphism id ~ GF.
std::optional<MonoidalSectionWitness> monoidal_section(const StrictSMFunctor& f, long budget = 2'000'000);

// ---- chaotic categories -----------------------------------------------------

struct ChaoticPerm {
  PermPtr ec;
  StrictSMFunctor iota;  // C -> EC, identity on objects
};
ChaoticPerm chaotic_perm(PermPtr c);

// ---- mapping path object ----------------------------------------------------

struct MappingPath {
  PermPtr pf;             // P(F), objects are triples (y : F(A) ~ B, A, B)
  StrictSMFunctor i_x;    // X -> P(F), an equivalence
  StrictSMFunctor p_y;    // P(F) -> Y, an isofibration
  StrictSMFunctor p_x;    // P(F) -> X, retraction of i_x
};
MappingPath mapping_path_factorize(const StrictSMFunctor& f);

// ---- cotensor [A, D] --------------------------------------------------------

struct Cotensor {
  PermPtr cat;
  fincat::FunctorCategory fc;  // interprets objects/morphisms of cat->base
};
Cotensor cotensor_perm(CatPtr a, PermPtr d, long budget = 2'000'000);

}  // namespace permcat
