#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

// Explicit finite categories with total composition tables, functors and
// natural transformations between them, and the solvers underlying the
// natural model structure on Cat: equivalence testing, isofibrations,
// right-lifting-property search, core groupoids, functor categories and
// Gabriel factorization.
//
// Identifiers are dense integers; every table supports O(1) lookup and a
// canonical iteration order, which keeps the exhaustive solvers
// deterministic.

namespace fincat {

using Id = int;
inline constexpr Id kNone = -1;

// Thrown when an enumeration would exceed its configured budget.  Budgets
// fail loudly, they never truncate silently.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  std::string rule;
  std::string witness;
};

struct Report {
  std::vector<Violation> items;
  bool ok() const { return items.empty(); }
  void add(std::string rule, std::string witness) { items.push_back({std::move(rule), std::move(witness)}); }
  void merge(const Report& other, const std::string& prefix = "");
  std::string to_text() const;
};

class FinCategory {
 public:
  std::string name;

  Id add_object();
  // Adds a non-identity morphism; identity morphisms are created by
  // add_object.
  Id add_morphism(Id src, Id tgt);
  void set_compose(Id g, Id f, Id gf);
  // Fills identity composites and computes the inverse table.
  void finalize();

  int num_objects() const { return n_ob_; }
  int num_morphisms() const { return static_cast<int>(src_.size()); }
  Id src(Id m) const { return src_[m]; }
  Id tgt(Id m) const { return tgt_[m]; }
  Id identity(Id ob) const { return id_[ob]; }
  bool is_identity(Id m) const { return m == id_[src_[m]] && src_[m] == tgt_[m]; }
  bool composable(Id g, Id f) const { return tgt_[f] == src_[g]; }
  // g after f; kNone when the table has no entry.
  Id compose(Id g, Id f) const;
  // Inverse morphism or kNone.
  Id inverse(Id m) const { return inv_[m]; }
  bool is_invertible(Id m) const { return inv_[m] != kNone; }
  bool finalized() const { return finalized_; }

  // All morphisms a -> b, in id order.
  std::vector<Id> hom(Id a, Id b) const;
  bool isomorphic_objects(Id a, Id b) const;
  std::string describe_morphism(Id m) const;

 private:
  int n_ob_ = 0;
  std::vector<Id> src_, tgt_;
  std::vector<Id> id_;
  std::vector<Id> inv_;
  bool finalized_ = false;

  bool dense_ = true;
  std::vector<Id> comp_dense_;  // n_mor x n_mor when dense
  std::unordered_map<std::uint64_t, Id> comp_sparse_;
  std::uint64_t key(Id g, Id f) const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(f);
  }
};

using CatPtr = std::shared_ptr<const FinCategory>;
CatPtr make_cat(FinCategory&& c);

// Empty report iff C satisfies all category axioms (typing of the
// composition table, totality on composable pairs, identity laws,
// associativity); each violation names witness morphisms.
Report validate_category(const FinCategory& c);

struct Functor {
  CatPtr dom, cod;
  std::vector<Id> ob;   // per object of dom
  std::vector<Id> mor;  // per morphism of dom

  Functor() = default;
  Functor(CatPtr d, CatPtr c, std::vector<Id> o, std::vector<Id> m);
  static Functor identity(CatPtr c);
  static Functor constant(CatPtr d, CatPtr c, Id target_ob);

  Id on_ob(Id a) const { return ob[a]; }
  Id on_mor(Id f) const { return mor[f]; }
  Report validate() const;
  bool injective_on_objects() const;
  bool surjective_on_objects() const;

  // Strict equality: same domain and codomain objects and identical maps.
  bool operator==(const Functor& o) const { return dom == o.dom && cod == o.cod && ob == o.ob && mor == o.mor; }
};

Functor compose(const Functor& g, const Functor& f);

struct NatTrans {
  Functor dom, cod;            // parallel functors F, G : A -> B
  std::vector<Id> component;   // per object of A, a morphism of B

  Report validate() const;
  bool operator==(const NatTrans& o) const = default;
};

// Vertical composition.
NatTrans compose(const NatTrans& b, const NatTrans& a);

// ---- built-in interval categories and groupoids --------------------------

namespace builtins {
CatPtr empty();      // no objects
CatPtr terminal();   // one object "0"
CatPtr arrow_i();    // 0 -> 1
CatPtr discrete2();  // boundary of the arrow: {0, 1}
CatPtr iso_j();      // free isomorphism 0 ~ 1 (2 objects, 4 morphisms)
CatPtr two_chain();  // [2]: 0 -> 1 -> 2 (6 morphisms)
CatPtr boundary2();  // same objects as [2], hom(0,2) has two elements
CatPtr discrete(int n);
CatPtr chaotic(int n);  // exactly one morphism between any ordered pair

Functor i0();       // 0 -> J at object 0
Functor i1();       // 0 -> J at object 1
Functor d0();       // boundary map: empty -> terminal
Functor d1();       // boundary map: discrete2 -> arrow
Functor d2();       // boundary map: boundary2 -> [2]
Functor j_swap();   // the automorphism of J permuting 0 and 1
}  // namespace builtins

// ---- constructions --------------------------------------------------------

struct ProductCategory {
  CatPtr cat;
  Functor pr1, pr2;
  Id pair_ob(Id a, Id b) const { return a * nb_ + b; }
  Id pair_mor(Id f, Id g) const { return mor_of_[static_cast<size_t>(f) * mb_ + g]; }
  int nb_ = 0, mb_ = 0;  // sizes of the second factor
  std::vector<Id> mor_of_;
};
ProductCategory product(CatPtr a, CatPtr b);

// Opposite category; when mor_map is given it receives the relabelling
// original morphism id -> opposite morphism id.
CatPtr opposite(const FinCategory& c, std::vector<Id>* mor_map = nullptr);

struct CoreGroupoid {
  CatPtr cat;                 // wide subcategory of invertible morphisms
  Functor inclusion;          // core -> original
  std::vector<Id> mor_index;  // core morphism -> original morphism
  std::vector<Id> of_mor;     // original morphism -> core id or kNone
};
CoreGroupoid core_groupoid(CatPtr c);
// The functor J(F) induced on core groupoids.
Functor core_functor(const Functor& f, const CoreGroupoid& jc, const CoreGroupoid& jd);

// ---- equivalences and the model-structure solvers -------------------------

bool is_fully_faithful(const Functor& f);
bool is_essentially_surjective(const Functor& f);
// Fully faithful and essentially surjective, by finite enumeration.
// Throws std::invalid_argument when the functor fails validation.
bool is_equivalence(const Functor& f);

struct EquivalenceWitness {
  Functor quasi_inverse;
  NatTrans unit;    // id_C => GF
  NatTrans counit;  // FG => id_D
};
// Deterministic witness (least object/morphism choices) when F is an
// equivalence.
std::optional<EquivalenceWitness> equivalence_witness(const Functor& f);

// Every isomorphism with source in the image lifts with prescribed source.
bool is_isofibration(const Functor& f);

struct LiftingProblem {
  Functor left;    // i : A -> B
  Functor right;   // p : X -> Y
  Functor top;     // A -> X
  Functor bottom;  // B -> Y
  // Checks the outer square commutes: right o top == bottom o left.
  Report validate() const;
};

// Deterministic backtracking search for a diagonal filler B -> X making
// both triangles commute; nullopt after exhaustive search.  Throws on a
// non-commuting square.
std::optional<Functor> solve_rlp(const LiftingProblem& p);

// p has the right lifting property against i: every commuting square
// (enumerated exhaustively over functor pairs) admits a filler.
bool has_rlp(const Functor& i, const Functor& p, long budget = 2'000'000);

struct MapClassification {
  bool cofibration = false;        // monic on objects
  bool fibration = false;          // isofibration
  bool weak_equivalence = false;   // equivalence of categories
  // (equivalence and surjective on objects) agrees with RLP against the
  // three boundary maps.
  bool acyclic_fibration_rlp_agrees = false;
};
MapClassification classify_map(const Functor& f);

// ---- enumeration ----------------------------------------------------------

std::vector<Functor> enumerate_functors(CatPtr a, CatPtr b, long budget = 2'000'000);
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g, long budget = 2'000'000);

struct FunctorCategory {
  CatPtr cat;                       // objects index `objects`, morphisms index `transformations`
  std::vector<Functor> objects;
  std::vector<NatTrans> transformations;
};
FunctorCategory functor_category(CatPtr a, CatPtr b, long budget = 2'000'000);

// The functor [A, F] : [A, B] -> [A, B'] induced by postcomposition.
Functor postcompose_functor(const FunctorCategory& src, const FunctorCategory& dst, const Functor& f);

// ---- Gabriel factorization -------------------------------------------------

struct GabrielFactorization {
  Functor gamma;  // identity on objects, essentially surjective
  CatPtr mid;
  Functor delta;  // fully faithful
};
// F = delta o gamma with Ob(mid) = Ob(dom F) and mid(c,d) = cod(F)(Fc, Fd).
GabrielFactorization gabriel_factorize(const Functor& f);

}  // namespace fincat
