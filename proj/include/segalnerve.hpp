#pragma once

#include <map>
#include <vector>

#include "gammacat.hpp"
#include "gammaskel.hpp"
#include "permcat.hpp"

// The Segal nerve: indexing categories built from sequences of subsets or
// based maps, the coreflective/reflective adjunctions between them, Segal
// bicycles and the nerve degrees they present, the wedge inclusion, and
// the truncated thickened nerve of pseudo bicycles.

namespace segalnerve {

using fincat::CatPtr;
using fincat::Functor;
using fincat::Id;
using fincat::kNone;
using fincat::Report;
using gammaskel::BasedMap;
using gammaskel::UnbasedMap;

using Subset = unsigned;  // bitmask over {1..n}

int popcount(Subset s);
std::vector<int> elements(Subset s);
// preimage of a subset of m under f : n+ -> m+
Subset preimage(const BasedMap& f, Subset s);

// ---- Segal bicycles and the nerve -------------------------------------------

// (Psi, sigma, u): Psi over all subsets of n, sigma over disjoint pairs,
// u : Psi(empty) -> unit.
struct SegalBicycle {
  int n = 0;
  std::vector<Id> psi;    // size 2^n
  std::vector<Id> sigma;  // size 2^n * 2^n, kNone off the disjoint locus
  Id u = kNone;
  Id sigma_at(Subset s, Subset t) const { return sigma[(static_cast<size_t>(s) << n) | t]; }
  void set_sigma(Subset s, Subset t, Id m) { sigma[(static_cast<size_t>(s) << n) | t] = m; }
  std::vector<Id> key() const;  // canonical identity for indexing
};

// SB.1 unit, SB.2 associativity, SB.3 symmetry, plus typing.
Report bicycle_conditions(const permcat::PermCategory& c, const SegalBicycle& b);

struct NerveDegree {
  permcat::PermPtr target;
  int n = 0;
  CatPtr cat;
  std::vector<SegalBicycle> objects;
  std::vector<std::vector<Id>> components;  // per morphism: tau(S) per subset
  Id object_of(const SegalBicycle& b) const;
};
NerveDegree nerve_degree(permcat::PermPtr c, int n, long budget = 2'000'000);

// The full nerve as a truncated Gamma-category, with a handle on the
// bicycle presentations per degree.
struct SegalNerve {
  gammacat::GammaCategory gamma;
  std::vector<NerveDegree> degrees;
};
SegalNerve segal_nerve(permcat::PermPtr c, int n_max, long budget = 2'000'000);

// ---- indexing categories ------------------------------------------------------

// L(n) (and the wedge fragment): sequences of subsets with bijections
// over n as morphisms, concatenation tensor, block-swap symmetry.
struct SubsetSeqCategory {
  int n = 0;
  permcat::PermPtr cat;
  std::vector<std::vector<Subset>> objects;
  // per morphism: flattened position bijection (support positions, blocks
  // in order, elements increasing within a block)
  std::vector<std::vector<int>> mor_perm;
  Id object_of(const std::vector<Subset>& seq) const;
  Id morphism_of(Id src, Id tgt, const std::vector<int>& p) const;
};
SubsetSeqCategory build_L(int n, int max_len, long budget = 2'000'000);
// Objects restricted to sequences of empty or singleton subsets.
SubsetSeqCategory build_wedge(int n, int max_len, long budget = 2'000'000);

// morphism data of the sequence categories, used by the adjunction checks
struct PMor {
  UnbasedMap h;        // target index -> source index
  std::vector<int> p;  // flattened support-position bijection
  bool operator==(const PMor&) const = default;
};
struct LMor {
  UnbasedMap h;
  std::vector<int> q;  // flattened codomain positions
  std::vector<int> p;
  bool operator==(const LMor&) const = default;
};

// P-Lbb(n): sequences of subsets, morphisms (h, p).
std::vector<std::vector<Subset>> plbb_objects(int n, int max_len);
std::vector<PMor> plbb_homs(int n, const std::vector<Subset>& s, const std::vector<Subset>& t);
PMor plbb_compose(const std::vector<Subset>& s, const PMor& first, const PMor& second);

// Lbb(n): sequences of based maps out of n+, morphisms (h, q, p).
std::vector<std::vector<BasedMap>> lbb_objects(int n, int max_len, int max_entry);
std::vector<LMor> lbb_homs(int n, const std::vector<BasedMap>& f, const std::vector<BasedMap>& g);
LMor lbb_compose(const std::vector<BasedMap>& f, const LMor& first, const LMor& second);

// QL''(n): value sequences with value-preserving bijections.
std::vector<std::vector<int>> ql_objects(int n, int max_len);
std::vector<std::vector<int>> ql_homs(const std::vector<int>& s, const std::vector<int>& t);

// Lbar(n): the groupoid with map sequences as objects and support
// bijections over n as morphisms.
std::vector<std::vector<int>> lbar_homs(int n, const std::vector<BasedMap>& f,
                                        const std::vector<BasedMap>& g);

// The coreflective adjunction (iota -| G) between P-Lbb(n) and Lbb(n):
// G iota = id, epsilon = (id, tot(f), id), naturality and both triangles.
// Triangles run over every fragment object; the naturality sweep caps its
// sequence length at nat_len (default: max_len) to keep the morphism
// enumeration flat.
Report verify_coreflective(int n, int max_len, int max_entry, long budget = 2'000'000,
                           int nat_len = -1);
// The reflective adjunction (H -| iota) between QL''(n) and P-Lbb(n):
// H iota = id, eta = (Ind o can^{-1}, id), naturality and both triangles,
// including eta(iota(s)) = id and H(eta(S)) = id pointwise.
Report verify_reflective(int n, int max_len, long budget = 2'000'000);

// The isomorphism J(n) between the Grothendieck fragment over Gamma^n and
// Lbb(n): identity on objects, hom bijections, composition preservation.
Report iso_compare_J(int n, int max_len, int max_entry, long budget = 2'000'000);

// G o Lbb(f)-action o iota agrees with the preimage action on P-Lbb
// fragments.
Report plbb_action_naturality(int n, int m, int max_len, long budget = 2'000'000);

// wedge inclusion: monic on objects, fully faithful on the common
// fragment, every L(n) object isomorphic to its singleton split.
Report wedge_inclusion_check(int n, int max_len, long budget = 2'000'000);

// ---- bicycles as strict SM functors -------------------------------------------

// Convert a bicycle into a strict SM functor on the L(n) fragment and
// back; both composites are checked to be identities, and hom-sets are
// compared against the enumerated functor category.
Report bicycle_roundtrip(permcat::PermPtr c, int n, int max_len, long budget = 2'000'000);
permcat::StrictSMFunctor bicycle_to_functor(const NerveDegree& deg, const SubsetSeqCategory& ln,
                                            Id bicycle);
SegalBicycle functor_to_bicycle(const SubsetSeqCategory& ln, const permcat::StrictSMFunctor& f);

// ---- thickened nerve ------------------------------------------------------------

struct PseudoBicycle {
  int n = 0, bound = 0;
  std::vector<Id> c;                       // per map in A_n (codomain <= bound)
  std::map<std::pair<int, int>, Id> alpha; // (h index, f index) -> morphism
  std::map<std::tuple<int, int, int>, Id> sigma;  // (k, l, f index)
  std::map<int, Id> u;                     // f with codomain 0+
};

struct ThickenedDegree {
  permcat::PermPtr target;
  int n = 0, bound = 0;
  std::vector<BasedMap> index_maps;          // A_n up to the bound
  std::vector<UnbasedMap> transition_maps;   // maps of N between degrees <= bound
  CatPtr cat;
  std::vector<PseudoBicycle> objects;
  std::vector<std::vector<Id>> components;   // per morphism: F(f) per index map
};
// Truncated pseudo Segal bicycles with PSB.1-4 checked inside the bound;
// the default bound n+1 is the smallest exercising all four axioms.
ThickenedDegree thickened_nerve_degree(permcat::PermPtr c, int n, int bound, long budget = 2'000'000);

// The comparison functor K(C)(n+) -> Kbar_{<=M}(C)(n+) (strict where
// forced) is injective on objects and fully faithful.
Report thickened_comparison(const NerveDegree& deg, const ThickenedDegree& thick);

}  // namespace segalnerve
