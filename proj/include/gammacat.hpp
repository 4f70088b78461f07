#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fincat.hpp"
#include "gammaskel.hpp"

// Truncated Gamma-categories: a finite category per degree 0..N and a
// functor per based map between degrees, together with representables,
// the Segal condition, Day convolution (coend quotient with a co-Yoneda
// fast path for representables) and smash precomposition.

namespace gammacat {

using fincat::CatPtr;
using fincat::Functor;
using fincat::Id;
using fincat::kNone;
using fincat::Report;
using gammaskel::BasedMap;

struct GammaCategory {
  std::string name;
  int truncation = 0;
  std::vector<CatPtr> degrees;           // index n = degree n
  std::map<BasedMap, Functor> actions;   // every based map between degrees <= N

  const Functor& action(const BasedMap& f) const;
  bool has_action(const BasedMap& f) const { return actions.count(f) > 0; }
};

// X(id) = id and X(g o f) = X(g) o X(f) for all composable pairs within
// the truncation; every action present and valid.
Report functoriality_audit(const GammaCategory& x);

// Gamma^n truncated at N: degree k is the discrete category on the based
// maps n+ -> k+, action by postcomposition.
GammaCategory representable_gamma(int n, int trunc);
// Degreewise terminal Gamma-category.
GammaCategory constant_terminal(int trunc);

// index of a based map inside the object list of a representable degree
Id representable_object(int n, const BasedMap& f);
BasedMap representable_map_of(int n, int degree, Id ob);

// The Segal comparison functor X((k+l)+) -> X(k+) x X(l+).
struct SegalComparison {
  fincat::ProductCategory prod;
  Functor comparison;
};
SegalComparison segal_comparison(const GammaCategory& x, int k, int l);

// Empty report iff every comparison functor with k+l <= N is an
// equivalence and X(0+) is equivalent to the terminal category.
Report segal_check(const GammaCategory& x);

// OL.2 symmetry square for the oplax restriction components at (k, l).
Report oplax_restriction_symmetry(const GammaCategory& x, int k, int l);

// ---- Day convolution ---------------------------------------------------------

// One degree of X * Y realized as a quotient of the disjoint union of
// Gamma(k ^ l, n) x X(k+) x Y(l+) over k, l <= bound by the coend
// zig-zag relations.
struct DayDegree {
  CatPtr cat;
  struct ObTriple {
    BasedMap phi;  // k ^ l -> n
    int k = 0, l = 0;
    Id x = kNone, y = kNone;  // objects of X(k+), Y(l+)
  };
  struct MorTriple {
    BasedMap phi;
    int k = 0, l = 0;
    Id xi = kNone, upsilon = kNone;  // morphisms of X(k+), Y(l+)
  };
  std::vector<ObTriple> ob_rep;    // representative per object class
  std::vector<MorTriple> mor_rep;  // representative per morphism class
  // class lookup, keyed by the full summand datum (k, l, phi, -, -)
  Id ob_class(const ObTriple& t) const;
  Id mor_class(const MorTriple& t) const;
  using Key = std::tuple<int, int, BasedMap, Id, Id>;
  std::map<Key, Id> ob_index;
  std::map<Key, Id> mor_index;
};

struct DayConvolution {
  GammaCategory gamma;            // the resulting truncated Gamma-category
  std::vector<DayDegree> degree;  // per degree, aligned with gamma.degrees
  int bound = 0;                  // coend summand bound on k, l
};

// Day convolution X * Y truncated at `trunc`; the coend runs over
// k, l <= bound (default: the smaller input truncation).  Throws
// fincat::BudgetExceeded when a morphism-class composite cannot be
// represented inside the bound.
DayConvolution day_convolve(const GammaCategory& x, const GammaCategory& y, int trunc, int bound = -1);

// Isomorphism checks used by the unit/symmetry/representable laws.  Each
// returns an empty report iff the stated levelwise isomorphism holds
// (bijective on objects and morphisms, functorial, action-compatible).
Report day_unit_iso(const DayConvolution& xy, const GammaCategory& x);
Report day_symmetry_iso(const DayConvolution& xy, const DayConvolution& yx);
// Cross-check for representable inputs: X * Y at degree n is
// Gamma(a ^ b, n) via (phi, f, g) -> phi o (f ^ g).
Report day_coyoneda_check(const DayConvolution& xy, int a, int b);

// ---- smash precomposition ------------------------------------------------------

// X(n+ ^ -) truncated at `trunc`; requires n * trunc <= X.truncation.
GammaCategory smash_precompose(const GammaCategory& x, int n, int trunc);

}  // namespace gammacat
