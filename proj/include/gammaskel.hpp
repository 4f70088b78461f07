#pragma once

#include <string>
#include <vector>

// Skeletal categories of finite based sets (objects n+ = {0,1,...,n} with
// basepoint 0) and finite unbased sets (objects n_ = {1,...,n}), together
// with the structural maps the rest of the toolkit consumes: support,
// inert/active factorization, block projections, multiplication, smash,
// block sums and block symmetries.

namespace gammaskel {

// A map of based sets n+ -> m+.  The basepoint assignment 0 -> 0 is
// implicit; `values[i-1]` is the image of i for 1 <= i <= n, with 0
// denoting the basepoint of m+.
struct BasedMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  BasedMap() = default;
  BasedMap(int n, int m, std::vector<int> v);

  static BasedMap identity(int n);
  static BasedMap zero(int n, int m);

  // image of i, 0 <= i <= dom
  int operator()(int i) const { return i == 0 ? 0 : values[i - 1]; }

  bool operator==(const BasedMap&) const = default;
  bool operator<(const BasedMap& o) const;
};

// A map of unbased sets r_ -> s_; values[i-1] in {1,...,s}.
struct UnbasedMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  UnbasedMap() = default;
  UnbasedMap(int r, int s, std::vector<int> v);

  static UnbasedMap identity(int r);

  int operator()(int i) const { return values[i - 1]; }

  bool is_bijection() const;

  bool operator==(const UnbasedMap&) const = default;
  bool operator<(const UnbasedMap& o) const;
};

BasedMap compose(const BasedMap& g, const BasedMap& f);
UnbasedMap compose(const UnbasedMap& g, const UnbasedMap& f);

// All based maps n+ -> m+ in lexicographic order of their value arrays;
// exactly (m+1)^n of them.
std::vector<BasedMap> enumerate_based_maps(int n, int m);

// All unbased maps r_ -> s_ in lexicographic order; s^r of them (none if
// s = 0 < r).
std::vector<UnbasedMap> enumerate_unbased_maps(int r, int s);

// Supp(f): the largest subset of n_ whose image avoids the basepoint,
// together with the order-preserving relabelling of n+ onto |Supp(f)|+
// (which is exactly the inert part of f).
struct Support {
  std::vector<int> elements;  // increasing subset of {1..n}
  BasedMap projection;        // n+ -> |elements|+, the support projection
};
Support support(const BasedMap& f);

// f is the order-preserving projection of its domain onto its support.
bool is_inert(const BasedMap& f);
// f sends only the basepoint to the basepoint.
bool is_active(const BasedMap& f);

struct InertActive {
  BasedMap inert;   // n+ -> |Supp(f)|+
  BasedMap active;  // |Supp(f)|+ -> m+
};
// f = active o inert, the unique such decomposition.
InertActive factor_inert_active(const BasedMap& f);

// The projection map f_S : n+ -> |S|+ determined by a subset S of n_
// (elements of S relabelled in increasing order, everything else killed).
BasedMap projection_onto(int n, const std::vector<int>& s);

// delta^{k+l}_k : (k+l)+ -> k+, keeps the first block.
BasedMap delta_left(int k, int l);
// delta^{k+l}_l : (k+l)+ -> l+, keeps the second block.
BasedMap delta_right(int k, int l);
// The unique multiplication map m_n : n+ -> 1+.
BasedMap multiplication(int n);

// n+ ^ m+ = (nm)+ under the fixed identification (i,j) |-> (i-1)m + j.
int smash_object(int n, int m);
BasedMap smash_map(const BasedMap& f, const BasedMap& g);
// The symmetry (nm)+ -> (mn)+ of the smash identification, (i,j) |-> (j,i).
BasedMap smash_symmetry(int n, int m);

// gamma_N(k,l) : k+l -> l+k, the block swap in the unbased skeleton.
UnbasedMap symmetry_N(int k, int l);
// Block sum f+g : (k+l) -> (k'+l').
UnbasedMap plus_N(const UnbasedMap& f, const UnbasedMap& g);
// The active lift f^+ : r+ -> s+ of an unbased map.
BasedMap active_lift(const UnbasedMap& f);
// Restriction of an active map away from the basepoint.
UnbasedMap unbased_part(const BasedMap& f);

// Text form "f: n->m [v1,...,vn]" used in logs and reports.
std::string to_text(const BasedMap& f);
std::string to_text(const UnbasedMap& f);

}  // namespace gammaskel
