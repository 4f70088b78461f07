#pragma once

#include <random>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "permcat.hpp"

// The built-in corpus the suites and the CLI address by name: small base
// categories for the lifting oracles, commutative monoids of order <= 4,
// and the permutative corpus (discrete monoids, chaotic categories,
// truncated free permutative categories).

namespace corpus {

// categories with <= 3 objects and <= 7 morphisms
std::vector<fincat::CatPtr> lifting_base_categories();

// seeded random functors between categories with <= 4 objects, drawn from
// full subcategories of pairwise products of the base corpus
std::vector<fincat::Functor> random_functors(int count, unsigned seed, long budget = 200'000);

permcat::Monoid trivial_monoid();
permcat::Monoid z2();
permcat::Monoid z3();
permcat::Monoid z4();
permcat::Monoid bool2();  // {0,1} with or
permcat::Monoid sat3();   // saturating addition on {0,1,2}
std::vector<permcat::Monoid> monoids_up_to_4();

// the permutative corpus used by the property suites
std::vector<permcat::PermPtr> perm_corpus();

// named lookup for the CLI
std::vector<std::string> names();
permcat::PermPtr perm_by_name(const std::string& name);
std::string describe(const std::string& name);

// The two lifting-property oracles over a functor corpus, with the probe
// enumerations cached per category so the sweep stays flat.
struct RlpOracleResult {
  std::vector<long> iso_disagreements;      // is_isofibration vs RLP(i0), RLP(i1)
  std::vector<long> acyclic_disagreements;  // surjective equivalence vs RLP(boundaries)
};
RlpOracleResult rlp_oracle(const std::vector<fincat::Functor>& corpus, bool parallel,
                           long budget = 2'000'000);

}  // namespace corpus
