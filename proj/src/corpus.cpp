#include "corpus.hpp"

#include <map>

#include "sweep.hpp"

#include <sstream>

#include "freeperm.hpp"

namespace corpus {

using fincat::CatPtr;
using fincat::Id;

std::vector<CatPtr> lifting_base_categories() {
  using namespace fincat::builtins;
  static std::vector<CatPtr> cats = [] {
    std::vector<CatPtr> out{empty(),    terminal(),  arrow_i(),  discrete2(), iso_j(),
                            two_chain(), boundary2(), discrete(3), chaotic(2)};
    // a monoid endomorphism category: one object with an idempotent
    fincat::FinCategory idem;
    idem.name = "idem";
    idem.add_object();
    const Id e = idem.add_morphism(0, 0);
    idem.set_compose(e, e, e);
    out.push_back(fincat::make_cat(std::move(idem)));
    // parallel pair 0 => 1
    fincat::FinCategory pp;
    pp.name = "pair";
    pp.add_object();
    pp.add_object();
    pp.add_morphism(0, 1);
    pp.add_morphism(0, 1);
    out.push_back(fincat::make_cat(std::move(pp)));
    return out;
  }();
  return cats;
}

std::vector<fincat::Functor> random_functors(int count, unsigned seed, long budget) {
  std::mt19937 rng(seed);
  auto bases = lifting_base_categories();
  // derived pool: full subcategories of pairwise products with <= 4
  // objects and <= 14 morphisms
  std::vector<CatPtr> pool = bases;
  for (size_t a = 1; a < bases.size(); ++a)
    for (size_t b = 1; b < bases.size(); ++b) {
      if (bases[a]->num_objects() * bases[b]->num_objects() == 0) continue;
      auto prod = fincat::product(bases[a], bases[b]);
      if (prod.cat->num_objects() <= 4 && prod.cat->num_morphisms() <= 14) pool.push_back(prod.cat);
    }
  std::vector<fincat::Functor> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && ++guard < count * 50) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    if (a->num_objects() > 4 || b->num_objects() > 4) continue;
    std::vector<fincat::Functor> fs;
    try {
      fs = fincat::enumerate_functors(a, b, budget);
    } catch (const fincat::BudgetExceeded&) {
      continue;
    }
    if (fs.empty()) continue;
    out.push_back(fs[rng() % fs.size()]);
  }
  return out;
}

permcat::Monoid trivial_monoid() {
  permcat::Monoid m;
  m.name = "1";
  m.order = 1;
  m.unit = 0;
  m.mul = {0};
  return m;
}

permcat::Monoid z2() {
  permcat::Monoid m;
  m.name = "z2";
  m.order = 2;
  m.unit = 0;
  m.mul = {0, 1, 1, 0};
  return m;
}

permcat::Monoid z3() {
  permcat::Monoid m;
  m.name = "z3";
  m.order = 3;
  m.unit = 0;
  m.mul = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  return m;
}

permcat::Monoid z4() {
  permcat::Monoid m;
  m.name = "z4";
  m.order = 4;
  m.unit = 0;
  m.mul = {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
  return m;
}

permcat::Monoid bool2() {
  permcat::Monoid m;
  m.name = "bool2";
  m.order = 2;
  m.unit = 0;
  m.mul = {0, 1, 1, 1};
  return m;
}

permcat::Monoid sat3() {
  permcat::Monoid m;
  m.name = "sat3";
  m.order = 3;
  m.unit = 0;
  m.mul = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  return m;
}

std::vector<permcat::Monoid> monoids_up_to_4() {
  return {trivial_monoid(), z2(), z3(), z4(), bool2(), sat3()};
}

std::vector<permcat::PermPtr> perm_corpus() {
  std::vector<permcat::PermPtr> out;
  for (const auto& m : monoids_up_to_4()) out.push_back(permcat::discrete_perm(m));
  // chaotic categories over the discrete monoids of order <= 3
  out.push_back(permcat::chaotic_perm(permcat::discrete_perm(z2())).ec);
  out.push_back(permcat::chaotic_perm(permcat::discrete_perm(z3())).ec);
  // truncated free permutative categories
  out.push_back(freeperm::free_perm(fincat::builtins::terminal(), 2).cat);
  out.push_back(freeperm::free_perm(fincat::builtins::discrete2(), 2).cat);
  return out;
}

std::vector<std::string> names() {
  return {"1",   "z2",  "z3",   "z4",      "bool2",    "sat3",
          "e-z2", "e-z3", "s1-2", "s-di-2"};
}

permcat::PermPtr perm_by_name(const std::string& name) {
  auto all = perm_corpus();
  auto keys = names();
  for (size_t i = 0; i < keys.size(); ++i)
    if (keys[i] == name) return all[i];
  throw std::invalid_argument("unknown corpus name: " + name);
}

RlpOracleResult rlp_oracle(const std::vector<fincat::Functor>& fs, bool parallel, long budget) {
  using fincat::CatPtr;
  using fincat::Functor;
  // probe legs of the generating (acyclic) cofibrations
  const Functor i0 = fincat::builtins::i0();
  const Functor i1 = fincat::builtins::i1();
  const Functor d0 = fincat::builtins::d0();
  const Functor d1 = fincat::builtins::d1();
  const Functor d2 = fincat::builtins::d2();
  // cache functors out of each probe (co)domain into every category seen
  std::map<std::pair<const fincat::FinCategory*, const fincat::FinCategory*>, std::vector<Functor>>
      cache;
  auto cached = [&](const CatPtr& probe, const CatPtr& target) -> const std::vector<Functor>& {
    auto key = std::make_pair(probe.get(), target.get());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fincat::enumerate_functors(probe, target, budget)).first;
    return it->second;
  };
  for (const auto& f : fs) {
    for (const auto& leg : {i0, i1, d0, d1, d2}) {
      cached(leg.dom, f.dom);
      cached(leg.cod, f.cod);
    }
  }
  auto rlp_cached = [&](const Functor& leg, const Functor& p) {
    const auto& tops = cached(leg.dom, p.dom);
    const auto& bottoms = cached(leg.cod, p.cod);
    for (const auto& top : tops) {
      const Functor pt = fincat::compose(p, top);
      for (const auto& bottom : bottoms) {
        if (!(pt == fincat::compose(bottom, leg))) continue;
        if (!fincat::solve_rlp({leg, p, top, bottom}).has_value()) return false;
      }
    }
    return true;
  };
  RlpOracleResult out;
  const auto mode = parallel ? sweep::Mode::Parallel : sweep::Mode::Serial;
  out.iso_disagreements =
      sweep::failing_indices(static_cast<long>(fs.size()), mode, [&](long i) {
        const auto& f = fs[static_cast<size_t>(i)];
        const bool fib = fincat::is_isofibration(f);
        return fib == rlp_cached(i0, f) && fib == rlp_cached(i1, f);
      });
  out.acyclic_disagreements =
      sweep::failing_indices(static_cast<long>(fs.size()), mode, [&](long i) {
        const auto& f = fs[static_cast<size_t>(i)];
        const bool acy = fincat::is_fully_faithful(f) && fincat::is_essentially_surjective(f) &&
                         f.surjective_on_objects();
        const bool rlp = rlp_cached(d0, f) && rlp_cached(d1, f) && rlp_cached(d2, f);
        return acy == rlp;
      });
  return out;
}

std::string describe(const std::string& name) {
  auto p = perm_by_name(name);
  std::ostringstream os;
  os << name << ": permutative category '" << p->name << "' with " << p->nob() << " objects, "
     << p->base->num_morphisms() << " morphisms, unit " << p->unit
     << (p->bounded ? ", bounded presentation" : "") << "\n";
  os << "  permutative axioms: " << (permcat::check_permutative(*p).ok() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace corpus
