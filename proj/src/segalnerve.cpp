#include "segalnerve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "leinster.hpp"

namespace segalnerve {

using permcat::PermCategory;

int popcount(Subset s) { return __builtin_popcount(s); }

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset preimage(const BasedMap& f, Subset s) {
  Subset out = 0;
  for (int i = 1; i <= f.dom; ++i) {
    const int v = f(i);
    if (v != 0 && (s & (1u << (v - 1)))) out |= 1u << (i - 1);
  }
  return out;
}

std::vector<Id> SegalBicycle::key() const {
  std::vector<Id> k = psi;
  k.push_back(u);
  for (Id s : sigma) k.push_back(s);
  return k;
}

Report bicycle_conditions(const PermCategory& c, const SegalBicycle& b) {
  Report r;
  const fincat::FinCategory& base = *c.base;
  const Subset full = (1u << b.n) - 1u;
  if (b.u == kNone || base.src(b.u) != b.psi[0] || base.tgt(b.u) != c.unit || !base.is_invertible(b.u)) {
    r.add("bicycle-unit", "u is not an isomorphism Psi(empty) -> unit");
    return r;
  }
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t) {
      if (s & t) continue;
      const Id m = b.sigma_at(s, t);
      const Id tens = c.ob_tensor(b.psi[s], b.psi[t]);
      if (m == kNone || tens == kNone || base.src(m) != b.psi[s | t] || base.tgt(m) != tens ||
          !base.is_invertible(m)) {
        r.add("bicycle-sigma-typing", std::to_string(s) + "," + std::to_string(t));
        return r;
      }
    }
  // SB.1: sigma(S, empty) followed by id x u is the identity (strict units)
  for (Subset s = 0; s <= full; ++s) {
    const Id right = base.compose(c.mor_tensor(base.identity(b.psi[s]), b.u), b.sigma_at(s, 0));
    if (right != base.identity(b.psi[s])) r.add("SB1", "S=" + std::to_string(s));
    const Id left = base.compose(c.mor_tensor(b.u, base.identity(b.psi[s])), b.sigma_at(0, s));
    if (left != base.identity(b.psi[s])) r.add("SB1", "S=" + std::to_string(s));
  }
  // SB.2: associativity over mutually disjoint triples
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t) {
      if (s & t) continue;
      for (Subset w = 0; w <= full; ++w) {
        if ((s & w) || (t & w)) continue;
        const Id lhs = base.compose(c.mor_tensor(b.sigma_at(s, t), base.identity(b.psi[w])),
                                    b.sigma_at(s | t, w));
        const Id rhs = base.compose(c.mor_tensor(base.identity(b.psi[s]), b.sigma_at(t, w)),
                                    b.sigma_at(s, t | w));
        if (lhs == kNone || lhs != rhs)
          r.add("SB2", std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(w));
      }
    }
  // SB.3: symmetry
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t) {
      if (s & t) continue;
      const Id g = c.gamma(b.psi[s], b.psi[t]);
      if (g == kNone || base.compose(g, b.sigma_at(s, t)) != b.sigma_at(t, s))
        r.add("SB3", std::to_string(s) + "," + std::to_string(t));
    }
  return r;
}

Id NerveDegree::object_of(const SegalBicycle& b) const {
  const auto k = b.key();
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].key() == k) return static_cast<Id>(i);
  return kNone;
}

NerveDegree nerve_degree(permcat::PermPtr c, int n, long budget) {
  NerveDegree out;
  out.target = c;
  out.n = n;
  const PermCategory& p = *c;
  const fincat::FinCategory& base = *p.base;
  const Subset full = (1u << n) - 1u;
  const int nsub = 1 << n;

  // ordered list of disjoint pairs
  std::vector<std::pair<Subset, Subset>> pairs;
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t)
      if (!(s & t)) pairs.push_back({s, t});

  long nodes = budget;
  std::vector<Id> psi(nsub, 0);
  const int nob = base.num_objects();
  std::function<void()> try_psi = [&]() {
    SegalBicycle b;
    b.n = n;
    b.psi = psi;
    b.sigma.assign(static_cast<size_t>(nsub) * nsub, kNone);
    // enumerate u then sigma by backtracking with the conditions checked at
    // the end (component sets are tiny on the corpus)
    std::vector<Id> u_candidates;
    for (Id m : base.hom(psi[0], p.unit))
      if (base.is_invertible(m)) u_candidates.push_back(m);
    if (u_candidates.empty()) return;
    std::function<void(size_t)> assign = [&](size_t idx) {
      if (idx == pairs.size()) {
        if (bicycle_conditions(p, b).ok()) {
          out.objects.push_back(b);
          if (static_cast<long>(out.objects.size()) > budget)
            throw fincat::BudgetExceeded("nerve object budget");
        }
        return;
      }
      const auto [s, t] = pairs[idx];
      const Id tens = p.ob_tensor(psi[s], psi[t]);
      if (tens == kNone) return;
      for (Id m : base.hom(psi[s | t], tens)) {
        if (!base.is_invertible(m)) continue;
        if (--nodes < 0) throw fincat::BudgetExceeded("nerve sigma budget");
        b.set_sigma(s, t, m);
        // cheap early rejections: SB.3 against the mirrored pair when known
        const Id mirror = b.sigma_at(t, s);
        if (mirror != kNone) {
          const Id g = p.gamma(psi[s], psi[t]);
          if (g == kNone || base.compose(g, m) != mirror) {
            b.set_sigma(s, t, kNone);
            continue;
          }
        }
        assign(idx + 1);
        b.set_sigma(s, t, kNone);
      }
    };
    for (Id u : u_candidates) {
      b.u = u;
      assign(0);
    }
  };
  // odometer over psi assignments
  if (nob > 0) {
    while (true) {
      if (--nodes < 0) throw fincat::BudgetExceeded("nerve psi budget");
      try_psi();
      int i = nsub - 1;
      while (i >= 0 && psi[i] == nob - 1) psi[i--] = 0;
      if (i < 0) break;
      ++psi[i];
    }
  }

  // morphisms: families tau(S) with the sigma and u squares
  fincat::FinCategory k;
  k.name = "K(" + p.name + ")(" + std::to_string(n) + "+)";
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();
  out.components.resize(out.objects.size());
  std::map<std::tuple<Id, Id, std::vector<Id>>, Id> midx;
  for (size_t i = 0; i < out.objects.size(); ++i) {
    std::vector<Id> comp(nsub);
    for (int s = 0; s < nsub; ++s) comp[s] = base.identity(out.objects[i].psi[s]);
    out.components[k.identity(static_cast<Id>(i))] = comp;
    midx[{static_cast<Id>(i), static_cast<Id>(i), comp}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      const SegalBicycle& a = out.objects[i];
      const SegalBicycle& b = out.objects[j];
      std::vector<Id> comp(nsub, kNone);
      std::function<void(int)> assign = [&](int s) {
        if (s == nsub) {
          if (!midx.count({static_cast<Id>(i), static_cast<Id>(j), comp})) {
            if (++total > budget) throw fincat::BudgetExceeded("nerve morphism budget");
            const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
            midx[{static_cast<Id>(i), static_cast<Id>(j), comp}] = m;
            out.components.push_back(comp);
          }
          return;
        }
        for (Id t : base.hom(a.psi[s], b.psi[s])) {
          comp[s] = t;
          bool ok = true;
          if (s == 0 && base.compose(b.u, t) != a.u) ok = false;
          // sigma squares whose union is s and parts already assigned
          for (Subset x = 0; x <= static_cast<Subset>(s) && ok; ++x) {
            const Subset y = static_cast<Subset>(s) & ~x;
            if ((x | y) != static_cast<Subset>(s) || (x & y)) continue;
            if (comp[x] == kNone || comp[y] == kNone) continue;
            const Id lhs = base.compose(b.sigma_at(x, y), comp[s]);
            const Id rhs = base.compose(p.mor_tensor(comp[x], comp[y]), a.sigma_at(x, y));
            if (lhs != rhs || lhs == kNone) ok = false;
          }
          if (ok) assign(s + 1);
          comp[s] = kNone;
        }
      };
      assign(0);
    }
  for (size_t m1 = 0; m1 < out.components.size(); ++m1)
    for (size_t m2 = 0; m2 < out.components.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      std::vector<Id> comp(nsub);
      for (int s = 0; s < nsub; ++s) comp[s] = base.compose(out.components[m2][s], out.components[m1][s]);
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1),
                    midx.at({k.src(static_cast<Id>(m1)), k.tgt(static_cast<Id>(m2)), comp}));
    }
  out.cat = fincat::make_cat(std::move(k));
  return out;
}

SegalNerve segal_nerve(permcat::PermPtr c, int n_max, long budget) {
  SegalNerve out;
  out.gamma.name = "K(" + c->name + ")";
  out.gamma.truncation = n_max;
  for (int n = 0; n <= n_max; ++n) {
    out.degrees.push_back(nerve_degree(c, n, budget));
    out.gamma.degrees.push_back(out.degrees.back().cat);
  }
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b)
      for (const auto& f : gammaskel::enumerate_based_maps(a, b)) {
        const NerveDegree& da = out.degrees[a];
        const NerveDegree& db = out.degrees[b];
        const int nsub_b = 1 << b;
        std::vector<Id> ob(da.cat->num_objects()), mor(da.cat->num_morphisms());
        for (Id o = 0; o < da.cat->num_objects(); ++o) {
          SegalBicycle img;
          img.n = b;
          img.psi.resize(nsub_b);
          img.sigma.assign(static_cast<size_t>(nsub_b) * nsub_b, kNone);
          for (Subset s = 0; s < static_cast<Subset>(nsub_b); ++s)
            img.psi[s] = da.objects[o].psi[preimage(f, s)];
          for (Subset s = 0; s < static_cast<Subset>(nsub_b); ++s)
            for (Subset t = 0; t < static_cast<Subset>(nsub_b); ++t)
              if (!(s & t)) img.set_sigma(s, t, da.objects[o].sigma_at(preimage(f, s), preimage(f, t)));
          img.u = da.objects[o].u;
          ob[o] = db.object_of(img);
          if (ob[o] == kNone) throw std::logic_error("nerve action: image bicycle missing");
        }
        for (Id m = 0; m < da.cat->num_morphisms(); ++m) {
          std::vector<Id> comp(nsub_b);
          for (Subset s = 0; s < static_cast<Subset>(nsub_b); ++s)
            comp[s] = da.components[m][preimage(f, s)];
          // locate
          Id found = kNone;
          const Id so = ob[da.cat->src(m)], to = ob[da.cat->tgt(m)];
          for (Id cand : db.cat->hom(so, to))
            if (db.components[cand] == comp) {
              found = cand;
              break;
            }
          if (found == kNone) throw std::logic_error("nerve action: image morphism missing");
          mor[m] = found;
        }
        out.gamma.actions.emplace(f, Functor(da.cat, db.cat, std::move(ob), std::move(mor)));
      }
  return out;
}

// ---- subset-sequence categories -----------------------------------------------

namespace {

std::vector<std::vector<Subset>> subset_sequences(int n, int max_len, bool singletons_only,
                                                  long budget) {
  std::vector<Subset> pool;
  const Subset full = (1u << n) - 1u;
  for (Subset s = 0; s <= full; ++s)
    if (!singletons_only || popcount(s) <= 1) pool.push_back(s);
  std::vector<std::vector<Subset>> out;
  out.push_back({});
  std::vector<size_t> w;
  for (int len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      std::vector<Subset> seq(len);
      for (int i = 0; i < len; ++i) seq[i] = pool[w[i]];
      out.push_back(seq);
      if (static_cast<long>(out.size()) > budget)
        throw fincat::BudgetExceeded("subset sequence budget");
      int i = len - 1;
      while (i >= 0 && w[i] + 1 == pool.size()) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

// flattened support elements: blocks in order, increasing within a block
std::vector<int> flat_elements(const std::vector<Subset>& seq) {
  std::vector<int> out;
  for (Subset s : seq)
    for (int e : elements(s)) out.push_back(e);
  return out;
}

// all value-preserving bijections between two flats, as position maps
std::vector<std::vector<int>> value_bijections(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> out;
  if (a.size() != b.size()) return out;
  std::map<int, std::vector<int>> apos, bpos;
  for (size_t i = 0; i < a.size(); ++i) apos[a[i]].push_back(static_cast<int>(i));
  for (size_t i = 0; i < b.size(); ++i) bpos[b[i]].push_back(static_cast<int>(i));
  if (apos.size() != bpos.size()) return out;
  for (const auto& [v, lst] : apos) {
    auto it = bpos.find(v);
    if (it == bpos.end() || it->second.size() != lst.size()) return out;
  }
  // product of permutations per value
  std::vector<std::vector<int>> perms{std::vector<int>(a.size(), -1)};
  for (const auto& [v, lst] : apos) {
    const auto& dst = bpos[v];
    std::vector<int> order(dst.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> next;
    do {
      for (const auto& base : perms) {
        auto cand = base;
        for (size_t t = 0; t < lst.size(); ++t) cand[lst[t]] = dst[order[t]];
        next.push_back(std::move(cand));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    perms = std::move(next);
  }
  return perms;
}

SubsetSeqCategory build_subset_seq(int n, int max_len, bool singles, long budget) {
  SubsetSeqCategory out;
  out.n = n;
  out.objects = subset_sequences(n, max_len, singles, budget);
  std::map<std::vector<Subset>, Id> oidx;
  for (size_t i = 0; i < out.objects.size(); ++i) oidx[out.objects[i]] = static_cast<Id>(i);

  fincat::FinCategory k;
  k.name = (singles ? "wedgeL1(" : "L(") + std::to_string(n) + ")<=" + std::to_string(max_len);
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();
  std::map<std::tuple<Id, Id, std::vector<int>>, Id> midx;
  out.mor_perm.resize(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i) {
    std::vector<int> idp(flat_elements(out.objects[i]).size());
    std::iota(idp.begin(), idp.end(), 0);
    out.mor_perm[k.identity(static_cast<Id>(i))] = idp;
    midx[{static_cast<Id>(i), static_cast<Id>(i), idp}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i) {
    const auto fa = flat_elements(out.objects[i]);
    for (size_t j = 0; j < out.objects.size(); ++j) {
      const auto fb = flat_elements(out.objects[j]);
      for (auto& p : value_bijections(fa, fb)) {
        if (midx.count({static_cast<Id>(i), static_cast<Id>(j), p})) continue;
        if (++total > budget) throw fincat::BudgetExceeded("subset sequence morphism budget");
        const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
        midx[{static_cast<Id>(i), static_cast<Id>(j), p}] = m;
        out.mor_perm.push_back(std::move(p));
      }
    }
  }
  for (size_t m1 = 0; m1 < out.mor_perm.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_perm.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      const auto& p1 = out.mor_perm[m1];
      const auto& p2 = out.mor_perm[m2];
      std::vector<int> comp(p1.size());
      for (size_t t = 0; t < p1.size(); ++t) comp[t] = p2[p1[t]];
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1),
                    midx.at({k.src(static_cast<Id>(m1)), k.tgt(static_cast<Id>(m2)), comp}));
    }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = (singles ? "wedgeL1(" : "L(") + std::to_string(n) + ")";
  p.bounded = true;
  p.unit = oidx.at({});
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      std::vector<Subset> cw = out.objects[i];
      cw.insert(cw.end(), out.objects[j].begin(), out.objects[j].end());
      auto it = oidx.find(cw);
      if (it == oidx.end()) continue;
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), it->second);
      // gamma: block swap of flattened positions
      const size_t na = flat_elements(out.objects[i]).size();
      const size_t nb = flat_elements(out.objects[j]).size();
      std::vector<int> swap(na + nb);
      for (size_t t = 0; t < na; ++t) swap[t] = static_cast<int>(nb + t);
      for (size_t t = 0; t < nb; ++t) swap[na + t] = static_cast<int>(t);
      std::vector<Subset> sw = out.objects[j];
      sw.insert(sw.end(), out.objects[i].begin(), out.objects[i].end());
      p.set_gamma(static_cast<Id>(i), static_cast<Id>(j), midx.at({it->second, oidx.at(sw), swap}));
    }
  for (size_t m1 = 0; m1 < out.mor_perm.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_perm.size(); ++m2) {
      const Id s = p.ob_tensor(p.base->src(static_cast<Id>(m1)), p.base->src(static_cast<Id>(m2)));
      const Id t = p.ob_tensor(p.base->tgt(static_cast<Id>(m1)), p.base->tgt(static_cast<Id>(m2)));
      if (s == kNone || t == kNone) continue;
      const auto& p1 = out.mor_perm[m1];
      const auto& p2 = out.mor_perm[m2];
      const int shift = static_cast<int>(flat_elements(out.objects[p.base->tgt(static_cast<Id>(m1))]).size());
      std::vector<int> comp(p1.size() + p2.size());
      for (size_t q = 0; q < p1.size(); ++q) comp[q] = p1[q];
      for (size_t q = 0; q < p2.size(); ++q) comp[p1.size() + q] = shift + p2[q];
      p.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2), midx.at({s, t, comp}));
    }
  // generator metadata: length-one sequences present in the object pool
  std::vector<Id> genpos(1u << n, kNone);
  for (Subset s = 0; s < (1u << n); ++s) {
    auto it2 = oidx.find({s});
    if (it2 == oidx.end()) continue;
    p.generator_objects.push_back(it2->second);
    genpos[s] = static_cast<Id>(p.generator_objects.size()) - 1;
  }
  p.object_word.resize(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (Subset s : out.objects[i]) p.object_word[i].push_back(genpos[s]);
  out.cat = std::make_shared<const PermCategory>(std::move(p));
  return out;
}

}  // namespace

Id SubsetSeqCategory::object_of(const std::vector<Subset>& seq) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == seq) return static_cast<Id>(i);
  return kNone;
}

Id SubsetSeqCategory::morphism_of(Id src, Id tgt, const std::vector<int>& p) const {
  for (Id m = 0; m < static_cast<Id>(mor_perm.size()); ++m)
    if (cat->base->src(m) == src && cat->base->tgt(m) == tgt && mor_perm[m] == p) return m;
  return kNone;
}

SubsetSeqCategory build_L(int n, int max_len, long budget) {
  return build_subset_seq(n, max_len, false, budget);
}

SubsetSeqCategory build_wedge(int n, int max_len, long budget) {
  return build_subset_seq(n, max_len, true, budget);
}

// ---- P-Lbb(n), Lbb(n), QL''(n) as morphism data -------------------------------

std::vector<std::vector<Subset>> plbb_objects(int n, int max_len) {
  return subset_sequences(n, max_len, false, 10'000'000);
}

namespace {

// flattened codomain positions of a based-map sequence: block i supplies
// k_i slots
std::vector<int> cod_sizes(const std::vector<BasedMap>& f) {
  std::vector<int> out;
  for (const auto& m : f) out.push_back(m.cod);
  return out;
}

int flat_size(const std::vector<int>& sizes) {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

int flat_offset(const std::vector<int>& sizes, int block) {  // 1-based block
  int acc = 0;
  for (int i = 1; i < block; ++i) acc += sizes[i - 1];
  return acc;
}

int block_of_pos(const std::vector<int>& sizes, int pos) {  // 0-based pos, 1-based block
  int acc = 0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    acc += sizes[i];
    if (pos < acc) return static_cast<int>(i) + 1;
  }
  return -1;
}

std::vector<int> support_sizes(const std::vector<BasedMap>& f) {
  std::vector<int> out;
  for (const auto& m : f) out.push_back(static_cast<int>(gammaskel::support(m).elements.size()));
  return out;
}

// flattened support values of a based-map sequence
std::vector<int> flat_support(const std::vector<BasedMap>& f) {
  std::vector<int> out;
  for (const auto& m : f)
    for (int e : gammaskel::support(m).elements) out.push_back(e);
  return out;
}

// tot(f): flattened support position -> flattened codomain position
std::vector<int> tot_positions(const std::vector<BasedMap>& f) {
  std::vector<int> out;
  const auto cs = cod_sizes(f);
  for (size_t i = 0; i < f.size(); ++i) {
    for (int e : gammaskel::support(f[i]).elements)
      out.push_back(flat_offset(cs, static_cast<int>(i) + 1) + f[i](e) - 1);
  }
  return out;
}

}  // namespace

std::vector<PMor> plbb_homs(int n, const std::vector<Subset>& s, const std::vector<Subset>& t) {
  (void)n;
  std::vector<PMor> out;
  const int r = static_cast<int>(s.size());
  const int ss = static_cast<int>(t.size());
  std::vector<int> sflat, tflat;
  std::vector<int> sblock, tblock;  // block of each flat position (1-based)
  for (int i = 0; i < r; ++i)
    for (int e : elements(s[i])) {
      sflat.push_back(e);
      sblock.push_back(i + 1);
    }
  for (int j = 0; j < ss; ++j)
    for (int e : elements(t[j])) {
      tflat.push_back(e);
      tblock.push_back(j + 1);
    }
  for (const auto& h : gammaskel::enumerate_unbased_maps(ss, r)) {
    for (auto& p : value_bijections(sflat, tflat)) {
      bool ok = true;
      for (size_t pos = 0; pos < p.size() && ok; ++pos)
        if (h(tblock[p[pos]]) != sblock[pos]) ok = false;  // Ind square
      if (ok) out.push_back({h, p});
    }
  }
  return out;
}

PMor plbb_compose(const std::vector<Subset>& s, const PMor& first, const PMor& second) {
  (void)s;
  PMor out;
  out.h = gammaskel::compose(first.h, second.h);
  out.p.resize(first.p.size());
  for (size_t i = 0; i < first.p.size(); ++i) out.p[i] = second.p[first.p[i]];
  return out;
}

std::vector<std::vector<BasedMap>> lbb_objects(int n, int max_len, int max_entry) {
  std::vector<BasedMap> pool;
  for (int m = 0; m <= max_entry; ++m)
    for (const auto& f : gammaskel::enumerate_based_maps(n, m)) pool.push_back(f);
  std::vector<std::vector<BasedMap>> out;
  out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<size_t> w(len, 0);
    while (true) {
      std::vector<BasedMap> seq(len);
      for (int i = 0; i < len; ++i) seq[i] = pool[w[i]];
      out.push_back(seq);
      int i = len - 1;
      while (i >= 0 && w[i] + 1 == pool.size()) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

std::vector<LMor> lbb_homs(int n, const std::vector<BasedMap>& f, const std::vector<BasedMap>& g) {
  (void)n;
  std::vector<LMor> out;
  const int r = static_cast<int>(f.size());
  const int s = static_cast<int>(g.size());
  const auto fsup = flat_support(f);
  const auto gsup = flat_support(g);
  const auto fcods = cod_sizes(f);
  const auto gcods = cod_sizes(g);
  const auto ftot = tot_positions(f);
  const auto gtot = tot_positions(g);
  std::vector<int> fsup_block, gsup_block;
  {
    const auto fs = support_sizes(f);
    for (size_t i = 0; i < fs.size(); ++i)
      for (int q = 0; q < fs[i]; ++q) fsup_block.push_back(static_cast<int>(i) + 1);
    const auto gs = support_sizes(g);
    for (size_t i = 0; i < gs.size(); ++i)
      for (int q = 0; q < gs[i]; ++q) gsup_block.push_back(static_cast<int>(i) + 1);
  }
  const int fK = flat_size(fcods), gK = flat_size(gcods);
  for (const auto& h : gammaskel::enumerate_unbased_maps(s, r)) {
    for (auto& p : value_bijections(fsup, gsup)) {
      // q determined on the image of tot(f); free elsewhere within the
      // h-compatible blocks
      std::vector<int> q(fK, -1);
      bool ok = true;
      for (size_t pos = 0; pos < p.size() && ok; ++pos) {
        const int src_cod = ftot[pos];
        const int dst_cod = gtot[p[pos]];
        if (q[src_cod] != -1 && q[src_cod] != dst_cod) ok = false;
        q[src_cod] = dst_cod;
        if (h(block_of_pos(gcods, dst_cod)) != block_of_pos(fcods, src_cod)) ok = false;
      }
      if (!ok) continue;
      // enumerate the free slots
      std::vector<int> free_slots;
      for (int c = 0; c < fK; ++c)
        if (q[c] == -1) free_slots.push_back(c);
      std::vector<std::vector<int>> choices(free_slots.size());
      for (size_t t = 0; t < free_slots.size(); ++t) {
        const int blk = block_of_pos(fcods, free_slots[t]);
        for (int c = 0; c < gK; ++c)
          if (h(block_of_pos(gcods, c)) == blk) choices[t].push_back(c);
        if (choices[t].empty()) ok = false;
      }
      if (!ok) continue;
      std::vector<size_t> pick(free_slots.size(), 0);
      while (true) {
        auto qq = q;
        for (size_t t = 0; t < free_slots.size(); ++t) qq[free_slots[t]] = choices[t][pick[t]];
        out.push_back({h, qq, p});
        int t = static_cast<int>(free_slots.size()) - 1;
        while (t >= 0 && pick[t] + 1 == choices[t].size()) pick[t--] = 0;
        if (t < 0) break;
        ++pick[t];
      }
    }
  }
  return out;
}

LMor lbb_compose(const std::vector<BasedMap>& f, const LMor& first, const LMor& second) {
  (void)f;
  LMor out;
  out.h = gammaskel::compose(first.h, second.h);
  out.q.resize(first.q.size());
  for (size_t i = 0; i < first.q.size(); ++i) out.q[i] = second.q[first.q[i]];
  out.p.resize(first.p.size());
  for (size_t i = 0; i < first.p.size(); ++i) out.p[i] = second.p[first.p[i]];
  return out;
}

std::vector<std::vector<int>> ql_objects(int n, int max_len) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  if (n == 0) return out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> w(len, 1);
    while (true) {
      out.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[i] == n) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

std::vector<std::vector<int>> ql_homs(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<std::vector<int>> out;
  if (s.size() != t.size()) return out;
  return value_bijections(s, t);
}

std::vector<std::vector<int>> lbar_homs(int n, const std::vector<BasedMap>& f,
                                        const std::vector<BasedMap>& g) {
  (void)n;
  return value_bijections(flat_support(f), flat_support(g));
}

// ---- adjunction checks -------------------------------------------------------

namespace {

// iota : P-Lbb -> Lbb on objects
std::vector<BasedMap> plbb_iota_ob(int n, const std::vector<Subset>& s) {
  std::vector<BasedMap> out;
  for (Subset mask : s) out.push_back(gammaskel::projection_onto(n, elements(mask)));
  return out;
}

// G : Lbb -> P-Lbb on objects
std::vector<Subset> lbb_support_ob(const std::vector<BasedMap>& f) {
  std::vector<Subset> out;
  for (const auto& m : f) {
    Subset mask = 0;
    for (int e : gammaskel::support(m).elements) mask |= 1u << (e - 1);
    out.push_back(mask);
  }
  return out;
}

LMor epsilon_of(const std::vector<BasedMap>& f) {
  LMor e;
  e.h = UnbasedMap::identity(static_cast<int>(f.size()));
  e.q = tot_positions(f);
  e.p.resize(flat_support(f).size());
  std::iota(e.p.begin(), e.p.end(), 0);
  return e;
}

bool is_value_bijection(const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& p) {
  if (p.size() != a.size() || a.size() != b.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(b.size()) || hit[p[i]]) return false;
    hit[p[i]] = 1;
    if (b[p[i]] != a[i]) return false;
  }
  return true;
}

bool lmor_is_valid(const std::vector<BasedMap>& f, const std::vector<BasedMap>& g, const LMor& m) {
  const int r = static_cast<int>(f.size());
  const int s = static_cast<int>(g.size());
  if (m.h.dom != s || m.h.cod != r) return false;
  const auto fsup = flat_support(f);
  const auto gsup = flat_support(g);
  if (!is_value_bijection(fsup, gsup, m.p)) return false;
  const auto fcods = cod_sizes(f);
  const auto gcods = cod_sizes(g);
  if (static_cast<int>(m.q.size()) != flat_size(fcods)) return false;
  for (int c = 0; c < flat_size(fcods); ++c) {
    if (m.q[c] < 0 || m.q[c] >= flat_size(gcods)) return false;
    if (m.h(block_of_pos(gcods, m.q[c])) != block_of_pos(fcods, c)) return false;
  }
  const auto ftot = tot_positions(f);
  const auto gtot = tot_positions(g);
  for (size_t pos = 0; pos < m.p.size(); ++pos)
    if (m.q[ftot[pos]] != gtot[m.p[pos]]) return false;
  return true;
}

bool pmor_is_valid(const std::vector<Subset>& s, const std::vector<Subset>& t, const PMor& m) {
  if (m.h.dom != static_cast<int>(t.size()) || m.h.cod != static_cast<int>(s.size())) return false;
  std::vector<int> sflat, tflat, sblock, tblock;
  for (size_t i = 0; i < s.size(); ++i)
    for (int e : elements(s[i])) {
      sflat.push_back(e);
      sblock.push_back(static_cast<int>(i) + 1);
    }
  for (size_t j = 0; j < t.size(); ++j)
    for (int e : elements(t[j])) {
      tflat.push_back(e);
      tblock.push_back(static_cast<int>(j) + 1);
    }
  if (!is_value_bijection(sflat, tflat, m.p)) return false;
  for (size_t pos = 0; pos < m.p.size(); ++pos)
    if (m.h(tblock[m.p[pos]]) != sblock[pos]) return false;
  return true;
}

std::vector<int> multiset_key(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Report verify_coreflective(int n, int max_len, int max_entry, long budget, int nat_len) {
  (void)budget;
  if (nat_len < 0) nat_len = max_len;
  Report r;
  auto lobs = lbb_objects(n, max_len, max_entry);
  auto pobs = plbb_objects(n, max_len);
  // G iota = id on objects and morphisms of the subcategory
  for (const auto& s : pobs) {
    const auto fs = plbb_iota_ob(n, s);
    if (lbb_support_ob(fs) != s) r.add("G-iota-ob", "sequence");
  }
  std::map<std::vector<int>, std::vector<size_t>> pgroup;
  for (size_t i = 0; i < pobs.size(); ++i) {
    std::vector<int> flat;
    for (Subset mask : pobs[i])
      for (int e : elements(mask)) flat.push_back(e);
    pgroup[multiset_key(flat)].push_back(i);
  }
  for (const auto& [key, idxs] : pgroup)
    for (size_t i : idxs)
      for (size_t j : idxs) {
        const auto& s = pobs[i];
        const auto& t = pobs[j];
        const auto fs = plbb_iota_ob(n, s);
        const auto ft = plbb_iota_ob(n, t);
        for (const auto& pm : plbb_homs(n, s, t)) {
          const LMor im{pm.h, pm.p, pm.p};  // iota on morphisms
          if (!lmor_is_valid(fs, ft, im)) {
            r.add("iota-mor-valid", "inclusion image not a morphism");
            continue;
          }
          const PMor back{im.h, im.p};  // G back
          if (!(back == pm)) r.add("G-iota-mor", "roundtrip");
        }
      }
  // epsilon: validity and triangles on every fragment object
  for (const auto& f : lobs) {
    const auto e = epsilon_of(f);
    const auto gf = plbb_iota_ob(n, lbb_support_ob(f));
    if (!lmor_is_valid(gf, f, e)) r.add("epsilon-valid", "not a morphism");
    const int sup = static_cast<int>(flat_support(f).size());
    std::vector<int> idp(sup);
    std::iota(idp.begin(), idp.end(), 0);
    if (e.p != idp) r.add("triangle-G-epsilon", "");
  }
  for (const auto& s : pobs) {
    const auto fs = plbb_iota_ob(n, s);
    const auto e = epsilon_of(fs);
    const int sup = static_cast<int>(flat_support(fs).size());
    std::vector<int> idp(sup);
    std::iota(idp.begin(), idp.end(), 0);
    if (!(e.h == UnbasedMap::identity(static_cast<int>(fs.size()))) || e.q != idp || e.p != idp)
      r.add("triangle-epsilon-iota", "");
  }
  // naturality of epsilon over Lbb morphisms, grouped by support multiset
  std::map<std::vector<int>, std::vector<size_t>> lgroup;
  for (size_t i = 0; i < lobs.size(); ++i) {
    if (static_cast<int>(lobs[i].size()) > nat_len) continue;
    lgroup[multiset_key(flat_support(lobs[i]))].push_back(i);
  }
  for (const auto& [key, idxs] : lgroup)
    for (size_t i : idxs)
      for (size_t j : idxs) {
        const auto& f = lobs[i];
        const auto& g = lobs[j];
        for (const auto& m : lbb_homs(n, f, g)) {
          const LMor ig{m.h, m.p, m.p};  // iota(G(m))
          const auto lhs = lbb_compose(f, ig, epsilon_of(g));
          const auto rhs = lbb_compose(f, epsilon_of(f), m);
          if (!(lhs == rhs)) r.add("epsilon-naturality", "");
        }
      }
  return r;
}

Report verify_reflective(int n, int max_len, long budget) {
  (void)budget;
  Report r;
  auto pobs = plbb_objects(n, max_len);
  auto qobs = ql_objects(n, max_len);
  // H iota = id on objects and morphisms
  for (const auto& s : qobs) {
    std::vector<Subset> singles;
    for (int v : s) singles.push_back(1u << (v - 1));
    std::vector<int> flat;
    for (Subset mask : singles)
      for (int e : elements(mask)) flat.push_back(e);
    if (flat != s) r.add("H-iota-ob", "");
  }
  for (const auto& s : qobs)
    for (const auto& t : qobs) {
      if (multiset_key(s) != multiset_key(t)) continue;
      std::vector<Subset> ss, tt;
      for (int v : s) ss.push_back(1u << (v - 1));
      for (int v : t) tt.push_back(1u << (v - 1));
      for (const auto& p : ql_homs(s, t)) {
        std::vector<int> pinv(p.size());
        for (size_t i = 0; i < p.size(); ++i) pinv[p[i]] = static_cast<int>(i);
        PMor ip;
        std::vector<int> hv(pinv.size());
        for (size_t i = 0; i < pinv.size(); ++i) hv[i] = pinv[i] + 1;
        ip.h = UnbasedMap(static_cast<int>(pinv.size()), static_cast<int>(pinv.size()), hv);
        ip.p = p;
        if (!pmor_is_valid(ss, tt, ip)) r.add("iota-QL-valid", "");
        if (ip.p != p) r.add("H-iota-mor", "");
      }
    }
  auto eta_of = [&](const std::vector<Subset>& s) {
    PMor eta;
    std::vector<int> hvals;
    for (size_t i = 0; i < s.size(); ++i)
      for (int q = 0; q < popcount(s[i]); ++q) hvals.push_back(static_cast<int>(i) + 1);
    // h : flattened singleton index -> source block = Ind(S)
    eta.h = UnbasedMap(static_cast<int>(hvals.size()), static_cast<int>(s.size()), hvals);
    eta.p.resize(hvals.size());
    std::iota(eta.p.begin(), eta.p.end(), 0);
    return eta;
  };
  auto iota_h_ob = [&](const std::vector<Subset>& s) {
    std::vector<Subset> singles;
    for (Subset mask : s)
      for (int e : elements(mask)) singles.push_back(1u << (e - 1));
    return singles;
  };
  // eta is a valid morphism, H(eta) = id, eta(iota(s)) = id
  for (const auto& s : pobs) {
    const auto eta = eta_of(s);
    if (!pmor_is_valid(s, iota_h_ob(s), eta)) r.add("eta-valid", "");
    std::vector<int> idp(eta.p.size());
    std::iota(idp.begin(), idp.end(), 0);
    if (eta.p != idp) r.add("triangle-H-eta", "");
  }
  for (const auto& s : qobs) {
    std::vector<Subset> singles;
    for (int v : s) singles.push_back(1u << (v - 1));
    const auto eta = eta_of(singles);
    if (!(eta.h == UnbasedMap::identity(static_cast<int>(singles.size()))))
      r.add("triangle-eta-iota", "eta(iota(s)) != id");
  }
  // naturality of eta over P-Lbb morphisms, grouped by value multiset
  std::map<std::vector<int>, std::vector<size_t>> pgroup;
  for (size_t i = 0; i < pobs.size(); ++i) {
    std::vector<int> flat;
    for (Subset mask : pobs[i])
      for (int e : elements(mask)) flat.push_back(e);
    pgroup[multiset_key(flat)].push_back(i);
  }
  for (const auto& [key, idxs] : pgroup)
    for (size_t i : idxs)
      for (size_t j : idxs) {
        const auto& s = pobs[i];
        const auto& t = pobs[j];
        for (const auto& m : plbb_homs(n, s, t)) {
          // iota H (m): blocks of iota H are flattened positions, so the
          // h-component is the inverse position bijection
          std::vector<int> pinv(m.p.size());
          for (size_t q = 0; q < m.p.size(); ++q) pinv[m.p[q]] = static_cast<int>(q);
          PMor ih;
          std::vector<int> hv(pinv.size());
          for (size_t q = 0; q < pinv.size(); ++q) hv[q] = pinv[q] + 1;
          ih.h = UnbasedMap(static_cast<int>(pinv.size()), static_cast<int>(pinv.size()), hv);
          ih.p = m.p;
          const auto lhs = plbb_compose(s, eta_of(s), ih);
          const auto rhs = plbb_compose(s, m, eta_of(t));
          if (!(lhs == rhs)) r.add("eta-naturality", "");
        }
      }
  return r;
}

// ---- J(n), the wedge, naturality, roundtrip ------------------------------------

Report iso_compare_J(int n, int max_len, int max_entry, long budget) {
  Report r;
  // the Grothendieck fragment over Gamma^n
  auto lein = leinster::build_leinster(max_len, max_entry, -1, budget);
  auto gn = gammacat::representable_gamma(n, std::max(n, max_entry));
  auto ext = leinster::sm_extension(gn, lein, budget);
  auto groth = leinster::grothendieck_perm(ext, budget);
  // the target: Lbb(n) objects are sequences of based maps
  auto lobs = lbb_objects(n, max_len, max_entry);
  if (static_cast<size_t>(groth.cat->nob()) != lobs.size()) {
    r.add("J-object-count", std::to_string(groth.cat->nob()) + " vs " + std::to_string(lobs.size()));
    return r;
  }
  // identify each cell with its sequence of based maps
  std::map<std::vector<std::vector<int>>, Id> lidx;  // key: values arrays
  auto lkey = [](const std::vector<BasedMap>& seq) {
    std::vector<std::vector<int>> key;
    for (const auto& f : seq) {
      std::vector<int> v = f.values;
      v.push_back(f.cod);
      key.push_back(std::move(v));
    }
    return key;
  };
  for (size_t i = 0; i < lobs.size(); ++i) lidx[lkey(lobs[i])] = static_cast<Id>(i);
  std::vector<Id> cell_to_l(groth.cells.size());
  for (size_t cidx = 0; cidx < groth.cells.size(); ++cidx) {
    const auto [lo, fo] = groth.cells[cidx];
    std::vector<BasedMap> seq;
    for (size_t t = 0; t < ext.lein.objects[lo].size(); ++t) {
      const Id comp = ext.fibers[lo].ob_component(static_cast<Id>(fo), static_cast<int>(t));
      seq.push_back(gammacat::representable_map_of(n, ext.lein.objects[lo][t], comp));
    }
    auto it = lidx.find(lkey(seq));
    if (it == lidx.end()) {
      r.add("J-object-missing", "cell " + std::to_string(cidx));
      return r;
    }
    cell_to_l[cidx] = it->second;
  }
  // J on morphisms: (h, phi as q, sigma_F as p)
  auto j_of = [&](Id gm) -> LMor {
    const auto& md = ext.lein.mor_data[groth.mors[gm].lmor];
    const Id src_cell = groth.cat->base->src(gm);
    const Id tgt_cell = groth.cat->base->tgt(gm);
    const auto& fsrc = lobs[cell_to_l[src_cell]];
    const auto& ftgt = lobs[cell_to_l[tgt_cell]];
    LMor out;
    out.h = md.h;
    out.q.resize(md.phi.dom);
    for (int z = 1; z <= md.phi.dom; ++z) out.q[z - 1] = md.phi(z) - 1;
    // sigma_F: support position of x in f_i -> position of x in g_j where
    // h(j) = i and x lies in Supp(g_j)
    const auto fsup = flat_support(fsrc);
    const auto gss = support_sizes(ftgt);
    out.p.assign(fsup.size(), -1);
    int pos = 0;
    for (size_t i = 0; i < fsrc.size(); ++i) {
      for (int x : gammaskel::support(fsrc[i]).elements) {
        int found = -1;
        int gpos = 0;
        for (size_t j = 0; j < ftgt.size(); ++j) {
          if (md.h(static_cast<int>(j) + 1) == static_cast<int>(i) + 1) {
            const auto els = gammaskel::support(ftgt[j]).elements;
            for (size_t e = 0; e < els.size(); ++e)
              if (els[e] == x) found = gpos + static_cast<int>(e);
          }
          gpos += gss[j];
        }
        out.p[pos++] = found;
      }
    }
    return out;
  };
  // hom bijections and composition preservation
  long checked = 0;
  std::vector<std::vector<Id>> groth_homs(groth.cells.size() * groth.cells.size());
  for (Id gm = 0; gm < static_cast<Id>(groth.mors.size()); ++gm)
    groth_homs[groth.cat->base->src(gm) * groth.cells.size() + groth.cat->base->tgt(gm)].push_back(gm);
  for (size_t a = 0; a < groth.cells.size(); ++a)
    for (size_t b = 0; b < groth.cells.size(); ++b) {
      const auto& hom = groth_homs[a * groth.cells.size() + b];
      auto lhoms = lbb_homs(n, lobs[cell_to_l[a]], lobs[cell_to_l[b]]);
      if (hom.size() != lhoms.size()) {
        r.add("J-hom-count",
              std::to_string(a) + "->" + std::to_string(b) + ": " + std::to_string(hom.size()) +
                  " vs " + std::to_string(lhoms.size()));
        continue;
      }
      std::vector<char> hit(lhoms.size(), 0);
      for (Id gm : hom) {
        const LMor jm = j_of(gm);
        if (!lmor_is_valid(lobs[cell_to_l[a]], lobs[cell_to_l[b]], jm)) {
          r.add("J-image-invalid", "morphism " + std::to_string(gm));
          continue;
        }
        bool matched = false;
        for (size_t t = 0; t < lhoms.size(); ++t)
          if (lhoms[t] == jm) {
            if (hit[t]) r.add("J-not-injective", "morphism " + std::to_string(gm));
            hit[t] = 1;
            matched = true;
            break;
          }
        if (!matched) r.add("J-image-unlisted", "morphism " + std::to_string(gm));
        if (++checked > budget) throw fincat::BudgetExceeded("iso_compare_J budget");
      }
    }
  // composition preservation on composable pairs
  for (Id m1 = 0; m1 < static_cast<Id>(groth.mors.size()); ++m1)
    for (Id m2 = 0; m2 < static_cast<Id>(groth.mors.size()); ++m2) {
      if (!groth.cat->base->composable(m2, m1)) continue;
      const Id c = groth.cat->base->compose(m2, m1);
      const auto lhs = j_of(c);
      const auto rhs =
          lbb_compose(lobs[cell_to_l[groth.cat->base->src(m1)]], j_of(m1), j_of(m2));
      if (!(lhs == rhs)) {
        r.add("J-composition", std::to_string(m2) + " o " + std::to_string(m1));
      }
    }
  return r;
}

Report plbb_action_naturality(int n, int m, int max_len, long budget) {
  (void)budget;
  Report r;
  // for each based map f : n+ -> m+, G o (Lbb action by f) o iota equals
  // the preimage action on P-Lbb objects and morphisms
  auto pobs_m = plbb_objects(m, max_len);
  for (const auto& f : gammaskel::enumerate_based_maps(n, m)) {
    for (const auto& s : pobs_m) {
      // preimage action
      std::vector<Subset> pre;
      for (Subset mask : s) pre.push_back(preimage(f, mask));
      // composite route: iota then postcompose each projection with f then
      // take supports
      std::vector<Subset> via;
      for (Subset mask : s) {
        const BasedMap proj = gammaskel::projection_onto(m, elements(mask));
        const BasedMap comp = gammaskel::compose(proj, f);
        Subset sup = 0;
        for (int e : gammaskel::support(comp).elements) sup |= 1u << (e - 1);
        via.push_back(sup);
      }
      if (pre != via) r.add("plbb-action-ob", gammaskel::to_text(f));
    }
    // morphisms: the action sends (h,p) to (h, induced bijection on
    // preimage positions); verify it stays a valid morphism and matches the
    // composite route
    for (const auto& s : pobs_m)
      for (const auto& t : pobs_m) {
        if (s.size() > 2 || t.size() > 2) continue;  // keep the sweep small
        for (const auto& pm : plbb_homs(m, s, t)) {
          std::vector<Subset> ps, pt;
          for (Subset mask : s) ps.push_back(preimage(f, mask));
          for (Subset mask : t) pt.push_back(preimage(f, mask));
          // induced bijection: x in preimage of block value v maps to the
          // target occurrence of the (same) element as dictated by pm.p on
          // the underlying values
          // positions of source preimage flat
          std::vector<std::pair<int, int>> sflat;  // (block, element of n)
          for (size_t i = 0; i < ps.size(); ++i)
            for (int e : elements(ps[i])) sflat.push_back({static_cast<int>(i), e});
          std::vector<std::pair<int, int>> tflat;
          for (size_t j = 0; j < pt.size(); ++j)
            for (int e : elements(pt[j])) tflat.push_back({static_cast<int>(j), e});
          // source support positions of s (in m) by block
          std::vector<std::pair<int, int>> sflat_m;
          for (size_t i = 0; i < s.size(); ++i)
            for (int e : elements(s[i])) sflat_m.push_back({static_cast<int>(i), e});
          std::vector<std::pair<int, int>> tflat_m;
          for (size_t j = 0; j < t.size(); ++j)
            for (int e : elements(t[j])) tflat_m.push_back({static_cast<int>(j), e});
          PMor ind;
          ind.h = pm.h;
          ind.p.assign(sflat.size(), -1);
          bool ok = true;
          for (size_t pos = 0; pos < sflat.size() && ok; ++pos) {
            const auto [blk, e] = sflat[pos];
            const int v = f(e);  // nonzero since e lies in a preimage
            // locate the m-support position of (blk, v)
            int mpos = -1;
            for (size_t q = 0; q < sflat_m.size(); ++q)
              if (sflat_m[q] == std::make_pair(blk, v)) mpos = static_cast<int>(q);
            if (mpos < 0) {
              ok = false;
              break;
            }
            const auto [tblk, tv] = tflat_m[pm.p[mpos]];
            // target position: occurrence of e in target block tblk
            int tpos = -1;
            for (size_t q = 0; q < tflat.size(); ++q)
              if (tflat[q] == std::make_pair(tblk, e)) tpos = static_cast<int>(q);
            if (tpos < 0) {
              ok = false;
              break;
            }
            (void)tv;
            ind.p[pos] = tpos;
          }
          if (!ok || !pmor_is_valid(ps, pt, ind)) r.add("plbb-action-mor", gammaskel::to_text(f));
        }
      }
  }
  return r;
}

Report wedge_inclusion_check(int n, int max_len, long budget) {
  Report r;
  auto ln = build_L(n, max_len, budget);
  auto wedge = build_wedge(n, max_len, budget);
  // monic on objects and fully faithful on the common fragment
  std::map<std::vector<Subset>, Id> seen;
  for (size_t i = 0; i < wedge.objects.size(); ++i) {
    const Id img = ln.object_of(wedge.objects[i]);
    if (img == kNone) {
      r.add("wedge-object-missing", std::to_string(i));
      continue;
    }
    if (seen.count(wedge.objects[i])) r.add("wedge-monic", std::to_string(i));
    seen[wedge.objects[i]] = img;
  }
  for (size_t i = 0; i < wedge.objects.size(); ++i)
    for (size_t j = 0; j < wedge.objects.size(); ++j) {
      const Id a = ln.object_of(wedge.objects[i]);
      const Id b = ln.object_of(wedge.objects[j]);
      if (wedge.cat->base->hom(static_cast<Id>(i), static_cast<Id>(j)).size() !=
          ln.cat->base->hom(a, b).size())
        r.add("wedge-ff", std::to_string(i) + "->" + std::to_string(j));
    }
  // essential surjectivity: every L(n) object splits into singletons via
  // the identity bijection on its flattened support
  for (size_t i = 0; i < ln.objects.size(); ++i) {
    std::vector<Subset> split;
    for (Subset mask : ln.objects[i])
      for (int e : elements(mask)) split.push_back(1u << (e - 1));
    // the identity position bijection is a morphism and invertible
    std::vector<int> idp(flat_elements(ln.objects[i]).size());
    std::iota(idp.begin(), idp.end(), 0);
    // validity: value-preserving (trivially) and the target is a wedge
    // object; when the split fits inside the fragment, also check it is a
    // genuine isomorphism of the materialized category
    const Id tgt = ln.object_of(split);
    if (tgt != kNone) {
      const Id m = ln.morphism_of(static_cast<Id>(i), tgt, idp);
      if (m == kNone || !ln.cat->base->is_invertible(m)) r.add("wedge-esssurj", std::to_string(i));
    } else {
      // target outside the materialized fragment: verify the bijection
      // datum locally (it is its own inverse witness)
      std::vector<int> src_flat = flat_elements(ln.objects[i]);
      std::vector<int> tgt_flat;
      for (Subset mask : split)
        for (int e : elements(mask)) tgt_flat.push_back(e);
      if (src_flat != tgt_flat) r.add("wedge-esssurj-split", std::to_string(i));
    }
  }
  return r;
}

// ---- bicycles as strict SM functors on the L(n) fragment ------------------------

namespace {

// canonical decomposition of Psi(S) into the tensor of singleton values:
// rho_S : Psi(S) -> Psi({x1}) @ ... @ Psi({xk}), iterated through sigma
Id rho_subset(const PermCategory& c, const SegalBicycle& b, Subset s) {
  const fincat::FinCategory& base = *c.base;
  if (s == 0) return b.u;
  if (popcount(s) == 1) return base.identity(b.psi[s]);
  const int first = elements(s)[0];
  const Subset head = 1u << (first - 1);
  const Subset rest = s & ~head;
  const Id tail = rho_subset(c, b, rest);
  const Id step = c.mor_tensor(base.identity(b.psi[head]), tail);
  if (step == kNone) throw permcat::FragmentError("rho: tensor outside fragment");
  const Id out = base.compose(step, b.sigma_at(head, rest));
  if (out == kNone) throw permcat::FragmentError("rho: composite outside fragment");
  return out;
}

// rho for a sequence: tensor of the per-block decompositions
Id rho_sequence(const PermCategory& c, const SegalBicycle& b, const std::vector<Subset>& seq) {
  std::vector<Id> legs;
  for (Subset s : seq) legs.push_back(rho_subset(c, b, s));
  return permcat::tensor_word_mor(c, legs);
}

// singleton word of a sequence: Psi({x}) for each flattened element
std::vector<Id> singleton_word(const SegalBicycle& b, const std::vector<Subset>& seq) {
  std::vector<Id> out;
  for (Subset s : seq)
    for (int e : elements(s)) out.push_back(b.psi[1u << (e - 1)]);
  return out;
}

}  // namespace

permcat::StrictSMFunctor bicycle_to_functor(const NerveDegree& deg, const SubsetSeqCategory& ln,
                                            Id bicycle) {
  const PermCategory& c = *deg.target;
  const fincat::FinCategory& base = *c.base;
  const SegalBicycle& b = deg.objects[bicycle];
  std::vector<Id> ob(ln.cat->nob());
  for (Id o = 0; o < ln.cat->nob(); ++o) {
    std::vector<Id> word;
    for (Subset s : ln.objects[o]) word.push_back(b.psi[s]);
    ob[o] = permcat::tensor_word_ob(c, word);
  }
  std::vector<Id> mor(ln.cat->base->num_morphisms());
  for (Id m = 0; m < ln.cat->base->num_morphisms(); ++m) {
    const Id so = ln.cat->base->src(m), to = ln.cat->base->tgt(m);
    const Id rs = rho_sequence(c, b, ln.objects[so]);
    const Id rt = rho_sequence(c, b, ln.objects[to]);
    const auto word = singleton_word(b, ln.objects[so]);
    std::vector<int> sigma(word.size());
    for (size_t q = 0; q < word.size(); ++q) sigma[q] = ln.mor_perm[m][q] + 1;
    const Id can = permcat::coherence_iso(c, word, sigma);
    const Id down = base.compose(can, rs);
    mor[m] = base.compose(base.inverse(rt), down);
    if (mor[m] == kNone) throw permcat::FragmentError("bicycle_to_functor: composite missing");
  }
  return permcat::StrictSMFunctor{ln.cat, deg.target,
                                  Functor(ln.cat->base, c.base, std::move(ob), std::move(mor))};
}

SegalBicycle functor_to_bicycle(const SubsetSeqCategory& ln, const permcat::StrictSMFunctor& f) {
  SegalBicycle b;
  b.n = ln.n;
  const int nsub = 1 << ln.n;
  b.psi.resize(nsub);
  b.sigma.assign(static_cast<size_t>(nsub) * nsub, kNone);
  for (Subset s = 0; s < static_cast<Subset>(nsub); ++s)
    b.psi[s] = f.f.ob[ln.object_of({s})];
  for (Subset s = 0; s < static_cast<Subset>(nsub); ++s)
    for (Subset t = 0; t < static_cast<Subset>(nsub); ++t) {
      if (s & t) continue;
      // the merge morphism (S u T) -> (S, T): the value-preserving bijection
      const Id src = ln.object_of({static_cast<Subset>(s | t)});
      const Id tgt = ln.object_of({s, t});
      const auto sflat = flat_elements({static_cast<Subset>(s | t)});
      std::vector<int> tflat;
      for (int e : elements(s)) tflat.push_back(e);
      for (int e : elements(t)) tflat.push_back(e);
      std::vector<int> p(sflat.size());
      for (size_t q = 0; q < sflat.size(); ++q)
        p[q] = static_cast<int>(std::find(tflat.begin(), tflat.end(), sflat[q]) - tflat.begin());
      const Id merge = ln.morphism_of(src, tgt, p);
      if (merge == kNone) throw std::logic_error("functor_to_bicycle: merge morphism missing");
      b.set_sigma(s, t, f.f.mor[merge]);
    }
  const Id uend = ln.morphism_of(ln.object_of({0u}), ln.object_of({}), {});
  if (uend == kNone) throw std::logic_error("functor_to_bicycle: unit morphism missing");
  b.u = f.f.mor[uend];
  return b;
}

Report bicycle_roundtrip(permcat::PermPtr c, int n, int max_len, long budget) {
  Report r;
  auto deg = nerve_degree(c, n, budget);
  auto ln = build_L(n, max_len, budget);
  // bicycle -> functor -> bicycle is the identity
  std::vector<permcat::StrictSMFunctor> functors;
  for (Id b = 0; b < static_cast<Id>(deg.objects.size()); ++b) {
    auto f = bicycle_to_functor(deg, ln, b);
    Report fr = permcat::check_strict_sm_functor(f);
    if (!fr.ok()) {
      r.add("roundtrip-functor-invalid", "bicycle " + std::to_string(b) + ": " + fr.items[0].rule);
      continue;
    }
    const SegalBicycle back = functor_to_bicycle(ln, f);
    if (back.key() != deg.objects[b].key()) r.add("roundtrip-bicycle", std::to_string(b));
    functors.push_back(std::move(f));
  }
  // functor -> bicycle -> functor is the identity, over the enumerated homs
  auto hom = permcat::strict_sm_hom(ln.cat, c, budget);
  if (hom.objects.size() != deg.objects.size())
    r.add("roundtrip-object-count",
          std::to_string(hom.objects.size()) + " vs " + std::to_string(deg.objects.size()));
  for (const auto& g : hom.objects) {
    const SegalBicycle b = functor_to_bicycle(ln, g);
    const Id idx = deg.object_of(b);
    if (idx == kNone) {
      r.add("roundtrip-bicycle-missing", "functor image not a bicycle of the degree");
      continue;
    }
    auto f2 = bicycle_to_functor(deg, ln, idx);
    if (!(f2.f == g.f)) r.add("roundtrip-functor", "");
  }
  // hom-sets correspond bijectively
  for (size_t i = 0; i < functors.size() && i < hom.objects.size(); ++i)
    for (size_t j = 0; j < functors.size() && j < hom.objects.size(); ++j) {
      Id hi = kNone, hj = kNone;
      for (size_t q = 0; q < hom.objects.size(); ++q) {
        if (hom.objects[q].f == functors[i].f) hi = static_cast<Id>(q);
        if (hom.objects[q].f == functors[j].f) hj = static_cast<Id>(q);
      }
      if (hi == kNone || hj == kNone) {
        r.add("roundtrip-hom-index", "");
        continue;
      }
      if (deg.cat->hom(static_cast<Id>(i), static_cast<Id>(j)).size() !=
          hom.cat->hom(hi, hj).size())
        r.add("roundtrip-hom-count", std::to_string(i) + "->" + std::to_string(j));
    }
  return r;
}

// ---- thickened nerve -------------------------------------------------------------

ThickenedDegree thickened_nerve_degree(permcat::PermPtr c, int n, int bound, long budget) {
  ThickenedDegree out;
  out.target = c;
  out.n = n;
  out.bound = bound;
  const PermCategory& p = *c;
  const fincat::FinCategory& base = *p.base;
  for (int m = 0; m <= bound; ++m)
    for (const auto& f : gammaskel::enumerate_based_maps(n, m)) out.index_maps.push_back(f);
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (const auto& h : gammaskel::enumerate_unbased_maps(a, b)) out.transition_maps.push_back(h);
  auto find_index = [&](const BasedMap& f) -> int {
    for (size_t i = 0; i < out.index_maps.size(); ++i)
      if (out.index_maps[i] == f) return static_cast<int>(i);
    return -1;
  };

  // required component lists
  struct AlphaSlot {
    int h, f, target;
  };
  std::vector<AlphaSlot> alpha_slots;
  for (size_t hi = 0; hi < out.transition_maps.size(); ++hi)
    for (size_t fi = 0; fi < out.index_maps.size(); ++fi) {
      const auto& h = out.transition_maps[hi];
      const auto& f = out.index_maps[fi];
      if (h.dom != f.cod) continue;
      const int tgt = find_index(gammaskel::compose(gammaskel::active_lift(h), f));
      if (tgt >= 0) alpha_slots.push_back({static_cast<int>(hi), static_cast<int>(fi), tgt});
    }
  struct SigmaSlot {
    int k, l, f, fk, fl;
  };
  std::vector<SigmaSlot> sigma_slots;
  for (size_t fi = 0; fi < out.index_maps.size(); ++fi) {
    const auto& f = out.index_maps[fi];
    for (int k = 0; k <= f.cod; ++k) {
      const int l = f.cod - k;
      const int fk = find_index(gammaskel::compose(gammaskel::delta_left(k, l), f));
      const int fl = find_index(gammaskel::compose(gammaskel::delta_right(k, l), f));
      if (fk >= 0 && fl >= 0) sigma_slots.push_back({k, l, static_cast<int>(fi), fk, fl});
    }
  }
  std::vector<int> u_slots;
  for (size_t fi = 0; fi < out.index_maps.size(); ++fi)
    if (out.index_maps[fi].cod == 0) u_slots.push_back(static_cast<int>(fi));

  auto conditions_ok = [&](const PseudoBicycle& b) -> bool {
    // PSB.1: sigma(m,0,f) then id x u, and sigma(0,m,f) then u x id, are
    // identities (strict units)
    for (size_t fi = 0; fi < out.index_maps.size(); ++fi) {
      const auto& f = out.index_maps[fi];
      const int m = f.cod;
      {
        auto it = b.sigma.find({m, 0, static_cast<int>(fi)});
        const int f0 = find_index(gammaskel::compose(gammaskel::delta_right(m, 0), f));
        if (it == b.sigma.end() || f0 < 0) return false;
        const Id step = p.mor_tensor(base.identity(b.c[find_index(gammaskel::compose(
                                         gammaskel::delta_left(m, 0), f))]),
                                     b.u.at(f0));
        if (step == kNone || base.compose(step, it->second) != base.identity(b.c[fi])) return false;
      }
      {
        auto it = b.sigma.find({0, m, static_cast<int>(fi)});
        const int f0 = find_index(gammaskel::compose(gammaskel::delta_left(0, m), f));
        if (it == b.sigma.end() || f0 < 0) return false;
        const Id step = p.mor_tensor(b.u.at(f0), base.identity(b.c[find_index(gammaskel::compose(
                                                     gammaskel::delta_right(0, m), f))]));
        if (step == kNone || base.compose(step, it->second) != base.identity(b.c[fi])) return false;
      }
    }
    // PSB.2: symmetry against the block swap
    for (const auto& slot : sigma_slots) {
      const auto& f = out.index_maps[slot.f];
      const auto tau = gammaskel::symmetry_N(slot.k, slot.l);
      const int hi = [&] {
        for (size_t q = 0; q < out.transition_maps.size(); ++q)
          if (out.transition_maps[q] == tau) return static_cast<int>(q);
        return -1;
      }();
      if (hi < 0) continue;
      const int tf = find_index(gammaskel::compose(gammaskel::active_lift(tau), f));
      if (tf < 0) continue;
      const Id lhs = base.compose(b.sigma.at({slot.l, slot.k, tf}), b.alpha.at({hi, slot.f}));
      const Id g = p.gamma(b.c[slot.fk], b.c[slot.fl]);
      const Id rhs = base.compose(g, b.sigma.at({slot.k, slot.l, slot.f}));
      if (lhs == kNone || g == kNone || lhs != rhs) return false;
    }
    // PSB.3: associativity of the partitions
    for (size_t fi = 0; fi < out.index_maps.size(); ++fi) {
      const auto& f = out.index_maps[fi];
      for (int k = 0; k <= f.cod; ++k)
        for (int l = 0; k + l <= f.cod; ++l) {
          const int m = f.cod - k - l;
          const int fkl = find_index(gammaskel::compose(gammaskel::delta_left(k + l, m), f));
          const int fm = find_index(gammaskel::compose(gammaskel::delta_right(k + l, m), f));
          const int fk = find_index(gammaskel::compose(gammaskel::delta_left(k, l + m), f));
          const int flm = find_index(gammaskel::compose(gammaskel::delta_right(k, l + m), f));
          if (fkl < 0 || fm < 0 || fk < 0 || flm < 0) continue;
          const Id left = base.compose(
              p.mor_tensor(b.sigma.at({k, l, fkl}), base.identity(b.c[fm])),
              b.sigma.at({k + l, m, static_cast<int>(fi)}));
          const Id right = base.compose(
              p.mor_tensor(base.identity(b.c[fk]), b.sigma.at({l, m, flm})),
              b.sigma.at({k, l + m, static_cast<int>(fi)}));
          if (left == kNone || left != right) return false;
        }
    }
    // PSB.4: compatibility with sums of active maps
    for (const auto& slot : sigma_slots) {
      const auto& h = out.index_maps[slot.f];
      for (const auto& fa : out.transition_maps) {
        if (fa.dom != slot.k) continue;
        for (const auto& ga : out.transition_maps) {
          if (ga.dom != slot.l) continue;
          if (fa.cod + ga.cod > bound) continue;
          const auto sum = gammaskel::plus_N(fa, ga);
          const int sum_hi = [&] {
            for (size_t q = 0; q < out.transition_maps.size(); ++q)
              if (out.transition_maps[q] == sum) return static_cast<int>(q);
            return -1;
          }();
          if (sum_hi < 0) continue;
          const int fgh = find_index(gammaskel::compose(gammaskel::active_lift(sum), h));
          if (fgh < 0) continue;
          const int fa_hi = [&] {
            for (size_t q = 0; q < out.transition_maps.size(); ++q)
              if (out.transition_maps[q] == fa) return static_cast<int>(q);
            return -1;
          }();
          const int ga_hi = [&] {
            for (size_t q = 0; q < out.transition_maps.size(); ++q)
              if (out.transition_maps[q] == ga) return static_cast<int>(q);
            return -1;
          }();
          const int fgh_k = find_index(gammaskel::compose(
              gammaskel::delta_left(fa.cod, ga.cod), gammaskel::compose(gammaskel::active_lift(sum), h)));
          const int fgh_l = find_index(gammaskel::compose(
              gammaskel::delta_right(fa.cod, ga.cod), gammaskel::compose(gammaskel::active_lift(sum), h)));
          if (fgh_k < 0 || fgh_l < 0) continue;
          const Id lhs = base.compose(b.sigma.at({fa.cod, ga.cod, fgh}), b.alpha.at({sum_hi, slot.f}));
          const Id rhs = base.compose(
              p.mor_tensor(b.alpha.at({fa_hi, slot.fk}), b.alpha.at({ga_hi, slot.fl})),
              b.sigma.at({slot.k, slot.l, slot.f}));
          if (lhs == kNone || lhs != rhs) return false;
        }
      }
    }
    // alpha functoriality inside the bound: alpha(id) = id and
    // alpha(h' o h, f) = alpha(h', h o f) o alpha(h, f)
    for (const auto& s1 : alpha_slots) {
      const auto& h1 = out.transition_maps[s1.h];
      if (h1 == UnbasedMap::identity(h1.dom) && !base.is_identity(b.alpha.at({s1.h, s1.f})))
        return false;
      for (size_t h2i = 0; h2i < out.transition_maps.size(); ++h2i) {
        const auto& h2 = out.transition_maps[h2i];
        if (h2.dom != h1.cod) continue;
        const auto hh = gammaskel::compose(h2, h1);
        int hhi = -1;
        for (size_t q = 0; q < out.transition_maps.size(); ++q)
          if (out.transition_maps[q] == hh) hhi = static_cast<int>(q);
        if (hhi < 0) continue;
        const Id lhs = b.alpha.at({hhi, s1.f});
        const Id rhs = base.compose(b.alpha.at({static_cast<int>(h2i), s1.target}),
                                    b.alpha.at({s1.h, s1.f}));
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  // enumerate objects
  long nodes = budget;
  std::vector<Id> cvec(out.index_maps.size(), 0);
  const int nob = base.num_objects();
  std::function<void()> try_c = [&]() {
    PseudoBicycle b;
    b.n = n;
    b.bound = bound;
    b.c = cvec;
    // u components
    std::vector<std::vector<Id>> uch(u_slots.size());
    for (size_t t = 0; t < u_slots.size(); ++t) {
      for (Id m : base.hom(cvec[u_slots[t]], p.unit))
        if (base.is_invertible(m)) uch[t].push_back(m);
      if (uch[t].empty()) return;
    }
    // alpha components
    std::vector<std::vector<Id>> ach(alpha_slots.size());
    for (size_t t = 0; t < alpha_slots.size(); ++t) {
      for (Id m : base.hom(cvec[alpha_slots[t].f], cvec[alpha_slots[t].target]))
        if (base.is_invertible(m)) ach[t].push_back(m);
      if (ach[t].empty()) return;
    }
    // sigma components
    std::vector<std::vector<Id>> sch(sigma_slots.size());
    for (size_t t = 0; t < sigma_slots.size(); ++t) {
      const Id tens = p.ob_tensor(cvec[sigma_slots[t].fk], cvec[sigma_slots[t].fl]);
      if (tens == kNone) return;
      for (Id m : base.hom(cvec[sigma_slots[t].f], tens))
        if (base.is_invertible(m)) sch[t].push_back(m);
      if (sch[t].empty()) return;
    }
    std::function<void(size_t)> rec = [&](size_t slot) {
      const size_t nu = u_slots.size(), na = alpha_slots.size(), ns = sigma_slots.size();
      if (slot == nu + na + ns) {
        if (conditions_ok(b)) {
          out.objects.push_back(b);
          if (static_cast<long>(out.objects.size()) > budget)
            throw fincat::BudgetExceeded("thickened nerve budget");
        }
        return;
      }
      if (--nodes < 0) throw fincat::BudgetExceeded("thickened nerve budget");
      if (slot < nu) {
        for (Id m : uch[slot]) {
          b.u[u_slots[slot]] = m;
          rec(slot + 1);
        }
        b.u.erase(u_slots[slot]);
      } else if (slot < nu + na) {
        const auto& a = alpha_slots[slot - nu];
        for (Id m : ach[slot - nu]) {
          b.alpha[{a.h, a.f}] = m;
          rec(slot + 1);
        }
        b.alpha.erase({a.h, a.f});
      } else {
        const auto& s = sigma_slots[slot - nu - na];
        for (Id m : sch[slot - nu - na]) {
          b.sigma[{s.k, s.l, s.f}] = m;
          rec(slot + 1);
        }
        b.sigma.erase({s.k, s.l, s.f});
      }
    };
    rec(0);
  };
  if (nob > 0) {
    while (true) {
      if (--nodes < 0) throw fincat::BudgetExceeded("thickened nerve budget");
      try_c();
      size_t i = out.index_maps.size();
      while (i > 0 && cvec[i - 1] == nob - 1) cvec[--i] = 0;
      if (i == 0) break;
      ++cvec[i - 1];
    }
  }

  // morphisms
  fincat::FinCategory k;
  k.name = "Kbar(" + p.name + ")(" + std::to_string(n) + "+)<=" + std::to_string(bound);
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();
  out.components.resize(out.objects.size());
  std::map<std::tuple<Id, Id, std::vector<Id>>, Id> midx;
  for (size_t i = 0; i < out.objects.size(); ++i) {
    std::vector<Id> comp(out.index_maps.size());
    for (size_t fi = 0; fi < out.index_maps.size(); ++fi)
      comp[fi] = base.identity(out.objects[i].c[fi]);
    out.components[k.identity(static_cast<Id>(i))] = comp;
    midx[{static_cast<Id>(i), static_cast<Id>(i), comp}] = k.identity(static_cast<Id>(i));
  }
  auto morphism_ok = [&](const PseudoBicycle& a, const PseudoBicycle& b, const std::vector<Id>& comp) {
    for (int fi : u_slots)
      if (base.compose(b.u.at(fi), comp[fi]) != a.u.at(fi)) return false;
    for (const auto& s : alpha_slots) {
      if (base.compose(b.alpha.at({s.h, s.f}), comp[s.f]) !=
          base.compose(comp[s.target], a.alpha.at({s.h, s.f})))
        return false;
    }
    for (const auto& s : sigma_slots) {
      const Id tens = p.mor_tensor(comp[s.fk], comp[s.fl]);
      if (tens == kNone) return false;
      if (base.compose(b.sigma.at({s.k, s.l, s.f}), comp[s.f]) !=
          base.compose(tens, a.sigma.at({s.k, s.l, s.f})))
        return false;
    }
    return true;
  };
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      const auto& a = out.objects[i];
      const auto& b = out.objects[j];
      std::vector<Id> comp(out.index_maps.size(), kNone);
      std::function<void(size_t)> rec = [&](size_t fi) {
        if (fi == out.index_maps.size()) {
          if (morphism_ok(a, b, comp) && !midx.count({static_cast<Id>(i), static_cast<Id>(j), comp})) {
            if (++total > budget) throw fincat::BudgetExceeded("thickened morphism budget");
            const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
            midx[{static_cast<Id>(i), static_cast<Id>(j), comp}] = m;
            out.components.push_back(comp);
          }
          return;
        }
        for (Id t : base.hom(a.c[fi], b.c[fi])) {
          comp[fi] = t;
          rec(fi + 1);
        }
        comp[fi] = kNone;
      };
      rec(0);
    }
  for (size_t m1 = 0; m1 < out.components.size(); ++m1)
    for (size_t m2 = 0; m2 < out.components.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      std::vector<Id> comp(out.index_maps.size());
      for (size_t fi = 0; fi < out.index_maps.size(); ++fi)
        comp[fi] = base.compose(out.components[m2][fi], out.components[m1][fi]);
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1),
                    midx.at({k.src(static_cast<Id>(m1)), k.tgt(static_cast<Id>(m2)), comp}));
    }
  out.cat = fincat::make_cat(std::move(k));
  return out;
}

Report thickened_comparison(const NerveDegree& deg, const ThickenedDegree& thick) {
  Report r;
  const PermCategory& p = *deg.target;
  const fincat::FinCategory& base = *p.base;
  // comparison: c_f = Psi(Supp f), alpha = id, sigma from sigma_Psi, u = u_Psi
  auto image_of = [&](const SegalBicycle& b) {
    PseudoBicycle out;
    out.n = thick.n;
    out.bound = thick.bound;
    out.c.resize(thick.index_maps.size());
    for (size_t fi = 0; fi < thick.index_maps.size(); ++fi) {
      Subset sup = 0;
      for (int e : gammaskel::support(thick.index_maps[fi]).elements) sup |= 1u << (e - 1);
      out.c[fi] = b.psi[sup];
    }
    for (size_t hi = 0; hi < thick.transition_maps.size(); ++hi)
      for (size_t fi = 0; fi < thick.index_maps.size(); ++fi) {
        const auto& h = thick.transition_maps[hi];
        const auto& f = thick.index_maps[fi];
        if (h.dom != f.cod) continue;
        if (gammaskel::compose(gammaskel::active_lift(h), f).cod <= thick.bound)
          out.alpha[{static_cast<int>(hi), static_cast<int>(fi)}] = base.identity(out.c[fi]);
      }
    for (size_t fi = 0; fi < thick.index_maps.size(); ++fi) {
      const auto& f = thick.index_maps[fi];
      for (int kk = 0; kk <= f.cod; ++kk) {
        const int ll = f.cod - kk;
        Subset sk = 0, sl = 0;
        for (int e :
             gammaskel::support(gammaskel::compose(gammaskel::delta_left(kk, ll), f)).elements)
          sk |= 1u << (e - 1);
        for (int e :
             gammaskel::support(gammaskel::compose(gammaskel::delta_right(kk, ll), f)).elements)
          sl |= 1u << (e - 1);
        out.sigma[{kk, ll, static_cast<int>(fi)}] = b.sigma_at(sk, sl);
      }
      if (f.cod == 0) out.u[static_cast<int>(fi)] = b.u;
    }
    return out;
  };
  auto key_of = [&](const PseudoBicycle& b) {
    std::vector<Id> key = b.c;
    for (const auto& [k2, v] : b.alpha) key.push_back(v);
    for (const auto& [k2, v] : b.sigma) key.push_back(v);
    for (const auto& [k2, v] : b.u) key.push_back(v);
    return key;
  };
  auto find_thick = [&](const PseudoBicycle& b) -> Id {
    const auto key = key_of(b);
    for (size_t i = 0; i < thick.objects.size(); ++i)
      if (key_of(thick.objects[i]) == key) return static_cast<Id>(i);
    return kNone;
  };
  std::vector<Id> img(deg.objects.size());
  std::map<std::vector<Id>, int> seen;
  for (size_t i = 0; i < deg.objects.size(); ++i) {
    const auto b = image_of(deg.objects[i]);
    img[i] = find_thick(b);
    if (img[i] == kNone) {
      r.add("comparison-image-missing", std::to_string(i));
      continue;
    }
    auto key = key_of(b);
    if (seen.count(key)) r.add("comparison-not-injective", std::to_string(i));
    seen[key] = static_cast<int>(i);
  }
  if (!r.ok()) return r;
  // fully faithful on the fragment: tau -> {F(f) = tau(Supp f)}
  for (size_t i = 0; i < deg.objects.size(); ++i)
    for (size_t j = 0; j < deg.objects.size(); ++j) {
      const auto nerve_hom = deg.cat->hom(static_cast<Id>(i), static_cast<Id>(j));
      const auto thick_hom = thick.cat->hom(img[i], img[j]);
      if (nerve_hom.size() != thick_hom.size()) {
        r.add("comparison-ff-count", std::to_string(i) + "->" + std::to_string(j));
        continue;
      }
      std::vector<char> hit(thick_hom.size(), 0);
      for (Id m : nerve_hom) {
        std::vector<Id> comp(thick.index_maps.size());
        for (size_t fi = 0; fi < thick.index_maps.size(); ++fi) {
          Subset sup = 0;
          for (int e : gammaskel::support(thick.index_maps[fi]).elements) sup |= 1u << (e - 1);
          comp[fi] = deg.components[m][sup];
        }
        bool matched = false;
        for (size_t t = 0; t < thick_hom.size(); ++t) {
          if (thick.components[thick_hom[t]] == comp) {
            if (hit[t]) r.add("comparison-ff-injective", "");
            hit[t] = 1;
            matched = true;
            break;
          }
        }
        if (!matched) r.add("comparison-ff-missing", "");
      }
    }
  return r;
}

}  // namespace segalnerve

