#include "permcat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace permcat {

namespace {
std::string obpair(Id a, Id b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
}  // namespace

Id tensor_word_ob(const PermCategory& p, std::span<const Id> word) {
  if (word.empty()) return p.unit;
  Id acc = word[0];
  for (size_t i = 1; i < word.size(); ++i) {
    acc = p.ob_tensor(acc, word[i]);
    if (acc == kNone) throw FragmentError("tensor undefined on a required word");
  }
  return acc;
}

Id tensor_word_mor(const PermCategory& p, std::span<const Id> word) {
  if (word.empty()) return p.base->identity(p.unit);
  Id acc = word[0];
  for (size_t i = 1; i < word.size(); ++i) {
    acc = p.mor_tensor(acc, word[i]);
    if (acc == kNone) throw FragmentError("morphism tensor undefined on a required word");
  }
  return acc;
}

Id coherence_iso(const PermCategory& p, std::span<const Id> word, std::span<const int> sigma) {
  const size_t n = word.size();
  if (sigma.size() != n) throw std::invalid_argument("coherence_iso: size mismatch");
  std::vector<Id> cur(word.begin(), word.end());
  std::vector<int> target(sigma.begin(), sigma.end());
  Id acc = p.base->identity(tensor_word_ob(p, cur));
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < n; ++i) {
      if (target[i] <= target[i + 1]) continue;
      std::vector<Id> pieces;
      pieces.reserve(n - 1);
      for (size_t j = 0; j < i; ++j) pieces.push_back(p.base->identity(cur[j]));
      const Id g = p.gamma(cur[i], cur[i + 1]);
      if (g == kNone) throw FragmentError("gamma undefined on a required pair");
      pieces.push_back(g);
      for (size_t j = i + 2; j < n; ++j) pieces.push_back(p.base->identity(cur[j]));
      const Id step = tensor_word_mor(p, pieces);
      acc = p.base->compose(step, acc);
      if (acc == kNone) throw FragmentError("composition left the fragment in coherence_iso");
      std::swap(cur[i], cur[i + 1]);
      std::swap(target[i], target[i + 1]);
      moved = true;
    }
  }
  return acc;
}

Report check_permutative(const PermCategory& p) {
  Report r;
  const fincat::FinCategory& b = *p.base;
  const int n = b.num_objects();
  if (p.unit == kNone || p.unit >= n) {
    r.add("unit", "missing unit object");
    return r;
  }
  for (Id a = 0; a < n; ++a) {
    if (p.ob_tensor(p.unit, a) != a) r.add("strict-unit", "e@a != a at a=" + std::to_string(a));
    if (p.ob_tensor(a, p.unit) != a) r.add("strict-unit", "a@e != a at a=" + std::to_string(a));
  }
  for (Id a = 0; a < n; ++a)
    for (Id bb = 0; bb < n; ++bb) {
      const Id ab = p.ob_tensor(a, bb);
      if (ab == kNone) continue;
      for (Id c = 0; c < n; ++c) {
        const Id bc = p.ob_tensor(bb, c);
        if (bc == kNone) continue;
        const Id left = p.ob_tensor(ab, c);
        const Id right = p.ob_tensor(a, bc);
        if (left != kNone && right != kNone && left != right)
          r.add("associativity-ob", obpair(a, bb) + "," + std::to_string(c));
      }
    }
  for (const auto& [key, fg] : p.mor_tensor_entries()) {
    const Id f = static_cast<Id>(key >> 32), g = static_cast<Id>(key & 0xffffffffu);
    const Id s = p.ob_tensor(b.src(f), b.src(g));
    const Id t = p.ob_tensor(b.tgt(f), b.tgt(g));
    if (s == kNone || t == kNone || b.src(fg) != s || b.tgt(fg) != t) {
      r.add("tensor-typing", "mor pair (" + std::to_string(f) + "," + std::to_string(g) + ")");
      continue;
    }
    if (b.is_identity(f) && b.is_identity(g) && !b.is_identity(fg))
      r.add("tensor-identities", "id@id not id at " + obpair(b.src(f), b.src(g)));
  }
  for (Id f = 0; f < b.num_morphisms(); ++f) {
    const Id ef = p.mor_tensor(b.identity(p.unit), f);
    if (ef != kNone && ef != f) r.add("strict-unit-mor", b.describe_morphism(f));
    const Id fe = p.mor_tensor(f, b.identity(p.unit));
    if (fe != kNone && fe != f) r.add("strict-unit-mor", b.describe_morphism(f));
  }
  // functoriality of the tensor: join defined entries along composability
  struct Entry {
    Id f, g, fg;
  };
  std::vector<Entry> entries;
  entries.reserve(p.mor_tensor_entries().size());
  for (const auto& [key, fg] : p.mor_tensor_entries())
    entries.push_back({static_cast<Id>(key >> 32), static_cast<Id>(key & 0xffffffffu), fg});
  std::unordered_map<std::uint64_t, std::vector<size_t>> by_src;
  auto pkey = [](Id a, Id c) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(c);
  };
  for (size_t i = 0; i < entries.size(); ++i)
    by_src[pkey(b.src(entries[i].f), b.src(entries[i].g))].push_back(i);
  for (const auto& first : entries) {
    auto it = by_src.find(pkey(b.tgt(first.f), b.tgt(first.g)));
    if (it == by_src.end()) continue;
    for (size_t j : it->second) {
      const Entry& second = entries[j];
      const Id cf = b.compose(second.f, first.f);
      const Id cg = b.compose(second.g, first.g);
      if (cf == kNone || cg == kNone) continue;
      const Id lhs = p.mor_tensor(cf, cg);
      if (lhs == kNone) continue;
      if (lhs != b.compose(second.fg, first.fg))
        r.add("tensor-functoriality",
              "(" + std::to_string(second.f) + "o" + std::to_string(first.f) + ")@(" +
                  std::to_string(second.g) + "o" + std::to_string(first.g) + ")");
    }
  }
  // gamma: typing, involution, unit components, naturality, hexagon
  for (Id a = 0; a < n; ++a)
    for (Id c = 0; c < n; ++c) {
      const Id ac = p.ob_tensor(a, c);
      if (ac == kNone) continue;
      const Id g = p.gamma(a, c);
      if (g == kNone) {
        r.add("gamma-missing", obpair(a, c));
        continue;
      }
      const Id ca = p.ob_tensor(c, a);
      if (b.src(g) != ac || ca == kNone || b.tgt(g) != ca) {
        r.add("gamma-typing", obpair(a, c));
        continue;
      }
      const Id g2 = p.gamma(c, a);
      if (g2 == kNone || b.compose(g2, g) != b.identity(ac)) r.add("gamma-involution", obpair(a, c));
      if (c == p.unit && !b.is_identity(g)) r.add("gamma-unit", std::to_string(a));
      if (a == p.unit && !b.is_identity(g)) r.add("gamma-unit", std::to_string(c));
    }
  for (const auto& e : entries) {
    const Id a = b.src(e.f), c = b.src(e.g);
    const Id a2 = b.tgt(e.f), c2 = b.tgt(e.g);
    const Id g1 = p.gamma(a, c), g2 = p.gamma(a2, c2);
    const Id gf = p.mor_tensor(e.g, e.f);
    if (g1 == kNone || g2 == kNone || gf == kNone) continue;
    if (b.compose(g2, e.fg) != b.compose(gf, g1))
      r.add("gamma-naturality", "mor pair (" + std::to_string(e.f) + "," + std::to_string(e.g) + ")");
  }
  for (Id a = 0; a < n; ++a)
    for (Id bb = 0; bb < n; ++bb) {
      const Id ab = p.ob_tensor(a, bb);
      if (ab == kNone) continue;
      for (Id c = 0; c < n; ++c) {
        if (p.ob_tensor(ab, c) == kNone) continue;
        const Id gac = p.gamma(a, c), gbc = p.gamma(bb, c), gabc = p.gamma(ab, c);
        if (gac == kNone || gbc == kNone || gabc == kNone) continue;
        const Id left = p.mor_tensor(gac, b.identity(bb));
        const Id right = p.mor_tensor(b.identity(a), gbc);
        if (left == kNone || right == kNone) continue;
        if (gabc != b.compose(left, right)) r.add("hexagon", obpair(a, bb) + "," + std::to_string(c));
      }
    }
  return r;
}

StrictSMFunctor StrictSMFunctor::identity(PermPtr p) {
  auto f = Functor::identity(p->base);
  return StrictSMFunctor{p, p, std::move(f)};
}

StrictSMFunctor compose(const StrictSMFunctor& g, const StrictSMFunctor& f) {
  return StrictSMFunctor{f.dom, g.cod, fincat::compose(g.f, f.f)};
}

Report check_strict_sm_functor(const StrictSMFunctor& fn) {
  Report r;
  r.merge(fn.f.validate(), "underlying");
  if (!r.ok()) return r;
  const PermCategory& c = *fn.dom;
  const PermCategory& d = *fn.cod;
  if (fn.f.ob[c.unit] != d.unit) r.add("unit-preservation", "F(e) != e");
  const int n = c.nob();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      const Id im = d.ob_tensor(fn.f.ob[a], fn.f.ob[b]);
      if (im == kNone || fn.f.ob[ab] != im) r.add("tensor-ob-preservation", obpair(a, b));
      const Id gc = c.gamma(a, b);
      const Id gd = d.gamma(fn.f.ob[a], fn.f.ob[b]);
      if (gc != kNone && (gd == kNone || fn.f.mor[gc] != gd)) r.add("gamma-preservation", obpair(a, b));
    }
  for (const auto& [key, fg] : c.mor_tensor_entries()) {
    const Id f = static_cast<Id>(key >> 32), g = static_cast<Id>(key & 0xffffffffu);
    const Id im = d.mor_tensor(fn.f.mor[f], fn.f.mor[g]);
    if (im == kNone || fn.f.mor[fg] != im)
      r.add("tensor-mor-preservation", "(" + std::to_string(f) + "," + std::to_string(g) + ")");
  }
  return r;
}

Report check_monoidal_nat(const PermPtr& dom_cat, const PermPtr& cod_cat, const NatTrans& nt) {
  Report r;
  r.merge(nt.validate(), "underlying");
  if (!r.ok()) return r;
  const PermCategory& c = *dom_cat;
  const PermCategory& d = *cod_cat;
  if (!d.base->is_identity(nt.component[c.unit])) r.add("unital", "component at unit not id");
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b = 0; b < c.nob(); ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      const Id tens = d.mor_tensor(nt.component[a], nt.component[b]);
      if (tens == kNone || nt.component[ab] != tens) r.add("monoidal", obpair(a, b));
    }
  return r;
}

bool Monoid::commutative() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

PermPtr discrete_perm(const Monoid& m) {
  fincat::FinCategory k;
  k.name = m.name.empty() ? ("monoid" + std::to_string(m.order)) : m.name;
  for (int i = 0; i < m.order; ++i) k.add_object();
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = p.base->name;
  p.unit = m.unit;
  for (Id a = 0; a < m.order; ++a)
    for (Id b = 0; b < m.order; ++b) {
      p.set_ob_tensor(a, b, m.at(a, b));
      p.set_gamma(a, b, p.base->identity(m.at(a, b)));
      p.set_mor_tensor(p.base->identity(a), p.base->identity(b), p.base->identity(m.at(a, b)));
    }
  return std::make_shared<const PermCategory>(std::move(p));
}

PermPtr trivial_perm() {
  static PermPtr p = [] {
    Monoid m;
    m.name = "1";
    m.order = 1;
    m.unit = 0;
    m.mul = {0};
    return discrete_perm(m);
  }();
  return p;
}

std::vector<StrictSMFunctor> enumerate_strict_sm_functors(PermPtr c, PermPtr d, long budget) {
  std::vector<StrictSMFunctor> out;
  const PermCategory& pc = *c;
  const PermCategory& pd = *d;
  const fincat::FinCategory& cb = *pc.base;
  const fincat::FinCategory& db = *pd.base;
  const int n = pc.nob();

  auto object_map_ok = [&](const std::vector<Id>& ob) {
    if (n > 0 && ob[pc.unit] != pd.unit) return false;
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id ab = pc.ob_tensor(a, b);
        if (ab == kNone) continue;
        const Id im = pd.ob_tensor(ob[a], ob[b]);
        if (im == kNone || im != ob[ab]) return false;
      }
    return true;
  };

  std::vector<std::vector<Id>> ob_maps;
  const bool use_generators =
      !pc.generator_objects.empty() && static_cast<int>(pc.object_word.size()) == n;
  if (use_generators) {
    const size_t g = pc.generator_objects.size();
    std::vector<Id> gen_img(g, 0);
    long count = 0;
    while (true) {
      if (++count > budget) throw fincat::BudgetExceeded("strict SM object enumeration budget");
      std::vector<Id> ob(n, kNone);
      bool ok = true;
      try {
        for (Id a = 0; a < n && ok; ++a) {
          std::vector<Id> img_word(pc.object_word[a].size());
          for (size_t i = 0; i < img_word.size(); ++i) img_word[i] = gen_img[pc.object_word[a][i]];
          ob[a] = tensor_word_ob(pd, img_word);
        }
      } catch (const FragmentError&) {
        ok = false;
      }
      if (ok && object_map_ok(ob)) ob_maps.push_back(ob);
      size_t i = g;
      while (i > 0 && gen_img[i - 1] == pd.nob() - 1) gen_img[--i] = 0;
      if (i == 0) break;
      ++gen_img[i - 1];
    }
  } else if (n == 0) {
    ob_maps.push_back({});
  } else if (pd.nob() > 0) {
    std::vector<Id> ob(n, 0);
    long count = 0;
    while (true) {
      if (++count > budget) throw fincat::BudgetExceeded("strict SM object enumeration budget");
      if (object_map_ok(ob)) ob_maps.push_back(ob);
      int i = n - 1;
      while (i >= 0 && ob[i] == pd.nob() - 1) ob[i--] = 0;
      if (i < 0) break;
      ++ob[i];
    }
  }

  std::vector<std::vector<std::pair<Id, Id>>> tensor_pairs(cb.num_morphisms());
  for (const auto& [key, fg] : pc.mor_tensor_entries())
    tensor_pairs[fg].push_back({static_cast<Id>(key >> 32), static_cast<Id>(key & 0xffffffffu)});
  std::vector<std::pair<Id, Id>> gamma_of(cb.num_morphisms(), {kNone, kNone});
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      if (pc.gamma(a, b) != kNone) gamma_of[pc.gamma(a, b)] = {a, b};

  long nodes = budget;
  for (const auto& ob : ob_maps) {
    std::vector<Id> mor(cb.num_morphisms(), kNone);
    for (Id o = 0; o < n; ++o) mor[cb.identity(o)] = db.identity(ob[o]);
    bool feasible = true;
    for (Id m = 0; m < cb.num_morphisms() && feasible; ++m) {
      if (gamma_of[m].first == kNone) continue;
      const Id gd = pd.gamma(ob[gamma_of[m].first], ob[gamma_of[m].second]);
      if (gd == kNone || (mor[m] != kNone && mor[m] != gd)) {
        feasible = false;
        break;
      }
      mor[m] = gd;
    }
    if (!feasible) continue;

    auto consistent_at = [&](Id m) {
      for (Id y = 0; y <= m; ++y) {
        if (mor[y] == kNone) continue;
        const Id c1 = cb.compose(m, y);
        if (c1 != kNone && c1 <= m && mor[c1] != kNone && mor[c1] != db.compose(mor[m], mor[y]))
          return false;
        const Id c2 = cb.compose(y, m);
        if (c2 != kNone && c2 <= m && mor[c2] != kNone && mor[c2] != db.compose(mor[y], mor[m]))
          return false;
        for (Id x = 0; x <= m; ++x) {
          if (mor[x] == kNone) continue;
          if (cb.compose(x, y) == m && mor[m] != db.compose(mor[x], mor[y])) return false;
        }
      }
      for (const auto& [x, y] : tensor_pairs[m]) {
        if (x <= m && y <= m && mor[x] != kNone && mor[y] != kNone) {
          const Id im = pd.mor_tensor(mor[x], mor[y]);
          if (im == kNone || im != mor[m]) return false;
        }
      }
      return true;
    };
    std::function<void(Id)> rec = [&](Id m) {
      while (m < cb.num_morphisms() && mor[m] != kNone) {
        if (!consistent_at(m)) return;
        ++m;
      }
      if (m == cb.num_morphisms()) {
        StrictSMFunctor cand{c, d, Functor(pc.base, pd.base, ob, mor)};
        if (check_strict_sm_functor(cand).ok()) {
          out.push_back(std::move(cand));
          if (static_cast<long>(out.size()) > budget)
            throw fincat::BudgetExceeded("strict SM functor enumeration budget");
        }
        return;
      }
      for (Id w = 0; w < db.num_morphisms(); ++w) {
        if (db.src(w) != ob[cb.src(m)] || db.tgt(w) != ob[cb.tgt(m)]) continue;
        if (--nodes < 0) throw fincat::BudgetExceeded("strict SM functor enumeration budget");
        mor[m] = w;
        if (consistent_at(m)) rec(m + 1);
        mor[m] = kNone;
      }
    };
    rec(0);
  }
  return out;
}

namespace {

bool iso_components(const fincat::FinCategory& b, const NatTrans& nt) {
  for (Id comp : nt.component)
    if (!b.is_invertible(comp)) return false;
  return true;
}

// unital + monoidal component equations for a transformation valued in d
bool unital_monoidal(const PermCategory& c, const PermCategory& d, const NatTrans& nt) {
  if (!d.base->is_identity(nt.component[c.unit])) return false;
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b2 = 0; b2 < c.nob(); ++b2) {
      const Id ab = c.ob_tensor(a, b2);
      if (ab == kNone) continue;
      const Id t = d.mor_tensor(nt.component[a], nt.component[b2]);
      if (t == kNone || nt.component[ab] != t) return false;
    }
  return true;
}

}  // namespace

std::optional<MonoidalInverseWitness> monoidal_quasi_inverse(const StrictSMFunctor& f, long budget) {
  const PermCategory& c = *f.dom;
  const PermCategory& d = *f.cod;
  const Functor idc = Functor::identity(c.base);
  const Functor idd = Functor::identity(d.base);
  for (const auto& g : fincat::enumerate_functors(d.base, c.base, budget)) {
    if (g.ob[d.unit] != c.unit) continue;
    const Functor gf = fincat::compose(g, f.f);
    const Functor fg = fincat::compose(f.f, g);
    for (const auto& eta : fincat::enumerate_nat_trans(idc, gf, budget)) {
      if (!iso_components(*c.base, eta) || !unital_monoidal(c, c, eta)) continue;
      for (const auto& eps : fincat::enumerate_nat_trans(fg, idd, budget)) {
        if (!iso_components(*d.base, eps) || !unital_monoidal(d, d, eps)) continue;
        return MonoidalInverseWitness{g, eta, eps};
      }
    }
  }
  return std::nullopt;
}

std::optional<MonoidalSectionWitness> monoidal_section(const StrictSMFunctor& f, long budget) {
  const PermCategory& c = *f.dom;
  const PermCategory& d = *f.cod;
  const Functor idc = Functor::identity(c.base);
  const Functor idd = Functor::identity(d.base);
  for (const auto& g : fincat::enumerate_functors(d.base, c.base, budget)) {
    if (!(fincat::compose(f.f, g) == idd)) continue;
    const Functor gf = fincat::compose(g, f.f);
    for (const auto& eta : fincat::enumerate_nat_trans(idc, gf, budget)) {
      if (!iso_components(*c.base, eta) || !unital_monoidal(c, c, eta)) continue;
      return MonoidalSectionWitness{g, eta};
    }
  }
  return std::nullopt;
}

SMHomCategory strict_sm_hom(PermPtr c, PermPtr d, long budget) {
  SMHomCategory out;
  out.objects = enumerate_strict_sm_functors(c, d, budget);
  fincat::FinCategory k;
  k.name = "StrSMHom(" + (c->name.empty() ? "C" : c->name) + "," + (d->name.empty() ? "D" : d->name) + ")";
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();
  out.transformations.resize(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i) {
    NatTrans idt;
    idt.dom = out.objects[i].f;
    idt.cod = out.objects[i].f;
    idt.component.resize(c->nob());
    for (Id x = 0; x < c->nob(); ++x) idt.component[x] = d->base->identity(out.objects[i].f.ob[x]);
    out.transformations[i] = std::move(idt);
  }
  std::map<std::pair<std::pair<int, int>, std::vector<Id>>, Id> index;
  for (size_t i = 0; i < out.objects.size(); ++i)
    index[{{static_cast<int>(i), static_cast<int>(i)}, out.transformations[i].component}] = static_cast<Id>(i);
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      auto nts = fincat::enumerate_nat_trans(out.objects[i].f, out.objects[j].f, budget);
      for (auto& nt : nts) {
        if (!check_monoidal_nat(c, d, nt).ok()) continue;
        auto key = std::make_pair(std::make_pair(static_cast<int>(i), static_cast<int>(j)), nt.component);
        if (index.count(key)) continue;
        if (++total > budget) throw fincat::BudgetExceeded("strict SM hom budget");
        index[key] = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
        out.transformations.push_back(std::move(nt));
      }
    }
  std::map<std::pair<std::vector<Id>, std::vector<Id>>, int> fidx;
  for (size_t o = 0; o < out.objects.size(); ++o) fidx[{out.objects[o].f.ob, out.objects[o].f.mor}] = static_cast<int>(o);
  // src/tgt functor of each transformation by id
  std::vector<std::pair<int, int>> ends(out.transformations.size());
  for (size_t t = 0; t < out.transformations.size(); ++t)
    ends[t] = {fidx.at({out.transformations[t].dom.ob, out.transformations[t].dom.mor}),
               fidx.at({out.transformations[t].cod.ob, out.transformations[t].cod.mor})};
  for (size_t gi = 0; gi < out.transformations.size(); ++gi)
    for (size_t fi = 0; fi < out.transformations.size(); ++fi) {
      if (ends[fi].second != ends[gi].first) continue;
      NatTrans comp = fincat::compose(out.transformations[gi], out.transformations[fi]);
      k.set_compose(static_cast<Id>(gi), static_cast<Id>(fi),
                    index.at({{ends[fi].first, ends[gi].second}, comp.component}));
    }
  out.cat = fincat::make_cat(std::move(k));
  return out;
}

ChaoticPerm chaotic_perm(PermPtr c) {
  const int n = c->nob();
  const std::string ec_name = "E(" + (c->name.empty() ? "C" : c->name) + ")";
  fincat::FinCategory k;
  k.name = ec_name;
  for (int i = 0; i < n; ++i) k.add_object();
  std::vector<std::vector<Id>> arrow(n, std::vector<Id>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) arrow[a][b] = (a == b) ? k.identity(a) : k.add_morphism(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) k.set_compose(arrow[b][cc], arrow[a][b], arrow[a][cc]);
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = ec_name;
  p.unit = c->unit;
  p.bounded = c->bounded;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id ab = c->ob_tensor(a, b);
      if (ab == kNone) continue;
      p.set_ob_tensor(a, b, ab);
      p.set_gamma(a, b, arrow[ab][c->ob_tensor(b, a)]);
    }
  for (Id f = 0; f < p.base->num_morphisms(); ++f)
    for (Id g = 0; g < p.base->num_morphisms(); ++g) {
      const Id s = p.ob_tensor(p.base->src(f), p.base->src(g));
      const Id t = p.ob_tensor(p.base->tgt(f), p.base->tgt(g));
      if (s != kNone && t != kNone) p.set_mor_tensor(f, g, arrow[s][t]);
    }
  auto pp = std::make_shared<const PermCategory>(std::move(p));
  std::vector<Id> ob(n), mor(c->base->num_morphisms());
  for (Id o = 0; o < n; ++o) ob[o] = o;
  for (Id m = 0; m < c->base->num_morphisms(); ++m) mor[m] = arrow[c->base->src(m)][c->base->tgt(m)];
  StrictSMFunctor iota{c, pp, Functor(c->base, pp->base, std::move(ob), std::move(mor))};
  return ChaoticPerm{pp, std::move(iota)};
}

MappingPath mapping_path_factorize(const StrictSMFunctor& fn) {
  const PermCategory& x = *fn.dom;
  const PermCategory& y = *fn.cod;
  const fincat::FinCategory& xb = *x.base;
  const fincat::FinCategory& yb = *y.base;

  struct Ob {
    Id iso, a, b;
  };
  std::vector<Ob> obs;
  for (Id a = 0; a < xb.num_objects(); ++a)
    for (Id b = 0; b < yb.num_objects(); ++b)
      for (Id m : yb.hom(fn.f.ob[a], b))
        if (yb.is_invertible(m)) obs.push_back({m, a, b});
  std::map<std::tuple<Id, Id, Id>, Id> ob_index;
  fincat::FinCategory k;
  k.name = "P(" + (fn.dom->name.empty() ? "F" : fn.dom->name) + ")";
  for (size_t i = 0; i < obs.size(); ++i) {
    k.add_object();
    ob_index[{obs[i].iso, obs[i].a, obs[i].b}] = static_cast<Id>(i);
  }
  struct Mor {
    Id u, v;  // components in X and Y
    Id s, t;  // endpoints in P(F)
  };
  std::vector<Mor> mors(obs.size());
  std::map<std::tuple<Id, Id, Id>, Id> mor_index;  // (u, v, source object)
  for (size_t i = 0; i < obs.size(); ++i) {
    const Mor idm{xb.identity(obs[i].a), yb.identity(obs[i].b), static_cast<Id>(i), static_cast<Id>(i)};
    mors[k.identity(static_cast<Id>(i))] = idm;
    mor_index[{idm.u, idm.v, idm.s}] = k.identity(static_cast<Id>(i));
  }
  for (size_t i = 0; i < obs.size(); ++i)
    for (size_t j = 0; j < obs.size(); ++j) {
      const Ob& s = obs[i];
      const Ob& t = obs[j];
      for (Id u : xb.hom(s.a, t.a))
        for (Id v : yb.hom(s.b, t.b)) {
          if (yb.compose(v, s.iso) != yb.compose(t.iso, fn.f.mor[u])) continue;
          if (mor_index.count({u, v, static_cast<Id>(i)})) continue;
          const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
          mor_index[{u, v, static_cast<Id>(i)}] = m;
          mors.push_back({u, v, static_cast<Id>(i), static_cast<Id>(j)});
        }
    }
  for (size_t m2 = 0; m2 < mors.size(); ++m2)
    for (size_t m1 = 0; m1 < mors.size(); ++m1) {
      if (mors[m1].t != mors[m2].s) continue;
      const Id cu = xb.compose(mors[m2].u, mors[m1].u);
      const Id cv = yb.compose(mors[m2].v, mors[m1].v);
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1), mor_index.at({cu, cv, mors[m1].s}));
    }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = "P(F)";
  p.bounded = x.bounded || y.bounded;
  p.unit = ob_index.at({yb.identity(y.unit), x.unit, y.unit});
  for (size_t i = 0; i < obs.size(); ++i)
    for (size_t j = 0; j < obs.size(); ++j) {
      const Id at = x.ob_tensor(obs[i].a, obs[j].a);
      const Id bt = y.ob_tensor(obs[i].b, obs[j].b);
      const Id mt = y.mor_tensor(obs[i].iso, obs[j].iso);
      if (at == kNone || bt == kNone || mt == kNone) continue;
      const Id tid = ob_index.at({mt, at, bt});
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), tid);
      const Id gx = x.gamma(obs[i].a, obs[j].a);
      const Id gy = y.gamma(obs[i].b, obs[j].b);
      if (gx != kNone && gy != kNone) p.set_gamma(static_cast<Id>(i), static_cast<Id>(j), mor_index.at({gx, gy, tid}));
    }
  for (size_t m1 = 0; m1 < mors.size(); ++m1)
    for (size_t m2 = 0; m2 < mors.size(); ++m2) {
      const Id ut = x.mor_tensor(mors[m1].u, mors[m2].u);
      const Id vt = y.mor_tensor(mors[m1].v, mors[m2].v);
      if (ut == kNone || vt == kNone) continue;
      const Id s = p.ob_tensor(mors[m1].s, mors[m2].s);
      if (s == kNone) continue;
      auto it = mor_index.find({ut, vt, s});
      if (it != mor_index.end()) p.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2), it->second);
    }
  auto pf = std::make_shared<const PermCategory>(std::move(p));

  std::vector<Id> ix_ob(xb.num_objects()), ix_mor(xb.num_morphisms());
  for (Id a = 0; a < xb.num_objects(); ++a) ix_ob[a] = ob_index.at({yb.identity(fn.f.ob[a]), a, fn.f.ob[a]});
  for (Id m = 0; m < xb.num_morphisms(); ++m) ix_mor[m] = mor_index.at({m, fn.f.mor[m], ix_ob[xb.src(m)]});
  StrictSMFunctor i_x{fn.dom, pf, Functor(x.base, pf->base, std::move(ix_ob), std::move(ix_mor))};

  std::vector<Id> py_ob(pf->nob()), py_mor(pf->base->num_morphisms());
  for (size_t i = 0; i < obs.size(); ++i) py_ob[i] = obs[i].b;
  for (size_t m = 0; m < mors.size(); ++m) py_mor[m] = mors[m].v;
  StrictSMFunctor p_y{pf, fn.cod, Functor(pf->base, y.base, std::move(py_ob), std::move(py_mor))};

  std::vector<Id> px_ob(pf->nob()), px_mor(pf->base->num_morphisms());
  for (size_t i = 0; i < obs.size(); ++i) px_ob[i] = obs[i].a;
  for (size_t m = 0; m < mors.size(); ++m) px_mor[m] = mors[m].u;
  StrictSMFunctor p_x{pf, fn.dom, Functor(pf->base, x.base, std::move(px_ob), std::move(px_mor))};

  return MappingPath{pf, std::move(i_x), std::move(p_y), std::move(p_x)};
}

Cotensor cotensor_perm(CatPtr a, PermPtr d, long budget) {
  Cotensor out;
  out.fc = fincat::functor_category(a, d->base, budget);
  const auto& fc = out.fc;
  PermCategory p(fc.cat);
  p.name = "[" + a->name + "," + d->name + "]";
  p.bounded = d->bounded;
  auto find_ob = [&](const Functor& f) -> Id {
    for (size_t i = 0; i < fc.objects.size(); ++i)
      if (fc.objects[i] == f) return static_cast<Id>(i);
    return kNone;
  };
  auto find_mor = [&](const Functor& s, const Functor& t, const std::vector<Id>& comp) -> Id {
    for (size_t i = 0; i < fc.transformations.size(); ++i)
      if (fc.transformations[i].dom == s && fc.transformations[i].cod == t &&
          fc.transformations[i].component == comp)
        return static_cast<Id>(i);
    return kNone;
  };
  p.unit = find_ob(Functor::constant(a, d->base, d->unit));
  if (p.unit == kNone) throw FragmentError("cotensor: constant-unit functor missing from enumeration");
  auto pointwise_tensor = [&](const Functor& f, const Functor& g) -> std::optional<Functor> {
    std::vector<Id> ob(f.ob.size()), mor(f.mor.size());
    for (size_t i = 0; i < ob.size(); ++i) {
      ob[i] = d->ob_tensor(f.ob[i], g.ob[i]);
      if (ob[i] == kNone) return std::nullopt;
    }
    for (size_t i = 0; i < mor.size(); ++i) {
      mor[i] = d->mor_tensor(f.mor[i], g.mor[i]);
      if (mor[i] == kNone) return std::nullopt;
    }
    return Functor(a, d->base, std::move(ob), std::move(mor));
  };
  for (size_t i = 0; i < fc.objects.size(); ++i)
    for (size_t j = 0; j < fc.objects.size(); ++j) {
      auto t = pointwise_tensor(fc.objects[i], fc.objects[j]);
      if (!t) continue;
      const Id tid = find_ob(*t);
      if (tid == kNone) continue;
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), tid);
      std::vector<Id> comp(a->num_objects());
      bool ok = true;
      for (Id ao = 0; ao < a->num_objects() && ok; ++ao) {
        comp[ao] = d->gamma(fc.objects[i].ob[ao], fc.objects[j].ob[ao]);
        if (comp[ao] == kNone) ok = false;
      }
      if (ok) {
        auto rev = pointwise_tensor(fc.objects[j], fc.objects[i]);
        if (rev) {
          const Id g = find_mor(*t, *rev, comp);
          if (g != kNone) p.set_gamma(static_cast<Id>(i), static_cast<Id>(j), g);
        }
      }
    }
  for (size_t i = 0; i < fc.transformations.size(); ++i)
    for (size_t j = 0; j < fc.transformations.size(); ++j) {
      const NatTrans& s = fc.transformations[i];
      const NatTrans& t = fc.transformations[j];
      std::vector<Id> comp(a->num_objects());
      bool ok = true;
      for (Id ao = 0; ao < a->num_objects() && ok; ++ao) {
        comp[ao] = d->mor_tensor(s.component[ao], t.component[ao]);
        if (comp[ao] == kNone) ok = false;
      }
      if (!ok) continue;
      auto sd = pointwise_tensor(s.dom, t.dom);
      auto sc = pointwise_tensor(s.cod, t.cod);
      if (!sd || !sc) continue;
      const Id m = find_mor(*sd, *sc, comp);
      if (m != kNone) p.set_mor_tensor(static_cast<Id>(i), static_cast<Id>(j), m);
    }
  out.cat = std::make_shared<const PermCategory>(std::move(p));
  return out;
}

}  // namespace permcat
