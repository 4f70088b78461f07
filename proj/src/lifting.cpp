#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "fincat.hpp"

namespace fincat {

bool is_fully_faithful(const Functor& f) {
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  for (Id x = 0; x < a.num_objects(); ++x)
    for (Id y = 0; y < a.num_objects(); ++y) {
      const auto ha = a.hom(x, y);
      const auto hb = b.hom(f.ob[x], f.ob[y]);
      if (ha.size() != hb.size()) return false;
      std::vector<char> hit(b.num_morphisms(), 0);
      for (Id m : ha) {
        if (hit[f.mor[m]]) return false;  // not injective
        hit[f.mor[m]] = 1;
      }
    }
  return true;
}

bool is_essentially_surjective(const Functor& f) {
  const FinCategory& b = *f.cod;
  for (Id y = 0; y < b.num_objects(); ++y) {
    bool found = false;
    for (Id x = 0; x < f.dom->num_objects() && !found; ++x)
      if (b.isomorphic_objects(f.ob[x], y)) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_equivalence(const Functor& f) {
  if (!f.validate().ok()) throw std::invalid_argument("is_equivalence: invalid functor");
  return is_fully_faithful(f) && is_essentially_surjective(f);
}

std::optional<EquivalenceWitness> equivalence_witness(const Functor& f) {
  if (!is_fully_faithful(f) || !is_essentially_surjective(f)) return std::nullopt;
  const FinCategory& c = *f.dom;
  const FinCategory& d = *f.cod;
  // deterministic object section: least preimage-up-to-iso, least iso witness
  std::vector<Id> sec(d.num_objects(), kNone);   // chosen object of C
  std::vector<Id> eps(d.num_objects(), kNone);   // iso F(sec(b)) -> b
  for (Id b = 0; b < d.num_objects(); ++b) {
    for (Id a = 0; a < c.num_objects() && sec[b] == kNone; ++a) {
      if (f.ob[a] == b) {
        sec[b] = a;
        eps[b] = d.identity(b);
      }
    }
    for (Id a = 0; a < c.num_objects() && sec[b] == kNone; ++a) {
      for (Id m : d.hom(f.ob[a], b)) {
        if (d.is_invertible(m)) {
          sec[b] = a;
          eps[b] = m;
          break;
        }
      }
    }
  }
  auto preimage = [&](Id x, Id y, Id target) -> Id {
    // unique m in hom_C(x,y) with F(m) == target
    for (Id m : c.hom(x, y))
      if (f.mor[m] == target) return m;
    return kNone;
  };
  std::vector<Id> gmor(d.num_morphisms(), kNone);
  for (Id g = 0; g < d.num_morphisms(); ++g) {
    const Id b = d.src(g), b2 = d.tgt(g);
    const Id conj = d.compose(d.inverse(eps[b2]), d.compose(g, eps[b]));
    gmor[g] = preimage(sec[b], sec[b2], conj);
    if (gmor[g] == kNone) return std::nullopt;
  }
  Functor gfun(f.cod, f.dom, sec, std::move(gmor));
  NatTrans unit;
  unit.dom = Functor::identity(f.dom);
  unit.cod = compose(gfun, f);
  unit.component.resize(c.num_objects());
  for (Id x = 0; x < c.num_objects(); ++x) {
    unit.component[x] = preimage(x, sec[f.ob[x]], d.inverse(eps[f.ob[x]]));
    if (unit.component[x] == kNone) return std::nullopt;
  }
  NatTrans counit;
  counit.dom = compose(f, gfun);
  counit.cod = Functor::identity(f.cod);
  counit.component = eps;
  return EquivalenceWitness{std::move(gfun), std::move(unit), std::move(counit)};
}

bool is_isofibration(const Functor& f) {
  const FinCategory& c = *f.dom;
  const FinCategory& d = *f.cod;
  for (Id x = 0; x < c.num_objects(); ++x) {
    for (Id v = 0; v < d.num_morphisms(); ++v) {
      if (d.src(v) != f.ob[x] || !d.is_invertible(v)) continue;
      bool lifted = false;
      for (Id u = 0; u < c.num_morphisms() && !lifted; ++u)
        if (c.src(u) == x && c.is_invertible(u) && f.mor[u] == v) lifted = true;
      if (!lifted) return false;
    }
  }
  return true;
}

Report LiftingProblem::validate() const {
  Report r;
  r.merge(left.validate(), "left");
  r.merge(right.validate(), "right");
  r.merge(top.validate(), "top");
  r.merge(bottom.validate(), "bottom");
  if (!r.ok()) return r;
  if (left.dom != top.dom || left.cod != bottom.dom || right.dom != top.cod || right.cod != bottom.cod) {
    r.add("square-shape", "functor endpoints disagree");
    return r;
  }
  if (!(compose(right, top) == compose(bottom, left))) r.add("square-commutes", "p o top != bottom o i");
  return r;
}

namespace {

// Shared incremental-consistency backtracking over morphism assignments.
// `assigned` are examined in id order; identities are pre-assigned.
struct MorphismSearch {
  const FinCategory& dom;
  const FinCategory& cod;
  const std::vector<Id>& ob;            // object assignment
  std::vector<Id>& mor;                 // partial morphism assignment (kNone = todo)
  long* budget = nullptr;

  bool consistent_at(Id m) const {
    for (Id y = 0; y <= m; ++y) {
      if (mor[y] == kNone) continue;
      const Id c1 = dom.compose(m, y);
      if (c1 != kNone && c1 <= m && mor[c1] != kNone &&
          mor[c1] != cod.compose(mor[m], mor[y]))
        return false;
      const Id c2 = dom.compose(y, m);
      if (c2 != kNone && c2 <= m && mor[c2] != kNone &&
          mor[c2] != cod.compose(mor[y], mor[m]))
        return false;
      // triples whose composite is m itself
      for (Id x = 0; x <= m; ++x) {
        if (mor[x] == kNone) continue;
        if (dom.compose(x, y) == m && mor[m] != cod.compose(mor[x], mor[y])) return false;
      }
    }
    return true;
  }

  template <typename Yield>
  bool run(Id m, Yield&& yield) {
    const int n = dom.num_morphisms();
    while (m < n && mor[m] != kNone) {
      if (!consistent_at(m)) return false;
      ++m;
    }
    if (m == n) return yield();
    for (Id w = 0; w < cod.num_morphisms(); ++w) {
      if (cod.src(w) != ob[dom.src(m)] || cod.tgt(w) != ob[dom.tgt(m)]) continue;
      if (budget && --*budget < 0) throw BudgetExceeded("morphism assignment budget exceeded");
      mor[m] = w;
      if (consistent_at(m) && run(m + 1, yield)) return true;
      mor[m] = kNone;
    }
    return false;
  }
};

}  // namespace

std::optional<Functor> solve_rlp(const LiftingProblem& p) {
  {
    Report r = p.validate();
    if (!r.ok()) throw std::invalid_argument("solve_rlp: invalid lifting problem: " + r.to_text());
  }
  const FinCategory& a = *p.left.dom;
  const FinCategory& b = *p.left.cod;
  const FinCategory& x = *p.right.dom;
  std::vector<Id> ob(b.num_objects(), kNone);
  // forced by the top triangle: L(i(a)) = top(a)
  for (Id o = 0; o < a.num_objects(); ++o) {
    Id& slot = ob[p.left.ob[o]];
    if (slot != kNone && slot != p.top.ob[o]) return std::nullopt;
    slot = p.top.ob[o];
  }
  std::vector<Id> forced_mor(b.num_morphisms(), kNone);
  for (Id m = 0; m < a.num_morphisms(); ++m) {
    Id& slot = forced_mor[p.left.mor[m]];
    if (slot != kNone && slot != p.top.mor[m]) return std::nullopt;
    slot = p.top.mor[m];
  }

  std::optional<Functor> result;
  // backtracking over unforced objects, lexicographic
  std::vector<Id> todo;
  for (Id o = 0; o < b.num_objects(); ++o)
    if (ob[o] == kNone) todo.push_back(o);

  auto try_morphisms = [&]() -> bool {
    std::vector<Id> mor(b.num_morphisms(), kNone);
    for (Id m = 0; m < b.num_morphisms(); ++m) {
      if (forced_mor[m] != kNone) {
        mor[m] = forced_mor[m];
        if (x.src(mor[m]) != ob[b.src(m)] || x.tgt(mor[m]) != ob[b.tgt(m)]) return false;
        if (p.right.mor[mor[m]] != p.bottom.mor[m]) return false;
      } else if (b.is_identity(m)) {
        mor[m] = x.identity(ob[b.src(m)]);
        if (p.right.mor[mor[m]] != p.bottom.mor[m]) return false;
      }
    }
    // candidates restricted to the fiber of the bottom triangle
    std::function<bool(Id)> rec = [&](Id m) -> bool {
      const int n = b.num_morphisms();
      MorphismSearch chk{b, x, ob, mor, nullptr};
      while (m < n && mor[m] != kNone) {
        if (!chk.consistent_at(m)) return false;
        ++m;
      }
      if (m == n) {
        result = Functor(p.left.cod, p.right.dom, ob, mor);
        return true;
      }
      for (Id w = 0; w < x.num_morphisms(); ++w) {
        if (x.src(w) != ob[b.src(m)] || x.tgt(w) != ob[b.tgt(m)]) continue;
        if (p.right.mor[w] != p.bottom.mor[m]) continue;
        mor[m] = w;
        if (chk.consistent_at(m) && rec(m + 1)) return true;
        mor[m] = kNone;
      }
      return false;
    };
    return rec(0);
  };

  std::function<bool(size_t)> assign_ob = [&](size_t t) -> bool {
    if (t == todo.size()) return try_morphisms();
    const Id o = todo[t];
    for (Id v = 0; v < x.num_objects(); ++v) {
      if (p.right.ob[v] != p.bottom.ob[o]) continue;
      ob[o] = v;
      if (assign_ob(t + 1)) return true;
      ob[o] = kNone;
    }
    return false;
  };
  assign_ob(0);
  return result;
}

bool has_rlp(const Functor& i, const Functor& p, long budget) {
  auto tops = enumerate_functors(i.dom, p.dom, budget);
  auto bottoms = enumerate_functors(i.cod, p.cod, budget);
  for (const auto& top : tops) {
    const Functor pt = compose(p, top);
    for (const auto& bottom : bottoms) {
      if (!(pt == compose(bottom, i))) continue;
      LiftingProblem lp{i, p, top, bottom};
      if (!solve_rlp(lp).has_value()) return false;
    }
  }
  return true;
}

MapClassification classify_map(const Functor& f) {
  MapClassification out;
  out.cofibration = f.injective_on_objects();
  out.fibration = is_isofibration(f);
  out.weak_equivalence = is_fully_faithful(f) && is_essentially_surjective(f);
  const bool acyclic_fib = out.weak_equivalence && f.surjective_on_objects();
  const bool rlp = has_rlp(builtins::d0(), f) && has_rlp(builtins::d1(), f) && has_rlp(builtins::d2(), f);
  out.acyclic_fibration_rlp_agrees = (acyclic_fib == rlp);
  return out;
}

std::vector<Functor> enumerate_functors(CatPtr a, CatPtr b, long budget) {
  std::vector<Functor> out;
  const int na = a->num_objects();
  if (na == 0) {
    out.push_back(Functor(a, b, {}, {}));
    return out;
  }
  if (b->num_objects() == 0) return out;
  std::vector<Id> ob(na, 0);
  long nodes = budget;
  while (true) {
    // quick feasibility: every hom must map into a nonempty hom
    bool feasible = true;
    for (Id m = 0; m < a->num_morphisms() && feasible; ++m)
      if (b->hom(ob[a->src(m)], ob[a->tgt(m)]).empty()) feasible = false;
    if (feasible) {
      std::vector<Id> mor(a->num_morphisms(), kNone);
      for (Id o = 0; o < na; ++o) mor[a->identity(o)] = b->identity(ob[o]);
      MorphismSearch search{*a, *b, ob, mor, &nodes};
      // collect all completions, not just the first
      std::function<bool(Id)> rec = [&](Id m) -> bool {
        const int n = a->num_morphisms();
        while (m < n && mor[m] != kNone) {
          if (!search.consistent_at(m)) return false;
          ++m;
        }
        if (m == n) {
          out.push_back(Functor(a, b, ob, mor));
          if (static_cast<long>(out.size()) > budget)
            throw BudgetExceeded("functor enumeration budget exceeded");
          return false;  // keep searching
        }
        for (Id w = 0; w < b->num_morphisms(); ++w) {
          if (b->src(w) != ob[a->src(m)] || b->tgt(w) != ob[a->tgt(m)]) continue;
          if (--nodes < 0) throw BudgetExceeded("functor enumeration budget exceeded");
          mor[m] = w;
          if (search.consistent_at(m)) rec(m + 1);
          mor[m] = kNone;
        }
        return false;
      };
      rec(0);
    }
    int i = na - 1;
    while (i >= 0 && ob[i] == b->num_objects() - 1) ob[i--] = 0;
    if (i < 0) break;
    ++ob[i];
  }
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g, long budget) {
  std::vector<NatTrans> out;
  if (f.dom != g.dom || f.cod != g.cod) throw std::invalid_argument("enumerate_nat_trans: not parallel");
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  std::vector<Id> comp(a.num_objects(), kNone);
  long nodes = budget;
  std::function<void(Id)> rec = [&](Id x) {
    if (x == a.num_objects()) {
      NatTrans nt;
      nt.dom = f;
      nt.cod = g;
      nt.component = comp;
      out.push_back(std::move(nt));
      if (static_cast<long>(out.size()) > budget)
        throw BudgetExceeded("natural transformation enumeration budget exceeded");
      return;
    }
    for (Id w = 0; w < b.num_morphisms(); ++w) {
      if (b.src(w) != f.ob[x] || b.tgt(w) != g.ob[x]) continue;
      if (--nodes < 0) throw BudgetExceeded("natural transformation enumeration budget exceeded");
      comp[x] = w;
      bool ok = true;
      for (Id m = 0; m < a.num_morphisms() && ok; ++m) {
        const Id s = a.src(m), t = a.tgt(m);
        if (comp[s] == kNone || comp[t] == kNone) continue;
        if (b.compose(comp[t], f.mor[m]) != b.compose(g.mor[m], comp[s])) ok = false;
      }
      if (ok) rec(x + 1);
      comp[x] = kNone;
    }
  };
  rec(0);
  return out;
}

FunctorCategory functor_category(CatPtr a, CatPtr b, long budget) {
  FunctorCategory out;
  out.objects = enumerate_functors(a, b, budget);
  FinCategory k;
  k.name = "[" + a->name + "," + b->name + "]";
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();
  out.transformations.resize(out.objects.size());  // identities first
  for (size_t i = 0; i < out.objects.size(); ++i) {
    NatTrans idt;
    idt.dom = out.objects[i];
    idt.cod = out.objects[i];
    idt.component.resize(a->num_objects());
    for (Id x = 0; x < a->num_objects(); ++x) idt.component[x] = b->identity(out.objects[i].ob[x]);
    out.transformations[i] = std::move(idt);
  }
  // morphism index: (src functor, tgt functor, components) -> id
  std::map<std::pair<std::pair<int, int>, std::vector<Id>>, Id> index;
  for (size_t i = 0; i < out.objects.size(); ++i)
    index[{{static_cast<int>(i), static_cast<int>(i)}, out.transformations[i].component}] =
        static_cast<Id>(i);
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      auto nts = enumerate_nat_trans(out.objects[i], out.objects[j], budget);
      for (auto& nt : nts) {
        auto key = std::make_pair(std::make_pair(static_cast<int>(i), static_cast<int>(j)), nt.component);
        if (index.count(key)) continue;
        if (++total > budget) throw BudgetExceeded("functor category budget exceeded");
        const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
        index[key] = m;
        out.transformations.push_back(std::move(nt));
      }
    }
  for (size_t gi = 0; gi < out.transformations.size(); ++gi)
    for (size_t fi = 0; fi < out.transformations.size(); ++fi) {
      const NatTrans& second = out.transformations[gi];
      const NatTrans& first = out.transformations[fi];
      if (!(first.cod == second.dom)) continue;
      NatTrans comp = compose(second, first);
      int si = -1, ti = -1;
      for (size_t o = 0; o < out.objects.size(); ++o) {
        if (out.objects[o] == comp.dom) si = static_cast<int>(o);
        if (out.objects[o] == comp.cod) ti = static_cast<int>(o);
      }
      k.set_compose(static_cast<Id>(gi), static_cast<Id>(fi), index.at({{si, ti}, comp.component}));
    }
  out.cat = make_cat(std::move(k));
  return out;
}

Functor postcompose_functor(const FunctorCategory& src, const FunctorCategory& dst, const Functor& f) {
  auto find_ob = [&](const Functor& h) -> Id {
    for (size_t i = 0; i < dst.objects.size(); ++i)
      if (dst.objects[i] == h) return static_cast<Id>(i);
    throw std::invalid_argument("postcompose_functor: image functor not in target enumeration");
  };
  std::vector<Id> ob(src.objects.size());
  for (size_t i = 0; i < src.objects.size(); ++i) ob[i] = find_ob(compose(f, src.objects[i]));
  std::vector<Id> mor(src.transformations.size());
  for (size_t i = 0; i < src.transformations.size(); ++i) {
    const NatTrans& nt = src.transformations[i];
    std::vector<Id> comp(nt.component.size());
    for (size_t x = 0; x < comp.size(); ++x) comp[x] = f.mor[nt.component[x]];
    const Id s = ob[std::distance(
        src.objects.begin(),
        std::find(src.objects.begin(), src.objects.end(), nt.dom))];
    const Id t = ob[std::distance(
        src.objects.begin(),
        std::find(src.objects.begin(), src.objects.end(), nt.cod))];
    Id found = kNone;
    for (size_t m = 0; m < dst.transformations.size(); ++m) {
      const NatTrans& cand = dst.transformations[m];
      if (cand.component == comp && find_ob(cand.dom) == s && find_ob(cand.cod) == t) {
        found = static_cast<Id>(m);
        break;
      }
    }
    if (found == kNone) throw std::invalid_argument("postcompose_functor: image transformation missing");
    mor[i] = found;
  }
  return Functor(src.cat, dst.cat, std::move(ob), std::move(mor));
}

}  // namespace fincat
