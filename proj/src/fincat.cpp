#include "fincat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fincat {

namespace {
constexpr int kDenseCompLimit = 3000;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.items) items.push_back({prefix.empty() ? v.rule : prefix + "/" + v.rule, v.witness});
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& v : items) os << v.rule << ": " << v.witness << "\n";
  return os.str();
}

Id FinCategory::add_object() {
  const Id ob = n_ob_++;
  const Id idm = static_cast<Id>(src_.size());
  src_.push_back(ob);
  tgt_.push_back(ob);
  id_.push_back(idm);
  return ob;
}

Id FinCategory::add_morphism(Id s, Id t) {
  assert(0 <= s && s < n_ob_ && 0 <= t && t < n_ob_);
  const Id m = static_cast<Id>(src_.size());
  src_.push_back(s);
  tgt_.push_back(t);
  return m;
}

void FinCategory::set_compose(Id g, Id f, Id gf) {
  assert(!finalized_);
  comp_sparse_[key(g, f)] = gf;
}

Id FinCategory::compose(Id g, Id f) const {
  if (!composable(g, f)) return kNone;
  if (dense_ && finalized_) {
    const size_t n = num_morphisms();
    return comp_dense_[static_cast<size_t>(g) * n + f];
  }
  auto it = comp_sparse_.find(key(g, f));
  return it == comp_sparse_.end() ? kNone : it->second;
}

void FinCategory::finalize() {
  if (finalized_) return;
  const int n = num_morphisms();
  // identity composites
  for (Id m = 0; m < n; ++m) {
    const Id s = src_[m], t = tgt_[m];
    if (!comp_sparse_.count(key(m, id_[s]))) comp_sparse_[key(m, id_[s])] = m;
    if (!comp_sparse_.count(key(id_[t], m))) comp_sparse_[key(id_[t], m)] = m;
  }
  dense_ = n <= kDenseCompLimit;
  if (dense_) {
    comp_dense_.assign(static_cast<size_t>(n) * n, kNone);
    for (const auto& [k, v] : comp_sparse_) {
      const Id gg = static_cast<Id>(k >> 32), ff = static_cast<Id>(k & 0xffffffffu);
      comp_dense_[static_cast<size_t>(gg) * n + ff] = v;
    }
    comp_sparse_.clear();
  }
  finalized_ = true;
  // inverse table, with morphisms bucketed by (src, tgt)
  std::unordered_map<std::uint64_t, std::vector<Id>> bucket;
  for (Id m = 0; m < n; ++m) bucket[key(src_[m], tgt_[m])].push_back(m);
  inv_.assign(n, kNone);
  for (Id m = 0; m < n; ++m) {
    if (inv_[m] != kNone) continue;
    const Id s = src_[m], t = tgt_[m];
    auto it = bucket.find(key(t, s));
    if (it == bucket.end()) continue;
    for (Id w : it->second) {
      if (compose(w, m) == id_[s] && compose(m, w) == id_[t]) {
        inv_[m] = w;
        inv_[w] = m;
        break;
      }
    }
  }
}

std::vector<Id> FinCategory::hom(Id a, Id b) const {
  std::vector<Id> out;
  for (Id m = 0; m < num_morphisms(); ++m)
    if (src_[m] == a && tgt_[m] == b) out.push_back(m);
  return out;
}

bool FinCategory::isomorphic_objects(Id a, Id b) const {
  if (a == b) return true;
  for (Id m = 0; m < num_morphisms(); ++m)
    if (src_[m] == a && tgt_[m] == b && is_invertible(m)) return true;
  return false;
}

std::string FinCategory::describe_morphism(Id m) const {
  std::ostringstream os;
  os << "mor " << m << ": " << src_[m] << "->" << tgt_[m];
  return os.str();
}

CatPtr make_cat(FinCategory&& c) {
  auto p = std::make_shared<FinCategory>(std::move(c));
  if (!p->finalized()) p->finalize();
  return p;
}

Report validate_category(const FinCategory& c) {
  Report r;
  const int n = c.num_morphisms();
  for (Id ob = 0; ob < c.num_objects(); ++ob) {
    const Id i = c.identity(ob);
    if (c.src(i) != ob || c.tgt(i) != ob) r.add("identity-typing", "object " + std::to_string(ob));
  }
  for (Id g = 0; g < n; ++g)
    for (Id f = 0; f < n; ++f) {
      const Id gf = c.compose(g, f);
      if (c.composable(g, f)) {
        if (gf == kNone) {
          r.add("composition-totality", c.describe_morphism(g) + " after " + c.describe_morphism(f));
          continue;
        }
        if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
          r.add("composition-typing", c.describe_morphism(g) + " after " + c.describe_morphism(f));
      } else if (gf != kNone) {
        r.add("composition-typing", "entry for non-composable pair (" + std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  for (Id f = 0; f < n; ++f) {
    if (c.compose(f, c.identity(c.src(f))) != f)
      r.add("identity-law", "f o id != f at " + c.describe_morphism(f));
    if (c.compose(c.identity(c.tgt(f)), f) != f)
      r.add("identity-law", "id o f != f at " + c.describe_morphism(f));
  }
  for (Id h = 0; h < n; ++h)
    for (Id g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      const Id hg = c.compose(h, g);
      if (hg == kNone) continue;
      for (Id f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        const Id gf = c.compose(g, f);
        if (gf == kNone) continue;
        if (c.compose(h, gf) != c.compose(hg, f))
          r.add("associativity",
                "h=" + std::to_string(h) + " g=" + std::to_string(g) + " f=" + std::to_string(f));
      }
    }
  return r;
}

Functor::Functor(CatPtr d, CatPtr c, std::vector<Id> o, std::vector<Id> m)
    : dom(std::move(d)), cod(std::move(c)), ob(std::move(o)), mor(std::move(m)) {}

Functor Functor::identity(CatPtr c) {
  std::vector<Id> o(c->num_objects()), m(c->num_morphisms());
  for (Id i = 0; i < c->num_objects(); ++i) o[i] = i;
  for (Id i = 0; i < c->num_morphisms(); ++i) m[i] = i;
  return Functor(c, c, std::move(o), std::move(m));
}

Functor Functor::constant(CatPtr d, CatPtr c, Id target_ob) {
  std::vector<Id> o(d->num_objects(), target_ob);
  std::vector<Id> m(d->num_morphisms(), c->identity(target_ob));
  return Functor(std::move(d), std::move(c), std::move(o), std::move(m));
}

Report Functor::validate() const {
  Report r;
  if (!dom || !cod) {
    r.add("functor-structure", "missing (co)domain");
    return r;
  }
  if (static_cast<int>(ob.size()) != dom->num_objects() || static_cast<int>(mor.size()) != dom->num_morphisms()) {
    r.add("functor-structure", "map sizes disagree with domain");
    return r;
  }
  for (Id f = 0; f < dom->num_morphisms(); ++f) {
    if (cod->src(mor[f]) != ob[dom->src(f)] || cod->tgt(mor[f]) != ob[dom->tgt(f)])
      r.add("functor-typing", dom->describe_morphism(f));
  }
  for (Id a = 0; a < dom->num_objects(); ++a)
    if (mor[dom->identity(a)] != cod->identity(ob[a]))
      r.add("functor-identity", "object " + std::to_string(a));
  for (Id g = 0; g < dom->num_morphisms(); ++g)
    for (Id f = 0; f < dom->num_morphisms(); ++f) {
      if (!dom->composable(g, f)) continue;
      const Id gf = dom->compose(g, f);
      if (gf == kNone) continue;
      if (mor[gf] != cod->compose(mor[g], mor[f]))
        r.add("functor-composition", "g=" + std::to_string(g) + " f=" + std::to_string(f));
    }
  return r;
}

bool Functor::injective_on_objects() const {
  std::vector<char> seen(cod->num_objects(), 0);
  for (Id x : ob) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool Functor::surjective_on_objects() const {
  std::vector<char> seen(cod->num_objects(), 0);
  for (Id x : ob) seen[x] = 1;
  for (char s : seen)
    if (!s) return false;
  return true;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: functors not composable");
  std::vector<Id> o(f.ob.size()), m(f.mor.size());
  for (size_t i = 0; i < f.ob.size(); ++i) o[i] = g.ob[f.ob[i]];
  for (size_t i = 0; i < f.mor.size(); ++i) m[i] = g.mor[f.mor[i]];
  return Functor(f.dom, g.cod, std::move(o), std::move(m));
}

Report NatTrans::validate() const {
  Report r;
  if (dom.dom != cod.dom || dom.cod != cod.cod) {
    r.add("nat-structure", "functors not parallel");
    return r;
  }
  const FinCategory& a = *dom.dom;
  const FinCategory& b = *dom.cod;
  if (static_cast<int>(component.size()) != a.num_objects()) {
    r.add("nat-structure", "component count");
    return r;
  }
  for (Id x = 0; x < a.num_objects(); ++x) {
    const Id cx = component[x];
    if (b.src(cx) != dom.ob[x] || b.tgt(cx) != cod.ob[x]) r.add("nat-typing", "object " + std::to_string(x));
  }
  for (Id f = 0; f < a.num_morphisms(); ++f) {
    const Id x = a.src(f), y = a.tgt(f);
    if (b.compose(component[y], dom.mor[f]) != b.compose(cod.mor[f], component[x]))
      r.add("naturality", a.describe_morphism(f));
  }
  return r;
}

NatTrans compose(const NatTrans& b, const NatTrans& a) {
  if (!(a.cod == b.dom)) throw std::invalid_argument("compose: natural transformations not composable");
  NatTrans out;
  out.dom = a.dom;
  out.cod = b.cod;
  const FinCategory& target = *a.dom.cod;
  out.component.resize(a.component.size());
  for (size_t x = 0; x < a.component.size(); ++x)
    out.component[x] = target.compose(b.component[x], a.component[x]);
  return out;
}

namespace builtins {

CatPtr empty() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "empty";
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr terminal() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "1";
    k.add_object();
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr arrow_i() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "I";
    k.add_object();
    k.add_object();
    k.add_morphism(0, 1);
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr discrete2() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "dI";
    k.add_object();
    k.add_object();
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr iso_j() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "J";
    k.add_object();
    k.add_object();
    const Id a = k.add_morphism(0, 1);
    const Id b = k.add_morphism(1, 0);
    k.set_compose(b, a, k.identity(0));
    k.set_compose(a, b, k.identity(1));
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr two_chain() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "[2]";
    k.add_object();
    k.add_object();
    k.add_object();
    const Id f01 = k.add_morphism(0, 1);
    const Id f12 = k.add_morphism(1, 2);
    const Id f02 = k.add_morphism(0, 2);
    k.set_compose(f12, f01, f02);
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr boundary2() {
  static CatPtr c = [] {
    FinCategory k;
    k.name = "d[2]";
    k.add_object();
    k.add_object();
    k.add_object();
    const Id f01 = k.add_morphism(0, 1);
    const Id f12 = k.add_morphism(1, 2);
    k.add_morphism(0, 2);            // f02, not a composite
    const Id c12_01 = k.add_morphism(0, 2);  // the composite f12 o f01
    k.set_compose(f12, f01, c12_01);
    return make_cat(std::move(k));
  }();
  return c;
}

CatPtr discrete(int n) {
  FinCategory k;
  k.name = "discrete" + std::to_string(n);
  for (int i = 0; i < n; ++i) k.add_object();
  return make_cat(std::move(k));
}

CatPtr chaotic(int n) {
  FinCategory k;
  k.name = "chaotic" + std::to_string(n);
  for (int i = 0; i < n; ++i) k.add_object();
  std::vector<std::vector<Id>> arrow(n, std::vector<Id>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) arrow[a][b] = (a == b) ? k.identity(a) : k.add_morphism(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) k.set_compose(arrow[b][c], arrow[a][b], arrow[a][c]);
  return make_cat(std::move(k));
}

Functor i0() { return Functor(terminal(), iso_j(), {0}, {iso_j()->identity(0)}); }
Functor i1() { return Functor(terminal(), iso_j(), {1}, {iso_j()->identity(1)}); }
Functor d0() { return Functor(empty(), terminal(), {}, {}); }

Functor d1() {
  auto d = discrete2();
  auto i = arrow_i();
  return Functor(d, i, {0, 1}, {i->identity(0), i->identity(1)});
}

Functor d2() {
  auto b = boundary2();
  auto t = two_chain();
  // morphisms of b: id0,id1,id2,f01,f12,f02,f12of01 ; of t: id0,id1,id2,f01,f12,f02
  return Functor(b, t, {0, 1, 2}, {t->identity(0), t->identity(1), t->identity(2), 3, 4, 5, 5});
}

Functor j_swap() {
  auto j = iso_j();
  // morphisms: id0,id1,a:0->1,b:1->0
  return Functor(j, j, {1, 0}, {j->identity(1), j->identity(0), 3, 2});
}

}  // namespace builtins

ProductCategory product(CatPtr a, CatPtr b) {
  ProductCategory out;
  out.nb_ = b->num_objects();
  out.mb_ = b->num_morphisms();
  FinCategory k;
  k.name = "(" + a->name + "x" + b->name + ")";
  const int na = a->num_objects(), nb = b->num_objects();
  const int ma = a->num_morphisms(), mb = b->num_morphisms();
  // Objects (x,y) -> x*nb+y.  Morphisms are built in (f,g) lexicographic
  // order but identities must coincide with add_object's identities, so we
  // construct via explicit tables.
  std::vector<Id> mor_of(static_cast<size_t>(ma) * mb, kNone);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      k.add_object();
      mor_of[static_cast<size_t>(a->identity(x)) * mb + b->identity(y)] = k.identity(x * nb + y);
    }
  for (Id f = 0; f < ma; ++f)
    for (Id g = 0; g < mb; ++g) {
      if (mor_of[static_cast<size_t>(f) * mb + g] != kNone) continue;
      mor_of[static_cast<size_t>(f) * mb + g] =
          k.add_morphism(a->src(f) * nb + b->src(g), a->tgt(f) * nb + b->tgt(g));
    }
  for (Id f2 = 0; f2 < ma; ++f2)
    for (Id f1 = 0; f1 < ma; ++f1) {
      if (!a->composable(f2, f1)) continue;
      const Id fa = a->compose(f2, f1);
      for (Id g2 = 0; g2 < mb; ++g2)
        for (Id g1 = 0; g1 < mb; ++g1) {
          if (!b->composable(g2, g1)) continue;
          const Id gb = b->compose(g2, g1);
          k.set_compose(mor_of[static_cast<size_t>(f2) * mb + g2], mor_of[static_cast<size_t>(f1) * mb + g1],
                        mor_of[static_cast<size_t>(fa) * mb + gb]);
        }
    }
  CatPtr cp = make_cat(std::move(k));
  std::vector<Id> p1o(static_cast<size_t>(na) * nb), p2o(static_cast<size_t>(na) * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      p1o[static_cast<size_t>(x) * nb + y] = x;
      p2o[static_cast<size_t>(x) * nb + y] = y;
    }
  std::vector<Id> p1m(cp->num_morphisms()), p2m(cp->num_morphisms());
  for (Id f = 0; f < ma; ++f)
    for (Id g = 0; g < mb; ++g) {
      const Id m = mor_of[static_cast<size_t>(f) * mb + g];
      p1m[m] = f;
      p2m[m] = g;
    }
  out.cat = cp;
  out.pr1 = Functor(cp, a, std::move(p1o), std::move(p1m));
  out.pr2 = Functor(cp, b, std::move(p2o), std::move(p2m));
  out.mor_of_ = std::move(mor_of);
  return out;
}

CatPtr opposite(const FinCategory& c, std::vector<Id>* mor_map) {
  FinCategory k;
  k.name = c.name + "^op";
  for (Id o = 0; o < c.num_objects(); ++o) k.add_object();
  std::vector<Id> mor_of(c.num_morphisms(), kNone);
  for (Id o = 0; o < c.num_objects(); ++o) mor_of[c.identity(o)] = k.identity(o);
  for (Id m = 0; m < c.num_morphisms(); ++m)
    if (mor_of[m] == kNone) mor_of[m] = k.add_morphism(c.tgt(m), c.src(m));
  for (Id g = 0; g < c.num_morphisms(); ++g)
    for (Id f = 0; f < c.num_morphisms(); ++f) {
      const Id gf = c.compose(g, f);
      if (gf != kNone) k.set_compose(mor_of[f], mor_of[g], mor_of[gf]);
    }
  if (mor_map) *mor_map = mor_of;
  return make_cat(std::move(k));
}

CoreGroupoid core_groupoid(CatPtr c) {
  CoreGroupoid out;
  FinCategory k;
  k.name = "J(" + c->name + ")";
  for (Id o = 0; o < c->num_objects(); ++o) k.add_object();
  out.of_mor.assign(c->num_morphisms(), kNone);
  out.mor_index.clear();
  for (Id o = 0; o < c->num_objects(); ++o) {
    out.of_mor[c->identity(o)] = k.identity(o);
  }
  // identities are invertible and already present
  std::vector<Id> core_to_orig(k.num_morphisms());
  for (Id o = 0; o < c->num_objects(); ++o) core_to_orig[k.identity(o)] = c->identity(o);
  for (Id m = 0; m < c->num_morphisms(); ++m) {
    if (out.of_mor[m] != kNone || !c->is_invertible(m)) continue;
    const Id nm = k.add_morphism(c->src(m), c->tgt(m));
    out.of_mor[m] = nm;
    core_to_orig.push_back(m);
  }
  for (Id g = 0; g < c->num_morphisms(); ++g) {
    if (out.of_mor[g] == kNone) continue;
    for (Id f = 0; f < c->num_morphisms(); ++f) {
      if (out.of_mor[f] == kNone || !c->composable(g, f)) continue;
      const Id gf = c->compose(g, f);
      // composite of invertibles is invertible
      k.set_compose(out.of_mor[g], out.of_mor[f], out.of_mor[gf]);
    }
  }
  out.cat = make_cat(std::move(k));
  out.mor_index = core_to_orig;
  std::vector<Id> inc_ob(out.cat->num_objects());
  for (Id o = 0; o < out.cat->num_objects(); ++o) inc_ob[o] = o;
  out.inclusion = Functor(out.cat, c, std::move(inc_ob), core_to_orig);
  return out;
}

Functor core_functor(const Functor& f, const CoreGroupoid& jc, const CoreGroupoid& jd) {
  std::vector<Id> ob(jc.cat->num_objects());
  for (Id o = 0; o < jc.cat->num_objects(); ++o) ob[o] = f.ob[o];
  std::vector<Id> mor(jc.cat->num_morphisms());
  for (Id m = 0; m < jc.cat->num_morphisms(); ++m) mor[m] = jd.of_mor[f.mor[jc.mor_index[m]]];
  return Functor(jc.cat, jd.cat, std::move(ob), std::move(mor));
}

GabrielFactorization gabriel_factorize(const Functor& f) {
  const FinCategory& e = *f.dom;
  const FinCategory& d = *f.cod;
  FinCategory g;
  g.name = "Gab(" + e.name + ")";
  for (Id o = 0; o < e.num_objects(); ++o) g.add_object();
  // morphism of g: (c, c', m) with m in d(Fc, Fc'); identities reuse
  // identity morphisms of d.
  struct Key {
    Id c, c2, m;
  };
  std::vector<Key> mor_keys;
  std::unordered_map<std::uint64_t, Id> index;
  auto keyof = [&](Id c, Id c2, Id m) {
    return (static_cast<std::uint64_t>(c) << 40) | (static_cast<std::uint64_t>(c2) << 20) |
           static_cast<std::uint64_t>(m);
  };
  for (Id o = 0; o < e.num_objects(); ++o) {
    index[keyof(o, o, d.identity(f.ob[o]))] = g.identity(o);
    mor_keys.push_back({o, o, d.identity(f.ob[o])});
  }
  mor_keys.resize(g.num_morphisms());
  for (Id o = 0; o < e.num_objects(); ++o) mor_keys[g.identity(o)] = {o, o, d.identity(f.ob[o])};
  for (Id c = 0; c < e.num_objects(); ++c)
    for (Id c2 = 0; c2 < e.num_objects(); ++c2)
      for (Id m = 0; m < d.num_morphisms(); ++m) {
        if (d.src(m) != f.ob[c] || d.tgt(m) != f.ob[c2]) continue;
        if (index.count(keyof(c, c2, m))) continue;
        const Id nm = g.add_morphism(c, c2);
        index[keyof(c, c2, m)] = nm;
        mor_keys.push_back({c, c2, m});
      }
  for (size_t i = 0; i < mor_keys.size(); ++i)
    for (size_t j = 0; j < mor_keys.size(); ++j) {
      const Key& a = mor_keys[j];  // first arrow
      const Key& b = mor_keys[i];  // second arrow
      if (a.c2 != b.c) continue;
      const Id comp = d.compose(b.m, a.m);
      g.set_compose(static_cast<Id>(i), static_cast<Id>(j), index.at(keyof(a.c, b.c2, comp)));
    }
  CatPtr gp = make_cat(std::move(g));
  std::vector<Id> gam_ob(e.num_objects());
  for (Id o = 0; o < e.num_objects(); ++o) gam_ob[o] = o;
  std::vector<Id> gam_mor(e.num_morphisms());
  for (Id m = 0; m < e.num_morphisms(); ++m) gam_mor[m] = index.at(keyof(e.src(m), e.tgt(m), f.mor[m]));
  std::vector<Id> del_ob(gp->num_objects());
  for (Id o = 0; o < gp->num_objects(); ++o) del_ob[o] = f.ob[o];
  std::vector<Id> del_mor(gp->num_morphisms());
  for (Id m = 0; m < gp->num_morphisms(); ++m) del_mor[m] = mor_keys[m].m;
  GabrielFactorization out;
  out.gamma = Functor(f.dom, gp, std::move(gam_ob), std::move(gam_mor));
  out.mid = gp;
  out.delta = Functor(gp, f.cod, std::move(del_ob), std::move(del_mor));
  return out;
}

}  // namespace fincat
