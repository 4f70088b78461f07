#include "freeperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace freeperm {

using gammaskel::UnbasedMap;
using permcat::FragmentError;
using permcat::PermCategory;

namespace {

// words over object ids 0..n_ob-1 with length <= max_len, shortest first,
// lexicographic within a length
std::vector<std::vector<Id>> enumerate_words(int n_ob, int max_len, long budget) {
  std::vector<std::vector<Id>> out;
  out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    if (n_ob == 0) break;
    std::vector<Id> w(len, 0);
    while (true) {
      out.push_back(w);
      if (static_cast<long>(out.size()) > budget) throw fincat::BudgetExceeded("word enumeration budget");
      int i = len - 1;
      while (i >= 0 && w[i] == n_ob - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct WordIndex {
  std::map<std::vector<Id>, Id> index;
  Id at(const std::vector<Id>& w) const {
    auto it = index.find(w);
    return it == index.end() ? kNone : it->second;
  }
};

}  // namespace

Id FreePerm::object_of(const std::vector<Id>& word) const {
  for (size_t i = 0; i < words.size(); ++i)
    if (words[i] == word) return static_cast<Id>(i);
  return kNone;
}

FreePerm free_perm(CatPtr c, int max_len, long budget) {
  FreePerm out;
  out.generators = c;
  out.max_len = max_len;
  out.words = enumerate_words(c->num_objects(), max_len, budget);
  WordIndex widx;
  for (size_t i = 0; i < out.words.size(); ++i) widx.index[out.words[i]] = static_cast<Id>(i);

  fincat::FinCategory k;
  k.name = "S(" + c->name + ")<=" + std::to_string(max_len);
  for (size_t i = 0; i < out.words.size(); ++i) k.add_object();

  // (source object, sigma, comps) -> morphism id
  std::map<std::tuple<Id, std::vector<int>, std::vector<Id>>, Id> midx;
  out.mor_data.resize(out.words.size());
  for (size_t i = 0; i < out.words.size(); ++i) {
    FreePerm::MorData idm;
    const int n = static_cast<int>(out.words[i].size());
    idm.sigma.resize(n);
    std::iota(idm.sigma.begin(), idm.sigma.end(), 1);
    for (Id x : out.words[i]) idm.comps.push_back(c->identity(x));
    out.mor_data[k.identity(static_cast<Id>(i))] = idm;
    midx[{static_cast<Id>(i), idm.sigma, idm.comps}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.words.size());
  for (size_t i = 0; i < out.words.size(); ++i) {
    const auto& x = out.words[i];
    const int n = static_cast<int>(x.size());
    for (size_t j = 0; j < out.words.size(); ++j) {
      const auto& y = out.words[j];
      if (y.size() != x.size()) continue;
      for (const auto& sigma : permutations(n)) {
        // components f_t : x_t -> y_{sigma(t)}
        std::vector<std::vector<Id>> choices(n);
        bool feasible = true;
        for (int t = 0; t < n && feasible; ++t) {
          choices[t] = c->hom(x[t], y[sigma[t] - 1]);
          if (choices[t].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<Id> comps(n);
        std::vector<size_t> pick(n, 0);
        while (true) {
          for (int t = 0; t < n; ++t) comps[t] = choices[t][pick[t]];
          if (!midx.count({static_cast<Id>(i), sigma, comps})) {
            if (++total > budget) throw fincat::BudgetExceeded("free perm morphism budget");
            const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
            midx[{static_cast<Id>(i), sigma, comps}] = m;
            out.mor_data.push_back({sigma, comps});
          }
          int t = n - 1;
          while (t >= 0 && pick[t] + 1 == choices[t].size()) pick[t--] = 0;
          if (t < 0) break;
          ++pick[t];
        }
        if (n == 0) break;  // only one (empty) permutation and choice
      }
    }
  }
  // composition
  for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_data.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      const auto& a = out.mor_data[m1];
      const auto& b = out.mor_data[m2];
      const int n = static_cast<int>(a.sigma.size());
      std::vector<int> sigma(n);
      std::vector<Id> comps(n);
      for (int t = 0; t < n; ++t) {
        sigma[t] = b.sigma[a.sigma[t] - 1];
        comps[t] = c->compose(b.comps[a.sigma[t] - 1], a.comps[t]);
      }
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1),
                    midx.at({k.src(static_cast<Id>(m1)), sigma, comps}));
    }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = "S(" + c->name + ")<=" + std::to_string(max_len);
  p.bounded = true;
  p.unit = widx.at({});
  // tensor on objects and gamma
  for (size_t i = 0; i < out.words.size(); ++i)
    for (size_t j = 0; j < out.words.size(); ++j) {
      if (out.words[i].size() + out.words[j].size() > static_cast<size_t>(max_len)) continue;
      std::vector<Id> cw = out.words[i];
      cw.insert(cw.end(), out.words[j].begin(), out.words[j].end());
      const Id ij = widx.at(cw);
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), ij);
      const int n = static_cast<int>(out.words[i].size());
      const int m = static_cast<int>(out.words[j].size());
      std::vector<int> shuffle(n + m);
      for (int t = 1; t <= n; ++t) shuffle[t - 1] = m + t;
      for (int t = 1; t <= m; ++t) shuffle[n + t - 1] = t;
      std::vector<Id> comps;
      for (Id xob : cw) comps.push_back(c->identity(xob));
      p.set_gamma(static_cast<Id>(i), static_cast<Id>(j), midx.at({ij, shuffle, comps}));
    }
  // tensor on morphisms
  for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_data.size(); ++m2) {
      const Id s = p.ob_tensor(p.base->src(static_cast<Id>(m1)), p.base->src(static_cast<Id>(m2)));
      const Id t = p.ob_tensor(p.base->tgt(static_cast<Id>(m1)), p.base->tgt(static_cast<Id>(m2)));
      if (s == kNone || t == kNone) continue;
      const auto& a = out.mor_data[m1];
      const auto& b = out.mor_data[m2];
      const int n = static_cast<int>(a.sigma.size());
      std::vector<int> sigma(n + b.sigma.size());
      std::vector<Id> comps(n + b.sigma.size());
      for (int q = 0; q < n; ++q) {
        sigma[q] = a.sigma[q];
        comps[q] = a.comps[q];
      }
      for (size_t q = 0; q < b.sigma.size(); ++q) {
        sigma[n + q] = n + b.sigma[q];
        comps[n + q] = b.comps[q];
      }
      p.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2), midx.at({s, sigma, comps}));
    }
  // generator metadata: length-one words
  std::vector<Id> genpos(c->num_objects());
  for (Id ob = 0; ob < c->num_objects(); ++ob) {
    p.generator_objects.push_back(widx.at({ob}));
    genpos[ob] = static_cast<Id>(p.generator_objects.size()) - 1;
  }
  p.object_word.resize(out.words.size());
  for (size_t i = 0; i < out.words.size(); ++i)
    for (Id ob : out.words[i]) p.object_word[i].push_back(genpos[ob]);
  out.cat = std::make_shared<const PermCategory>(std::move(p));
  return out;
}

StrictSMFunctor extend_from_generators(const FreePerm& s, const Functor& f, PermPtr a) {
  const PermCategory& sp = *s.cat;
  const PermCategory& ap = *a;
  std::vector<Id> ob(sp.nob());
  for (Id o = 0; o < sp.nob(); ++o) {
    std::vector<Id> img;
    for (Id x : s.words[o]) img.push_back(f.ob[x]);
    ob[o] = permcat::tensor_word_ob(ap, img);
  }
  std::vector<Id> mor(sp.base->num_morphisms());
  for (Id m = 0; m < sp.base->num_morphisms(); ++m) {
    const auto& md = s.mor_data[m];
    const int n = static_cast<int>(md.sigma.size());
    std::vector<Id> comp_imgs(n);
    for (int t = 0; t < n; ++t) comp_imgs[t] = f.mor[md.comps[t]];
    const Id tens = permcat::tensor_word_mor(ap, comp_imgs);
    // sort tensor legs into target order via the canonical shuffle
    std::vector<Id> mid_word(n);
    for (int t = 0; t < n; ++t) mid_word[t] = ap.base->tgt(comp_imgs[t]);
    std::vector<int> sigma(md.sigma.begin(), md.sigma.end());
    const Id can = permcat::coherence_iso(ap, mid_word, sigma);
    mor[m] = ap.base->compose(can, tens);
    if (mor[m] == kNone) throw FragmentError("extend_from_generators: composite outside fragment");
  }
  return StrictSMFunctor{s.cat, a, Functor(sp.base, ap.base, std::move(ob), std::move(mor))};
}

Report LaxSMData::check() const {
  Report r;
  r.merge(f.validate(), "underlying");
  if (!r.ok()) return r;
  const PermCategory& c = *dom;
  const PermCategory& d = *cod;
  const fincat::FinCategory& db = *d.base;
  if (f.ob[c.unit] != d.unit) r.add("unital", "F(e) != e");
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b = 0; b < c.nob(); ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      const Id m = mu_at(a, b);
      const Id fafb = d.ob_tensor(f.ob[a], f.ob[b]);
      if (m == kNone || fafb == kNone) {
        r.add("mu-missing", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        continue;
      }
      if (db.src(m) != fafb || db.tgt(m) != f.ob[ab])
        r.add("mu-typing", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      if ((a == c.unit || b == c.unit) && !db.is_identity(m))
        r.add("lax-unit", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      // symmetry
      const Id gd = d.gamma(f.ob[a], f.ob[b]);
      const Id gc = c.gamma(a, b);
      const Id mba = mu_at(b, a);
      if (gd != kNone && gc != kNone && mba != kNone) {
        if (db.compose(mba, gd) != db.compose(f.mor[gc], m))
          r.add("lax-symmetry", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  // associativity
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b = 0; b < c.nob(); ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      for (Id e = 0; e < c.nob(); ++e) {
        const Id be = c.ob_tensor(b, e);
        if (be == kNone || c.ob_tensor(ab, e) == kNone) continue;
        const Id m_ab = mu_at(a, b), m_be = mu_at(b, e), m_ab_e = mu_at(ab, e), m_a_be = mu_at(a, be);
        if (m_ab == kNone || m_be == kNone || m_ab_e == kNone || m_a_be == kNone) continue;
        const Id left = db.compose(m_ab_e, d.mor_tensor(m_ab, db.identity(f.ob[e])));
        const Id right = db.compose(m_a_be, d.mor_tensor(db.identity(f.ob[a]), m_be));
        if (left != right || left == kNone)
          r.add("lax-associativity",
                "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(e) + ")");
      }
    }
  // naturality of mu
  for (const auto& [key, fg] : c.mor_tensor_entries()) {
    const Id x = static_cast<Id>(key >> 32), y = static_cast<Id>(key & 0xffffffffu);
    const fincat::FinCategory& cb = *c.base;
    const Id m1 = mu_at(cb.src(x), cb.src(y));
    const Id m2 = mu_at(cb.tgt(x), cb.tgt(y));
    const Id im = d.mor_tensor(f.mor[x], f.mor[y]);
    if (m1 == kNone || m2 == kNone || im == kNone) continue;
    if (db.compose(m2, im) != db.compose(f.mor[fg], m1))
      r.add("mu-naturality", "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return r;
}

Report OplaxSMData::check() const {
  Report r;
  r.merge(f.validate(), "underlying");
  if (!r.ok()) return r;
  const PermCategory& c = *dom;
  const PermCategory& d = *cod;
  const fincat::FinCategory& db = *d.base;
  if (f.ob[c.unit] != d.unit) r.add("unital", "F(e) != e");
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b = 0; b < c.nob(); ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      const Id m = lambda_at(a, b);
      const Id fafb = d.ob_tensor(f.ob[a], f.ob[b]);
      if (m == kNone || fafb == kNone) {
        r.add("lambda-missing", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        continue;
      }
      if (db.src(m) != f.ob[ab] || db.tgt(m) != fafb)
        r.add("lambda-typing", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      if ((a == c.unit || b == c.unit) && !db.is_identity(m))
        r.add("oplax-unit", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      const Id gd = d.gamma(f.ob[a], f.ob[b]);
      const Id gc = c.gamma(a, b);
      const Id mba = lambda_at(b, a);
      if (gd != kNone && gc != kNone && mba != kNone) {
        // OL.2: lambda(b,a) o F(gamma) = gamma_D o lambda(a,b)
        if (db.compose(mba, f.mor[gc]) != db.compose(gd, m))
          r.add("oplax-symmetry", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  for (Id a = 0; a < c.nob(); ++a)
    for (Id b = 0; b < c.nob(); ++b) {
      const Id ab = c.ob_tensor(a, b);
      if (ab == kNone) continue;
      for (Id e = 0; e < c.nob(); ++e) {
        const Id be = c.ob_tensor(b, e);
        if (be == kNone || c.ob_tensor(ab, e) == kNone) continue;
        const Id l_ab = lambda_at(a, b), l_be = lambda_at(b, e), l_ab_e = lambda_at(ab, e),
                 l_a_be = lambda_at(a, be);
        if (l_ab == kNone || l_be == kNone || l_ab_e == kNone || l_a_be == kNone) continue;
        // OL.3 in the permutative setting
        const Id left = db.compose(d.mor_tensor(l_ab, db.identity(f.ob[e])), l_ab_e);
        const Id right = db.compose(d.mor_tensor(db.identity(f.ob[a]), l_be), l_a_be);
        if (left != right || left == kNone)
          r.add("oplax-associativity",
                "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(e) + ")");
      }
    }
  for (const auto& [key, fg] : c.mor_tensor_entries()) {
    const Id x = static_cast<Id>(key >> 32), y = static_cast<Id>(key & 0xffffffffu);
    const fincat::FinCategory& cb = *c.base;
    const Id m1 = lambda_at(cb.src(x), cb.src(y));
    const Id m2 = lambda_at(cb.tgt(x), cb.tgt(y));
    const Id im = d.mor_tensor(f.mor[x], f.mor[y]);
    if (m1 == kNone || m2 == kNone || im == kNone) continue;
    if (db.compose(m2, f.mor[fg]) != db.compose(im, m1))
      r.add("lambda-naturality", "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return r;
}

Id Completion::object_of(const std::vector<Id>& word) const {
  for (size_t i = 0; i < words.size(); ++i)
    if (words[i] == word) return static_cast<Id>(i);
  return kNone;
}

namespace {

// domain word of the i-th component of an h-indexed tuple
std::vector<Id> preimage_word(const std::vector<Id>& kw, const UnbasedMap& h, int i) {
  std::vector<Id> w;
  for (int j = 1; j <= h.dom; ++j)
    if (h(j) == i) w.push_back(kw[j - 1]);
  return w;
}

// permutation sorting source positions by (h(z), z); sigma[pos] = target pos
std::vector<int> regroup_sigma(const UnbasedMap& h) {
  std::vector<int> order(h.dom);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h(a) < h(b); });
  std::vector<int> sigma(h.dom);
  for (int pos = 0; pos < h.dom; ++pos) sigma[order[pos] - 1] = pos + 1;
  return sigma;
}

}  // namespace

Completion lax_completion(PermPtr p, int max_len, long budget) {
  Completion out;
  out.base = p;
  out.max_len = max_len;
  const PermCategory& pp = *p;
  const fincat::FinCategory& pb = *pp.base;
  out.words = enumerate_words(pp.nob(), max_len, budget);
  std::map<std::vector<Id>, Id> widx;
  for (size_t i = 0; i < out.words.size(); ++i) widx[out.words[i]] = static_cast<Id>(i);

  fincat::FinCategory k;
  k.name = (p->name.empty() ? "P" : p->name) + "^e<=" + std::to_string(max_len);
  for (size_t i = 0; i < out.words.size(); ++i) k.add_object();

  std::map<std::tuple<Id, std::vector<int>, std::vector<Id>>, Id> midx;
  auto hkey = [](const UnbasedMap& h) { return std::vector<int>(h.values.begin(), h.values.end()); };
  out.mor_data.resize(out.words.size());
  for (size_t i = 0; i < out.words.size(); ++i) {
    Completion::MorData idm;
    const int r = static_cast<int>(out.words[i].size());
    idm.h = UnbasedMap::identity(r);
    for (Id x : out.words[i]) idm.comps.push_back(pb.identity(x));
    out.mor_data[k.identity(static_cast<Id>(i))] = idm;
    midx[{static_cast<Id>(i), hkey(idm.h), idm.comps}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.words.size());
  for (size_t i = 0; i < out.words.size(); ++i) {
    const auto& kw = out.words[i];
    const int r = static_cast<int>(kw.size());
    for (size_t j = 0; j < out.words.size(); ++j) {
      const auto& lw = out.words[j];
      const int s = static_cast<int>(lw.size());
      for (const auto& h : gammaskel::enumerate_unbased_maps(r, s)) {
        std::vector<std::vector<Id>> choices(s);
        bool feasible = true;
        for (int t = 1; t <= s && feasible; ++t) {
          const Id domt = permcat::tensor_word_ob(pp, preimage_word(kw, h, t));
          choices[t - 1] = pb.hom(domt, lw[t - 1]);
          if (choices[t - 1].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<size_t> pick(s, 0);
        std::vector<Id> comps(s);
        while (true) {
          for (int t = 0; t < s; ++t) comps[t] = choices[t][pick[t]];
          if (!midx.count({static_cast<Id>(i), hkey(h), comps})) {
            if (++total > budget) throw fincat::BudgetExceeded("completion morphism budget");
            const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
            midx[{static_cast<Id>(i), hkey(h), comps}] = m;
            out.mor_data.push_back({h, comps});
          }
          int t = s - 1;
          while (t >= 0 && pick[t] + 1 == choices[t].size()) pick[t--] = 0;
          if (t < 0) break;
          ++pick[t];
        }
        if (s == 0) {
          // single empty tuple; ensure it is registered
          if (!midx.count({static_cast<Id>(i), hkey(h), {}})) {
            if (++total > budget) throw fincat::BudgetExceeded("completion morphism budget");
            const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
            midx[{static_cast<Id>(i), hkey(h), {}}] = m;
            out.mor_data.push_back({h, {}});
          }
        }
      }
    }
  }
  // composition via the coherence regrouping
  for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_data.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      const auto& f = out.mor_data[m1];  // k -> l
      const auto& g = out.mor_data[m2];  // l -> m
      const auto& kw = out.words[k.src(static_cast<Id>(m1))];
      const UnbasedMap qh = gammaskel::compose(g.h, f.h);
      const int t_len = g.h.cod;
      std::vector<Id> comps(t_len);
      bool ok = true;
      for (int t = 1; t <= t_len && ok; ++t) {
        // source word of the composite component, in increasing z order
        std::vector<Id> src_word = preimage_word(kw, qh, t);
        // regroup: z sorted by (f.h(z), z) among those with qh(z) = t
        std::vector<int> zs;
        for (int z = 1; z <= qh.dom; ++z)
          if (qh(z) == t) zs.push_back(z);
        std::vector<int> order(zs.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return f.h(zs[a]) < f.h(zs[b]); });
        std::vector<int> sigma(zs.size());
        for (size_t pos = 0; pos < order.size(); ++pos) sigma[order[pos]] = static_cast<int>(pos) + 1;
        const Id can = permcat::coherence_iso(pp, src_word, sigma);
        // tensor of the f-components over j in g.h^{-1}(t), increasing j
        std::vector<Id> fw;
        for (int j = 1; j <= g.h.dom; ++j)
          if (g.h(j) == t) fw.push_back(f.comps[j - 1]);
        const Id tens = permcat::tensor_word_mor(pp, fw);
        const Id mid = pb.compose(tens, can);
        if (mid == kNone) {
          ok = false;
          break;
        }
        comps[t - 1] = pb.compose(g.comps[t - 1], mid);
        if (comps[t - 1] == kNone) ok = false;
      }
      if (!ok) throw FragmentError("completion composition left the fragment");
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1),
                    midx.at({k.src(static_cast<Id>(m1)), hkey(qh), comps}));
    }
  PermCategory pc(fincat::make_cat(std::move(k)));
  pc.name = (p->name.empty() ? "P" : p->name) + "^e<=" + std::to_string(max_len);
  pc.bounded = true;
  pc.unit = widx.at({});
  for (size_t i = 0; i < out.words.size(); ++i)
    for (size_t j = 0; j < out.words.size(); ++j) {
      if (out.words[i].size() + out.words[j].size() > static_cast<size_t>(max_len)) continue;
      std::vector<Id> cw = out.words[i];
      cw.insert(cw.end(), out.words[j].begin(), out.words[j].end());
      const Id ij = widx.at(cw);
      pc.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), ij);
      const int r = static_cast<int>(out.words[i].size());
      const int s = static_cast<int>(out.words[j].size());
      std::vector<Id> comps;
      const UnbasedMap swap = gammaskel::symmetry_N(r, s);
      // target t in l-then-k order; each preimage is a singleton
      std::vector<Id> tw = out.words[j];
      tw.insert(tw.end(), out.words[i].begin(), out.words[i].end());
      for (Id x : tw) comps.push_back(pb.identity(x));
      pc.set_gamma(static_cast<Id>(i), static_cast<Id>(j), midx.at({ij, hkey(swap), comps}));
    }
  for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_data.size(); ++m2) {
      const Id s = pc.ob_tensor(pc.base->src(static_cast<Id>(m1)), pc.base->src(static_cast<Id>(m2)));
      const Id t = pc.ob_tensor(pc.base->tgt(static_cast<Id>(m1)), pc.base->tgt(static_cast<Id>(m2)));
      if (s == kNone || t == kNone) continue;
      const auto& a = out.mor_data[m1];
      const auto& b = out.mor_data[m2];
      const UnbasedMap hh = gammaskel::plus_N(a.h, b.h);
      std::vector<Id> comps = a.comps;
      comps.insert(comps.end(), b.comps.begin(), b.comps.end());
      pc.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2), midx.at({s, hkey(hh), comps}));
    }
  // lambda_P : P^e -> P
  std::vector<Id> lob(out.words.size()), lmor(out.mor_data.size());
  for (size_t i = 0; i < out.words.size(); ++i) lob[i] = permcat::tensor_word_ob(pp, out.words[i]);
  for (size_t m = 0; m < out.mor_data.size(); ++m) {
    const auto& md = out.mor_data[m];
    const auto& kw = out.words[pc.base->src(static_cast<Id>(m))];
    const Id can = permcat::coherence_iso(pp, kw, regroup_sigma(md.h));
    const Id tens = permcat::tensor_word_mor(pp, md.comps);
    lmor[m] = pb.compose(tens, can);
    if (lmor[m] == kNone) throw FragmentError("lambda_P left the fragment");
  }
  // iota : P -> P^e
  std::vector<Id> iob(pp.nob()), imor(pb.num_morphisms());
  for (Id o = 0; o < pp.nob(); ++o) iob[o] = widx.at({o});
  for (Id m = 0; m < pb.num_morphisms(); ++m)
    imor[m] = midx.at({iob[pb.src(m)], hkey(UnbasedMap::identity(1)), {m}});
  out.iota_mu.assign(static_cast<size_t>(pp.nob()) * pp.nob(), kNone);
  for (Id a = 0; a < pp.nob(); ++a)
    for (Id b = 0; b < pp.nob(); ++b) {
      const Id ab = pp.ob_tensor(a, b);
      if (ab == kNone) continue;
      const UnbasedMap collapse(2, 1, {1, 1});
      out.iota_mu[static_cast<size_t>(a) * pp.nob() + b] =
          midx.at({pc.ob_tensor(iob[a], iob[b]), hkey(collapse), {pb.identity(ab)}});
    }
  auto pe = std::make_shared<const PermCategory>(std::move(pc));
  out.cat = pe;
  out.lambda_p = StrictSMFunctor{pe, p, Functor(pe->base, pp.base, std::move(lob), std::move(lmor))};
  out.iota = Functor(pp.base, pe->base, std::move(iob), std::move(imor));
  return out;
}

StrictSMFunctor extend_lax_to_strict(const Completion& pe, const LaxSMData& phi) {
  const PermCategory& pc = *pe.cat;
  const PermCategory& d = *phi.cod;
  const fincat::FinCategory& db = *d.base;
  auto mu_word = [&](const std::vector<Id>& w) -> Id {
    // F(w_1)@...@F(w_n) -> F(w_1@...@w_n), left-nested
    if (w.empty()) return db.identity(d.unit);
    Id acc_ob = w[0];
    Id acc = db.identity(phi.f.ob[w[0]]);
    for (size_t t = 1; t < w.size(); ++t) {
      const Id step = phi.mu_at(acc_ob, w[t]);
      if (step == kNone) throw FragmentError("mu undefined on a required pair");
      const Id lhs = d.mor_tensor(acc, db.identity(phi.f.ob[w[t]]));
      if (lhs == kNone) throw FragmentError("tensor undefined extending mu");
      acc = db.compose(step, lhs);
      acc_ob = phi.dom->ob_tensor(acc_ob, w[t]);
      if (acc == kNone || acc_ob == kNone) throw FragmentError("mu extension left the fragment");
    }
    return acc;
  };
  std::vector<Id> ob(pc.nob());
  for (Id o = 0; o < pc.nob(); ++o) {
    std::vector<Id> img;
    for (Id x : pe.words[o]) img.push_back(phi.f.ob[x]);
    ob[o] = permcat::tensor_word_ob(d, img);
  }
  std::vector<Id> mor(pc.base->num_morphisms());
  for (Id m = 0; m < pc.base->num_morphisms(); ++m) {
    const auto& md = pe.mor_data[m];
    const auto& kw = pe.words[pc.base->src(m)];
    std::vector<Id> img_word(kw.size());
    for (size_t t = 0; t < kw.size(); ++t) img_word[t] = phi.f.ob[kw[t]];
    const Id can = permcat::coherence_iso(d, img_word, regroup_sigma(md.h));
    // per-target-component: F(f_t) o mu_{word_t}
    std::vector<Id> legs(md.comps.size());
    for (size_t t = 0; t < md.comps.size(); ++t) {
      const std::vector<Id> w = preimage_word(kw, md.h, static_cast<int>(t) + 1);
      legs[t] = db.compose(phi.f.mor[md.comps[t]], mu_word(w));
      if (legs[t] == kNone) throw FragmentError("extension leg left the fragment");
    }
    const Id tens = permcat::tensor_word_mor(d, legs);
    mor[m] = db.compose(tens, can);
    if (mor[m] == kNone) throw FragmentError("extension left the fragment");
  }
  return StrictSMFunctor{pe.cat, phi.cod, Functor(pc.base, d.base, std::move(ob), std::move(mor))};
}

OplaxExtension extend_oplax_to_strict(const OplaxSMData& phi, int max_len, long budget) {
  OppositePerm dop = opposite_perm(phi.dom);
  OppositePerm cop = opposite_perm(phi.cod);
  LaxSMData lax;
  lax.dom = dop.cat;
  lax.cod = cop.cat;
  std::vector<Id> mor(phi.f.mor.size());
  for (size_t m = 0; m < mor.size(); ++m) {
    // position of the original morphism in the opposite numbering
    mor[dop.mor_of[m]] = cop.mor_of[phi.f.mor[m]];
  }
  lax.f = Functor(dop.cat->base, cop.cat->base, phi.f.ob, std::move(mor));
  lax.mu.assign(phi.lambda.size(), kNone);
  for (Id a = 0; a < phi.dom->nob(); ++a)
    for (Id b = 0; b < phi.dom->nob(); ++b) {
      const Id l = phi.lambda_at(a, b);
      if (l != kNone) lax.mu[static_cast<size_t>(a) * phi.dom->nob() + b] = cop.mor_of[l];
    }
  OplaxExtension out;
  out.op_completion = lax_completion(dop.cat, max_len, budget);
  out.psi_op = extend_lax_to_strict(out.op_completion, lax);
  return out;
}

NatSkeleton nat_skeleton(int max_n) {
  NatSkeleton out;
  fincat::FinCategory k;
  k.name = "N<=" + std::to_string(max_n);
  for (int i = 0; i <= max_n; ++i) k.add_object();
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, Id> midx;
  out.maps.resize(k.num_morphisms());
  for (int i = 0; i <= max_n; ++i) {
    out.maps[k.identity(i)] = UnbasedMap::identity(i);
    midx[{{i, i}, out.maps[k.identity(i)].values}] = k.identity(i);
  }
  for (int r = 0; r <= max_n; ++r)
    for (int s = 0; s <= max_n; ++s)
      for (const auto& f : gammaskel::enumerate_unbased_maps(r, s)) {
        if (midx.count({{r, s}, f.values})) continue;
        const Id m = k.add_morphism(r, s);
        midx[{{r, s}, f.values}] = m;
        out.maps.push_back(f);
      }
  for (size_t m1 = 0; m1 < out.maps.size(); ++m1)
    for (size_t m2 = 0; m2 < out.maps.size(); ++m2) {
      if (k.tgt(static_cast<Id>(m1)) != k.src(static_cast<Id>(m2))) continue;
      const UnbasedMap c = gammaskel::compose(out.maps[m2], out.maps[m1]);
      k.set_compose(static_cast<Id>(m2), static_cast<Id>(m1), midx.at({{c.dom, c.cod}, c.values}));
    }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = "N<=" + std::to_string(max_n);
  p.bounded = true;
  p.unit = 0;
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n && a + b <= max_n; ++b) {
      p.set_ob_tensor(a, b, a + b);
      const UnbasedMap g = gammaskel::symmetry_N(a, b);
      p.set_gamma(a, b, midx.at({{a + b, b + a}, g.values}));
    }
  for (size_t m1 = 0; m1 < out.maps.size(); ++m1)
    for (size_t m2 = 0; m2 < out.maps.size(); ++m2) {
      const auto& f = out.maps[m1];
      const auto& g = out.maps[m2];
      if (f.dom + g.dom > max_n || f.cod + g.cod > max_n) continue;
      const UnbasedMap sum = gammaskel::plus_N(f, g);
      p.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2),
                       midx.at({{sum.dom, sum.cod}, sum.values}));
    }
  out.cat = std::make_shared<const PermCategory>(std::move(p));
  return out;
}

Id NatSkeleton::morphism_of(const UnbasedMap& f) const {
  for (size_t m = 0; m < maps.size(); ++m)
    if (maps[m] == f) return static_cast<Id>(m);
  return kNone;
}

long completion_hom_count(const PermCategory& p, const std::vector<Id>& kw, const std::vector<Id>& lw) {
  const int r = static_cast<int>(kw.size());
  const int s = static_cast<int>(lw.size());
  long total = 0;
  for (const auto& h : gammaskel::enumerate_unbased_maps(r, s)) {
    long prod = 1;
    for (int t = 1; t <= s && prod > 0; ++t) {
      std::vector<Id> w;
      for (int j = 1; j <= r; ++j)
        if (h(j) == t) w.push_back(kw[j - 1]);
      const Id dom = permcat::tensor_word_ob(p, w);
      prod *= static_cast<long>(p.base->hom(dom, lw[t - 1]).size());
    }
    total += prod;
  }
  if (r == 0 && s == 0) return 1;  // the single empty tuple
  return total;
}

OppositePerm opposite_perm(PermPtr p) {
  OppositePerm out;
  std::vector<Id> mor_of;
  CatPtr ob = fincat::opposite(*p->base, &mor_of);
  PermCategory q(ob);
  q.name = p->name + "^op";
  q.bounded = p->bounded;
  q.unit = p->unit;
  for (Id a = 0; a < p->nob(); ++a)
    for (Id b = 0; b < p->nob(); ++b) {
      const Id ab = p->ob_tensor(a, b);
      if (ab == kNone) continue;
      q.set_ob_tensor(a, b, ab);
      const Id g = p->gamma(b, a);
      if (g != kNone) q.set_gamma(a, b, mor_of[g]);
    }
  for (const auto& [key, fg] : p->mor_tensor_entries()) {
    const Id f = static_cast<Id>(key >> 32), g = static_cast<Id>(key & 0xffffffffu);
    q.set_mor_tensor(mor_of[f], mor_of[g], mor_of[fg]);
  }
  out.cat = std::make_shared<const PermCategory>(std::move(q));
  out.mor_of = std::move(mor_of);
  return out;
}

}  // namespace freeperm
