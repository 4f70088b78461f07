#include "leinster.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace leinster {

using gammacat::GammaCategory;
using gammaskel::BasedMap;
using permcat::PermCategory;

namespace {

std::vector<std::vector<int>> enumerate_sequences(int max_len, int max_entry, int max_total,
                                                   long budget, int min_entry) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> w(len, 0);
    while (true) {
      const int total = std::accumulate(w.begin(), w.end(), 0);
      // single-entry sequences are always kept: they carry the totals the
      // localization collapses onto
      const bool entries_ok =
          len == 1 || std::all_of(w.begin(), w.end(), [&](int e) { return e >= min_entry; });
      if (entries_ok && (max_total < 0 || total <= max_total)) {
        out.push_back(w);
        if (static_cast<long>(out.size()) > budget)
          throw fincat::BudgetExceeded("sequence enumeration budget");
      }
      int i = len - 1;
      while (i >= 0 && w[i] == max_entry) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

int seq_total(const std::vector<int>& s) { return std::accumulate(s.begin(), s.end(), 0); }

// block index of a total-set element (1-based) in a sequence
int block_of(const std::vector<int>& seq, int x) {
  int acc = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    acc += seq[i];
    if (x <= acc) return static_cast<int>(i) + 1;
  }
  return -1;
}

// position of x within its block (1-based)
int pos_in_block(const std::vector<int>& seq, int x) {
  int acc = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (x <= acc + seq[i]) return x - acc;
    acc += seq[i];
  }
  return -1;
}

}  // namespace

Id LeinsterCategory::object_of(const std::vector<int>& seq) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == seq) return static_cast<Id>(i);
  return kNone;
}

Id LeinsterCategory::morphism_of(Id src, Id tgt, const UnbasedMap& h, const UnbasedMap& phi) const {
  for (Id m = 0; m < static_cast<Id>(mor_data.size()); ++m)
    if (cat->base->src(m) == src && cat->base->tgt(m) == tgt && mor_data[m].h == h &&
        mor_data[m].phi == phi)
      return m;
  return kNone;
}

int LeinsterCategory::total(Id ob) const { return seq_total(objects[ob]); }

LeinsterCategory build_leinster(int max_len, int max_entry, int max_total, long budget,
                                int min_entry) {
  LeinsterCategory out;
  out.max_len = max_len;
  out.max_entry = max_entry;
  out.max_total = max_total;
  out.min_entry = min_entry;
  out.objects = enumerate_sequences(max_len, max_entry, max_total, budget, min_entry);
  std::map<std::vector<int>, Id> oidx;
  for (size_t i = 0; i < out.objects.size(); ++i) oidx[out.objects[i]] = static_cast<Id>(i);

  fincat::FinCategory k;
  k.name = "Leinster(len<=" + std::to_string(max_len) + ",entry<=" + std::to_string(max_entry) + ")";
  for (size_t i = 0; i < out.objects.size(); ++i) k.add_object();

  std::map<std::tuple<Id, Id, std::vector<int>, std::vector<int>>, Id> midx;
  out.mor_data.resize(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i) {
    LeinsterCategory::MorData idm{UnbasedMap::identity(static_cast<int>(out.objects[i].size())),
                                  UnbasedMap::identity(seq_total(out.objects[i]))};
    out.mor_data[k.identity(static_cast<Id>(i))] = idm;
    midx[{static_cast<Id>(i), static_cast<Id>(i), idm.h.values, idm.phi.values}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.objects.size());
  for (size_t i = 0; i < out.objects.size(); ++i) {
    const auto& kseq = out.objects[i];
    const int r = static_cast<int>(kseq.size());
    const int ktot = seq_total(kseq);
    for (size_t j = 0; j < out.objects.size(); ++j) {
      const auto& mseq = out.objects[j];
      const int s = static_cast<int>(mseq.size());
      const int mtot = seq_total(mseq);
      for (const auto& h : gammaskel::enumerate_unbased_maps(s, r)) {
        for (const auto& phi : gammaskel::enumerate_unbased_maps(ktot, mtot)) {
          // square: block_k(x) == h(block_m(phi(x)))
          bool ok = true;
          for (int x = 1; x <= ktot && ok; ++x)
            if (block_of(kseq, x) != h(block_of(mseq, phi(x)))) ok = false;
          if (!ok) continue;
          if (midx.count({static_cast<Id>(i), static_cast<Id>(j), h.values, phi.values})) continue;
          if (++total > budget) throw fincat::BudgetExceeded("Leinster morphism budget");
          const Id m = k.add_morphism(static_cast<Id>(i), static_cast<Id>(j));
          midx[{static_cast<Id>(i), static_cast<Id>(j), h.values, phi.values}] = m;
          out.mor_data.push_back({h, phi});
        }
      }
    }
  }
  {
    std::vector<std::vector<Id>> out_of(out.objects.size());
    for (size_t m = 0; m < out.mor_data.size(); ++m) out_of[k.src(static_cast<Id>(m))].push_back(static_cast<Id>(m));
    for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
      for (Id m2 : out_of[k.tgt(static_cast<Id>(m1))]) {
        const auto& a = out.mor_data[m1];
        const auto& b = out.mor_data[m2];
        const UnbasedMap h = gammaskel::compose(a.h, b.h);
        const UnbasedMap phi = gammaskel::compose(b.phi, a.phi);
        k.set_compose(m2, static_cast<Id>(m1),
                      midx.at({k.src(static_cast<Id>(m1)), k.tgt(m2), h.values, phi.values}));
      }
  }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = "Leinster";
  p.bounded = true;
  p.unit = oidx.at({});
  for (size_t i = 0; i < out.objects.size(); ++i)
    for (size_t j = 0; j < out.objects.size(); ++j) {
      std::vector<int> cw = out.objects[i];
      cw.insert(cw.end(), out.objects[j].begin(), out.objects[j].end());
      auto it = oidx.find(cw);
      if (it == oidx.end()) continue;
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), it->second);
      const int r = static_cast<int>(out.objects[i].size());
      const int s = static_cast<int>(out.objects[j].size());
      const int it1 = seq_total(out.objects[i]);
      const int it2 = seq_total(out.objects[j]);
      std::vector<int> sw = out.objects[j];
      sw.insert(sw.end(), out.objects[i].begin(), out.objects[i].end());
      p.set_gamma(static_cast<Id>(i), static_cast<Id>(j),
                  midx.at({it->second, oidx.at(sw), gammaskel::symmetry_N(s, r).values,
                           gammaskel::symmetry_N(it1, it2).values}));
    }
  for (size_t m1 = 0; m1 < out.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_data.size(); ++m2) {
      const Id s = p.ob_tensor(p.base->src(static_cast<Id>(m1)), p.base->src(static_cast<Id>(m2)));
      const Id t = p.ob_tensor(p.base->tgt(static_cast<Id>(m1)), p.base->tgt(static_cast<Id>(m2)));
      if (s == kNone || t == kNone) continue;
      const auto& a = out.mor_data[m1];
      const auto& b = out.mor_data[m2];
      p.set_mor_tensor(static_cast<Id>(m1), static_cast<Id>(m2),
                       midx.at({s, t, gammaskel::plus_N(a.h, b.h).values,
                                gammaskel::plus_N(a.phi, b.phi).values}));
    }
  out.cat = std::make_shared<const PermCategory>(std::move(p));
  return out;
}

Id FiberProduct::ob_tuple(const std::vector<Id>& t) const {
  long acc = 0;
  for (size_t i = 0; i < t.size(); ++i) acc += t[i] * ob_stride[i];
  return static_cast<Id>(acc);
}

Id FiberProduct::ob_component(Id ob, int i) const {
  return static_cast<Id>((ob / ob_stride[i]) % factors[i]->num_objects());
}

Id FiberProduct::mor_id_of_tuple(const std::vector<Id>& t) const {
  long acc = 0;
  for (size_t i = 0; i < t.size(); ++i) acc += t[i] * mor_stride[i];
  return mor_tuple_to_id[acc];
}

Id FiberProduct::mor_component_of_id(Id m, int i) const {
  return static_cast<Id>((id_to_mor_tuple[m] / mor_stride[i]) % factors[i]->num_morphisms());
}

FiberProduct fiber_product(const std::vector<CatPtr>& factors, long budget) {
  FiberProduct out;
  out.factors = factors;
  const int n = static_cast<int>(factors.size());
  out.ob_stride.assign(n, 1);
  out.mor_stride.assign(n, 1);
  long nob = 1, nmor = 1;
  for (int i = n - 1; i >= 0; --i) {
    out.ob_stride[i] = nob;
    out.mor_stride[i] = nmor;
    nob *= factors[i]->num_objects();
    nmor *= factors[i]->num_morphisms();
    if (nob > budget || nmor > budget) throw fincat::BudgetExceeded("fiber product budget");
  }
  fincat::FinCategory k;
  k.name = "fiberprod";
  for (long i = 0; i < nob; ++i) k.add_object();
  std::vector<Id> mor_of(static_cast<size_t>(nmor), kNone);
  auto ob_of_mor_tuple = [&](long mt, bool tgt) {
    long acc = 0;
    for (int i = 0; i < n; ++i) {
      const Id c = static_cast<Id>((mt / out.mor_stride[i]) % factors[i]->num_morphisms());
      acc += static_cast<long>(tgt ? factors[i]->tgt(c) : factors[i]->src(c)) * out.ob_stride[i];
    }
    return static_cast<Id>(acc);
  };
  for (long o = 0; o < nob; ++o) {
    long mt = 0;
    for (int i = 0; i < n; ++i) {
      const Id c = static_cast<Id>((o / out.ob_stride[i]) % factors[i]->num_objects());
      mt += static_cast<long>(factors[i]->identity(c)) * out.mor_stride[i];
    }
    mor_of[mt] = k.identity(static_cast<Id>(o));
  }
  for (long mt = 0; mt < nmor; ++mt)
    if (mor_of[mt] == kNone)
      mor_of[mt] = k.add_morphism(ob_of_mor_tuple(mt, false), ob_of_mor_tuple(mt, true));
  for (long m2 = 0; m2 < nmor; ++m2)
    for (long m1 = 0; m1 < nmor; ++m1) {
      if (ob_of_mor_tuple(m1, true) != ob_of_mor_tuple(m2, false)) continue;
      long mt = 0;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Id c1 = static_cast<Id>((m1 / out.mor_stride[i]) % factors[i]->num_morphisms());
        const Id c2 = static_cast<Id>((m2 / out.mor_stride[i]) % factors[i]->num_morphisms());
        const Id c = factors[i]->compose(c2, c1);
        if (c == kNone) ok = false;
        mt += static_cast<long>(c) * out.mor_stride[i];
      }
      if (ok) k.set_compose(mor_of[m2], mor_of[m1], mor_of[mt]);
    }
  out.cat = fincat::make_cat(std::move(k));
  out.id_to_mor_tuple.assign(out.cat->num_morphisms(), 0);
  for (long mt = 0; mt < nmor; ++mt) out.id_to_mor_tuple[mor_of[mt]] = mt;
  out.mor_tuple_to_id = std::move(mor_of);
  return out;
}

SMExtension sm_extension(const GammaCategory& x, const LeinsterCategory& lein, long budget) {
  SMExtension out;
  out.lein = lein;
  out.x = &x;
  for (size_t i = 0; i < lein.objects.size(); ++i) {
    std::vector<CatPtr> fac;
    for (int e : lein.objects[i]) fac.push_back(x.degrees[e]);
    out.fibers.push_back(fiber_product(fac, budget));
  }
  out.action.resize(lein.mor_data.size());
  for (Id m = 0; m < static_cast<Id>(lein.mor_data.size()); ++m) {
    const Id so = lein.cat->base->src(m), to = lein.cat->base->tgt(m);
    const auto& kseq = lein.objects[so];
    const auto& mseq = lein.objects[to];
    const auto& md = lein.mor_data[m];
    const int s = static_cast<int>(mseq.size());
    // per target slot t: based map g_t : k_{h(t)}+ -> m_t+
    std::vector<BasedMap> g(s);
    for (int t = 1; t <= s; ++t) {
      const int i = md.h(t);
      std::vector<int> vals(kseq[i - 1], 0);
      // element z of block i has global position offset(i) + z
      int offset = 0;
      for (int b = 1; b < i; ++b) offset += kseq[b - 1];
      for (int z = 1; z <= kseq[i - 1]; ++z) {
        const int img = md.phi(offset + z);
        if (block_of(mseq, img) == t) vals[z - 1] = pos_in_block(mseq, img);
      }
      g[t - 1] = BasedMap(kseq[i - 1], mseq[t - 1], std::move(vals));
    }
    const FiberProduct& fs = out.fibers[so];
    const FiberProduct& ft = out.fibers[to];
    std::vector<Id> ob(fs.cat->num_objects()), mor(fs.cat->num_morphisms());
    for (Id o = 0; o < fs.cat->num_objects(); ++o) {
      std::vector<Id> tup(s);
      for (int t = 1; t <= s; ++t)
        tup[t - 1] = x.action(g[t - 1]).ob[fs.ob_component(o, md.h(t) - 1)];
      ob[o] = ft.ob_tuple(tup);
    }
    for (Id fm = 0; fm < fs.cat->num_morphisms(); ++fm) {
      std::vector<Id> tup(s);
      for (int t = 1; t <= s; ++t)
        tup[t - 1] = x.action(g[t - 1]).mor[fs.mor_component_of_id(fm, md.h(t) - 1)];
      mor[fm] = ft.mor_id_of_tuple(tup);
    }
    out.action[m] = Functor(fs.cat, ft.cat, std::move(ob), std::move(mor));
  }
  return out;
}

Report extension_functoriality(const SMExtension& ext) {
  Report r;
  const auto& base = *ext.lein.cat->base;
  for (Id f = 0; f < base.num_morphisms(); ++f)
    for (Id g = 0; g < base.num_morphisms(); ++g) {
      if (!base.composable(g, f)) continue;
      const Id gf = base.compose(g, f);
      if (!(ext.action[gf] == fincat::compose(ext.action[g], ext.action[f])))
        r.add("extension-functoriality", "g=" + std::to_string(g) + " f=" + std::to_string(f));
    }
  for (Id o = 0; o < static_cast<Id>(ext.lein.objects.size()); ++o)
    if (!(ext.action[base.identity(o)] == Functor::identity(ext.fibers[o].cat)))
      r.add("extension-identity", "object " + std::to_string(o));
  return r;
}

Id Grothendieck::cell_of(Id lob, Id fib) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].first == lob && cells[i].second == fib) return static_cast<Id>(i);
  return kNone;
}

Id Grothendieck::cell_mor_of(Id src_cell, Id lmor, Id fmor) const {
  for (Id m = 0; m < static_cast<Id>(mors.size()); ++m)
    if (cat->base->src(m) == src_cell && mors[m].lmor == lmor && mors[m].fmor == fmor) return m;
  return kNone;
}

Grothendieck grothendieck_perm(const SMExtension& ext, long budget) {
  Grothendieck out;
  const auto& lein = ext.lein;
  const auto& lbase = *lein.cat->base;
  std::map<std::pair<Id, Id>, Id> cidx;
  for (Id lo = 0; lo < static_cast<Id>(lein.objects.size()); ++lo)
    for (Id fo = 0; fo < ext.fibers[lo].cat->num_objects(); ++fo) {
      cidx[{lo, fo}] = static_cast<Id>(out.cells.size());
      out.cells.push_back({lo, fo});
    }
  fincat::FinCategory k;
  k.name = "int(" + (ext.x ? ext.x->name : "X") + ")";
  for (size_t i = 0; i < out.cells.size(); ++i) k.add_object();

  std::map<std::tuple<Id, Id, Id>, Id> midx;  // (src cell, lmor, fmor)
  out.mors.resize(out.cells.size());
  for (size_t i = 0; i < out.cells.size(); ++i) {
    const auto [lo, fo] = out.cells[i];
    const Grothendieck::CellMor idm{lbase.identity(lo), ext.fibers[lo].cat->identity(fo)};
    out.mors[k.identity(static_cast<Id>(i))] = idm;
    midx[{static_cast<Id>(i), idm.lmor, idm.fmor}] = k.identity(static_cast<Id>(i));
  }
  long total = static_cast<long>(out.cells.size());
  for (Id lm = 0; lm < lbase.num_morphisms(); ++lm) {
    const Id so = lbase.src(lm), to = lbase.tgt(lm);
    const auto& ftgt = *ext.fibers[to].cat;
    for (Id xo = 0; xo < ext.fibers[so].cat->num_objects(); ++xo) {
      const Id img = ext.action[lm].ob[xo];
      const Id src_cell = cidx.at({so, xo});
      for (Id fm = 0; fm < ftgt.num_morphisms(); ++fm) {
        if (ftgt.src(fm) != img) continue;
        if (midx.count({src_cell, lm, fm})) continue;
        if (++total > budget) throw fincat::BudgetExceeded("Grothendieck morphism budget");
        const Id m = k.add_morphism(src_cell, cidx.at({to, ftgt.tgt(fm)}));
        midx[{src_cell, lm, fm}] = m;
        out.mors.push_back({lm, fm});
      }
    }
  }
  {
    std::vector<std::vector<Id>> out_of(out.cells.size());
    for (size_t m = 0; m < out.mors.size(); ++m) out_of[k.src(static_cast<Id>(m))].push_back(static_cast<Id>(m));
    for (size_t m1 = 0; m1 < out.mors.size(); ++m1)
      for (Id m2 : out_of[k.tgt(static_cast<Id>(m1))]) {
        const auto& a = out.mors[m1];
        const auto& b = out.mors[m2];
        const Id lc = lbase.compose(b.lmor, a.lmor);
        const Id to2 = lbase.tgt(b.lmor);
        const Id fc = ext.fibers[to2].cat->compose(b.fmor, ext.action[b.lmor].mor[a.fmor]);
        k.set_compose(m2, static_cast<Id>(m1), midx.at({k.src(static_cast<Id>(m1)), lc, fc}));
      }
  }
  PermCategory p(fincat::make_cat(std::move(k)));
  p.name = "int(" + (ext.x ? ext.x->name : "X") + ")";
  p.bounded = true;
  {
    const Id lunit = lein.object_of({});
    p.unit = cidx.at({lunit, 0});
  }
  // tensor on cells: concatenate index objects and fiber tuples
  auto concat_tuple = [&](Id lo1, Id fo1, Id lo2, Id fo2, Id lo12) {
    const auto& f1 = ext.fibers[lo1];
    const auto& f2 = ext.fibers[lo2];
    std::vector<Id> tup;
    for (size_t i = 0; i < f1.factors.size(); ++i) tup.push_back(f1.ob_component(fo1, static_cast<int>(i)));
    for (size_t i = 0; i < f2.factors.size(); ++i) tup.push_back(f2.ob_component(fo2, static_cast<int>(i)));
    return ext.fibers[lo12].ob_tuple(tup);
  };
  for (size_t i = 0; i < out.cells.size(); ++i)
    for (size_t j = 0; j < out.cells.size(); ++j) {
      const auto [lo1, fo1] = out.cells[i];
      const auto [lo2, fo2] = out.cells[j];
      const Id lo12 = lein.cat->ob_tensor(lo1, lo2);
      if (lo12 == kNone) continue;
      const Id fo12 = concat_tuple(lo1, fo1, lo2, fo2, lo12);
      const Id cell12 = cidx.at({lo12, fo12});
      p.set_ob_tensor(static_cast<Id>(i), static_cast<Id>(j), cell12);
      // gamma = (gamma_Leinster, id)
      const Id lg = lein.cat->gamma(lo1, lo2);
      const Id lo21 = lein.cat->ob_tensor(lo2, lo1);
      const Id fo21 = concat_tuple(lo2, fo2, lo1, fo1, lo21);
      const Id expected = ext.action[lg].ob[fo12];
      if (expected != fo21) throw std::logic_error("grothendieck gamma: swap mismatch");
      p.set_gamma(static_cast<Id>(i), static_cast<Id>(j),
                  midx.at({cell12, lg, ext.fibers[lo21].cat->identity(fo21)}));
    }
  {
    // only morphism pairs whose endpoint cells tensor within the bounds
    std::vector<std::vector<Id>> by_src_cell(out.cells.size());
    for (size_t m = 0; m < out.mors.size(); ++m)
      by_src_cell[p.base->src(static_cast<Id>(m))].push_back(static_cast<Id>(m));
    for (Id c1 = 0; c1 < static_cast<Id>(out.cells.size()); ++c1)
      for (Id c2 = 0; c2 < static_cast<Id>(out.cells.size()); ++c2) {
        if (p.ob_tensor(c1, c2) == kNone) continue;
        for (Id m1 : by_src_cell[c1])
          for (Id m2 : by_src_cell[c2]) {
            const Id s = p.ob_tensor(c1, c2);
            const Id t = p.ob_tensor(p.base->tgt(m1), p.base->tgt(m2));
            if (t == kNone) continue;
            const auto& a = out.mors[m1];
            const auto& b = out.mors[m2];
            const Id lt = lein.cat->mor_tensor(a.lmor, b.lmor);
            if (lt == kNone) continue;
            // fiber tensor: concatenate component morphisms at the targets
            const Id to1 = lbase.tgt(a.lmor), to2 = lbase.tgt(b.lmor);
            const Id to12 = lein.cat->ob_tensor(to1, to2);
            const auto& f1 = ext.fibers[to1];
            const auto& f2 = ext.fibers[to2];
            std::vector<Id> tup;
            for (size_t q = 0; q < f1.factors.size(); ++q)
              tup.push_back(f1.mor_component_of_id(a.fmor, static_cast<int>(q)));
            for (size_t q = 0; q < f2.factors.size(); ++q)
              tup.push_back(f2.mor_component_of_id(b.fmor, static_cast<int>(q)));
            const Id ftens = ext.fibers[to12].mor_id_of_tuple(tup);
            p.set_mor_tensor(m1, m2, midx.at({s, lt, ftens}));
          }
      }
  }
  auto pp = std::make_shared<const PermCategory>(std::move(p));
  out.cat = pp;
  // projection to the Leinster fragment
  std::vector<Id> pob(out.cells.size()), pmor(out.mors.size());
  for (size_t i = 0; i < out.cells.size(); ++i) pob[i] = out.cells[i].first;
  for (size_t m = 0; m < out.mors.size(); ++m) pmor[m] = out.mors[m].lmor;
  out.projection = permcat::StrictSMFunctor{
      pp, lein.cat, Functor(pp->base, lein.cat->base, std::move(pob), std::move(pmor))};
  return out;
}

Localization localize_horizontal(const SMExtension& ext, const Grothendieck& groth, long budget,
                                 bool prefer_last) {
  const GammaCategory& x = *ext.x;
  if (!gammacat::segal_check(x).ok())
    throw std::invalid_argument("localize_horizontal: Segal check fails, localization refused");
  Localization out;
  const auto& lein = ext.lein;
  const CatPtr& x1 = x.degrees[1];

  // per Leinster object: the canonical Segal functor (m_r, id) : (n) -> nvec
  // and a deterministic quasi-inverse choice per fiber object
  const int nl = static_cast<int>(lein.objects.size());
  std::vector<Id> seg_mor(nl, kNone);
  std::vector<std::vector<Id>> q_ob(nl);   // fiber object -> object of X(total+)
  std::vector<std::vector<Id>> q_iso(nl);  // fiber object -> iso E(q_ob) -> it
  for (Id lo = 0; lo < nl; ++lo) {
    const int tot = lein.total(lo);
    const int r = static_cast<int>(lein.objects[lo].size());
    const Id single = lein.object_of({tot});
    if (single == kNone)
      throw std::invalid_argument("localize_horizontal: fragment lacks the total object (" +
                                  std::to_string(tot) + ")");
    UnbasedMap mr(r, 1, std::vector<int>(r, 1));
    seg_mor[lo] = lein.morphism_of(single, lo, mr, UnbasedMap::identity(tot));
    if (seg_mor[lo] == kNone) throw std::logic_error("localize: partition morphism missing");
    const Functor& e = ext.action[seg_mor[lo]];
    const auto& fib = *ext.fibers[lo].cat;
    q_ob[lo].assign(fib.num_objects(), kNone);
    q_iso[lo].assign(fib.num_objects(), kNone);
    const int deg_obs = x.degrees[tot]->num_objects();
    auto scan = [&](Id step) {
      return prefer_last ? deg_obs - 1 - step : step;
    };
    for (Id t = 0; t < fib.num_objects(); ++t) {
      for (Id step = 0; step < deg_obs && q_ob[lo][t] == kNone; ++step) {
        const Id xo = scan(step);
        if (e.ob[xo] == t) {
          q_ob[lo][t] = xo;
          q_iso[lo][t] = fib.identity(t);
        }
      }
      for (Id step = 0; step < deg_obs && q_ob[lo][t] == kNone; ++step) {
        const Id xo = scan(step);
        for (Id iso : fib.hom(e.ob[xo], t))
          if (fib.is_invertible(iso)) {
            q_ob[lo][t] = xo;
            q_iso[lo][t] = iso;
            break;
          }
      }
      if (q_ob[lo][t] == kNone)
        throw std::logic_error("localize: Segal functor not essentially surjective");
    }
  }
  // collapse of each cell
  out.collapse.resize(groth.cells.size());
  for (size_t c = 0; c < groth.cells.size(); ++c) {
    const auto [lo, fo] = groth.cells[c];
    const int tot = lein.total(lo);
    out.collapse[c] = x.action(gammaskel::multiplication(tot)).ob[q_ob[lo][fo]];
  }
  // the collapse category
  fincat::FinCategory k;
  k.name = "Lbar(" + x.name + ")";
  for (size_t c = 0; c < groth.cells.size(); ++c) k.add_object();
  std::map<std::tuple<Id, Id, Id>, Id> midx;  // (src cell, tgt cell, X(1) morphism)
  out.lmors.resize(groth.cells.size());
  for (size_t c = 0; c < groth.cells.size(); ++c) {
    out.lmors[k.identity(static_cast<Id>(c))] = {x1->identity(out.collapse[c])};
    midx[{static_cast<Id>(c), static_cast<Id>(c), x1->identity(out.collapse[c])}] =
        k.identity(static_cast<Id>(c));
  }
  long total = static_cast<long>(groth.cells.size());
  for (size_t a = 0; a < groth.cells.size(); ++a)
    for (size_t b = 0; b < groth.cells.size(); ++b)
      for (Id w : x1->hom(out.collapse[a], out.collapse[b])) {
        if (midx.count({static_cast<Id>(a), static_cast<Id>(b), w})) continue;
        if (++total > budget) throw fincat::BudgetExceeded("localization budget");
        midx[{static_cast<Id>(a), static_cast<Id>(b), w}] =
            k.add_morphism(static_cast<Id>(a), static_cast<Id>(b));
        out.lmors.push_back({w});
      }
  {
    std::vector<std::vector<Id>> out_of(groth.cells.size());
    for (size_t m = 0; m < out.lmors.size(); ++m) out_of[k.src(static_cast<Id>(m))].push_back(static_cast<Id>(m));
    for (size_t m1 = 0; m1 < out.lmors.size(); ++m1)
      for (Id m2 : out_of[k.tgt(static_cast<Id>(m1))]) {
        const Id w = x1->compose(out.lmors[m2].value, out.lmors[m1].value);
        k.set_compose(m2, static_cast<Id>(m1),
                      midx.at({k.src(static_cast<Id>(m1)), k.tgt(m2), w}));
      }
  }
  out.lbar = fincat::make_cat(std::move(k));

  // degree-one inclusion and its retraction
  const Id lone = lein.object_of({1});
  if (lone == kNone) throw std::invalid_argument("localize: fragment lacks the object (1)");
  std::vector<Id> iob(x1->num_objects()), imor(x1->num_morphisms());
  for (Id o = 0; o < x1->num_objects(); ++o) iob[o] = groth.cell_of(lone, o);
  for (Id m = 0; m < x1->num_morphisms(); ++m)
    imor[m] = midx.at({iob[x1->src(m)], iob[x1->tgt(m)], m});
  out.inclusion = Functor(x1, out.lbar, iob, std::move(imor));
  std::vector<Id> rob(out.lbar->num_objects()), rmor(out.lbar->num_morphisms());
  for (size_t c = 0; c < groth.cells.size(); ++c) rob[c] = out.collapse[c];
  for (size_t m = 0; m < out.lmors.size(); ++m) rmor[m] = out.lmors[m].value;
  out.retraction = Functor(out.lbar, x1, std::move(rob), std::move(rmor));

  Report& r = out.report;
  if (!(fincat::compose(out.retraction, out.inclusion) == Functor::identity(x1)))
    r.add("retraction", "ibar o i != id");
  if (!out.inclusion.validate().ok()) r.add("inclusion", "not a functor");
  if (!fincat::is_fully_faithful(out.inclusion)) r.add("inclusion-ff", "");
  if (!fincat::is_essentially_surjective(out.inclusion)) r.add("inclusion-esssurj", "");

  // projection of Grothendieck morphisms
  out.pi.assign(groth.mors.size(), kNone);
  for (Id gm = 0; gm < static_cast<Id>(groth.mors.size()); ++gm) {
    const Id src_cell = groth.cat->base->src(gm);
    const Id tgt_cell = groth.cat->base->tgt(gm);
    const auto [slo, sfo] = groth.cells[src_cell];
    const auto [tlo, tfo] = groth.cells[tgt_cell];
    const auto& md = lein.mor_data[groth.mors[gm].lmor];
    const int ttot = lein.total(tlo);
    const auto& fib_t = *ext.fibers[tlo].cat;
    const Functor& e_t = ext.action[seg_mor[tlo]];
    const Id xo = q_ob[slo][sfo];
    const Id x_phi = x.action(gammaskel::active_lift(md.phi)).ob[xo];
    // mid : act(E(xo)) -> tfo in the target fiber
    const Id act_j = ext.action[groth.mors[gm].lmor].mor[q_iso[slo][sfo]];
    const Id mid = fib_t.compose(groth.mors[gm].fmor, act_j);
    const Id q = fib_t.compose(fib_t.inverse(q_iso[tlo][tfo]), mid);
    // unique w with E_t(w) = q
    Id w = kNone;
    for (Id cand : x.degrees[ttot]->hom(x_phi, q_ob[tlo][tfo]))
      if (e_t.mor[cand] == q) {
        if (w != kNone) {
          r.add("projection-unique", "morphism " + std::to_string(gm));
          break;
        }
        w = cand;
      }
    if (w == kNone) {
      r.add("projection-missing", "morphism " + std::to_string(gm));
      continue;
    }
    const Id value = x.action(gammaskel::multiplication(ttot)).mor[w];
    out.pi[gm] = midx.at({src_cell, tgt_cell, value});
    // horizontal morphisms land on isomorphisms
    if (fib_t.is_identity(groth.mors[gm].fmor) && !out.lbar->is_invertible(out.pi[gm]))
      r.add("horizontal-not-iso", "morphism " + std::to_string(gm));
  }
  // functoriality of the projection
  {
    std::vector<std::vector<Id>> out_of(groth.cells.size());
    for (Id m = 0; m < static_cast<Id>(groth.mors.size()); ++m)
      out_of[groth.cat->base->src(m)].push_back(m);
    for (Id m1 = 0; m1 < static_cast<Id>(groth.mors.size()); ++m1)
      for (Id m2 : out_of[groth.cat->base->tgt(m1)]) {
        const Id c = groth.cat->base->compose(m2, m1);
        if (c == kNone) continue;
        if (out.pi[c] != out.lbar->compose(out.pi[m2], out.pi[m1]))
          r.add("projection-functorial", std::to_string(m2) + " o " + std::to_string(m1));
      }
  }
  return out;
}

Report partition_action_check(const SMExtension& ext) {
  Report r;
  const auto& lein = ext.lein;
  const GammaCategory& x = *ext.x;
  for (Id lo = 0; lo < static_cast<Id>(lein.objects.size()); ++lo) {
    const auto& seq = lein.objects[lo];
    const int rr = static_cast<int>(seq.size());
    if (rr == 0) continue;
    const int tot = lein.total(lo);
    const Id single = lein.object_of({tot});
    if (single == kNone) continue;
    UnbasedMap mr(rr, 1, std::vector<int>(rr, 1));
    const Id lm = lein.morphism_of(single, lo, mr, UnbasedMap::identity(tot));
    if (lm == kNone) continue;
    const Functor& direct = ext.action[lm];
    // iterated binary route: split off one block at a time
    const auto& fib = ext.fibers[lo];
    for (Id xo = 0; xo < x.degrees[tot]->num_objects(); ++xo) {
      Id rest_ob = xo;
      int rest = tot;
      std::vector<Id> tup(rr);
      for (int t = 0; t < rr; ++t) {
        if (t + 1 == rr) {
          tup[t] = rest_ob;
          break;
        }
        const Functor& left = x.action(gammaskel::delta_left(seq[t], rest - seq[t]));
        const Functor& right = x.action(gammaskel::delta_right(seq[t], rest - seq[t]));
        tup[t] = left.ob[rest_ob];
        rest_ob = right.ob[rest_ob];
        rest -= seq[t];
      }
      if (direct.ob[xo] != fib.ob_tuple(tup))
        r.add("partition-route", "object " + std::to_string(lo) + " x=" + std::to_string(xo));
    }
  }
  return r;
}

}  // namespace leinster
