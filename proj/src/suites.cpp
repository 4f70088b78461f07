#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "freeperm.hpp"
#include "gammacat.hpp"
#include "leinster.hpp"
#include "segalnerve.hpp"
#include "serialize.hpp"

namespace harness {

using Clock = std::chrono::steady_clock;
using fincat::Report;

bool RunReport::all_passed() const {
  for (const auto& r : records)
    if (r.status == "fail") return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"factorization", "lifting-oracles", "perm-axioms", "day",    "segal",
          "adjunctions",   "iso-J",           "nerve",       "roundtrip", "wedge",
          "localization",  "freeperm",        "completion"};
}

namespace {

struct Recorder {
  RunReport& report;
  void add(const std::string& check, const std::string& anchor, const std::string& params,
           const Report& r, double ms) {
    CheckRecord rec{check, anchor, params, r.ok() ? "pass" : "fail",
                    r.ok() ? "" : (r.items[0].rule + ": " + r.items[0].witness), ms};
    report.records.push_back(std::move(rec));
  }
  void add_bool(const std::string& check, const std::string& anchor, const std::string& params,
                bool ok, const std::string& witness, double ms) {
    report.records.push_back({check, anchor, params, ok ? "pass" : "fail", ok ? "" : witness, ms});
  }
  void add_budget(const std::string& check, const std::string& what) {
    report.records.push_back({check, "plumbing", "", "budget", what, 0.0});
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<fincat::Functor> lifting_corpus(const SuiteConfig& cfg) {
  std::vector<fincat::Functor> out;
  for (const auto& a : corpus::lifting_base_categories())
    for (const auto& b : corpus::lifting_base_categories())
      for (auto& f : fincat::enumerate_functors(a, b, cfg.budget)) out.push_back(std::move(f));
  for (auto& f : corpus::random_functors(200, cfg.seed)) out.push_back(std::move(f));
  return out;
}

void suite_factorization(const SuiteConfig& cfg, Recorder& rec) {
  const auto t0 = Clock::now();
  const int bound = std::max(cfg.n_max, 1);
  std::vector<gammaskel::BasedMap> maps;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (auto& f : gammaskel::enumerate_based_maps(n, m)) maps.push_back(std::move(f));
  const auto mode = cfg.parallel ? sweep::Mode::Parallel : sweep::Mode::Serial;
  auto bad = sweep::failing_indices(static_cast<long>(maps.size()), mode, [&](long i) {
    const auto& f = maps[static_cast<size_t>(i)];
    const auto fact = gammaskel::factor_inert_active(f);
    if (!(gammaskel::compose(fact.active, fact.inert) == f)) return false;
    if (!gammaskel::is_inert(fact.inert) || !gammaskel::is_active(fact.active)) return false;
    int count = 0;
    for (int a = 0; a <= f.dom; ++a)
      for (const auto& u : gammaskel::enumerate_based_maps(f.dom, a)) {
        if (!gammaskel::is_inert(u)) continue;
        for (const auto& v : gammaskel::enumerate_based_maps(a, f.cod))
          if (gammaskel::is_active(v) && gammaskel::compose(v, u) == f) ++count;
      }
    return count == 1;
  });
  rec.add_bool("factorization.unique", "inert-active factorization exists uniquely",
               "n,m<=" + std::to_string(bound) + " (" + std::to_string(maps.size()) + " maps)",
               bad.empty(),
               bad.empty() ? "" : gammaskel::to_text(maps[static_cast<size_t>(bad[0])]), ms_since(t0));
}

void suite_lifting(const SuiteConfig& cfg, Recorder& rec) {
  const auto t0 = Clock::now();
  auto functors = lifting_corpus(cfg);
  const auto oracle = corpus::rlp_oracle(functors, cfg.parallel, cfg.budget);
  rec.add_bool("lifting.isofibration", "isofibration iff RLP against the interval inclusions",
               std::to_string(functors.size()) + " functors", oracle.iso_disagreements.empty(),
               oracle.iso_disagreements.empty()
                   ? ""
                   : "functor #" + std::to_string(oracle.iso_disagreements[0]),
               ms_since(t0));
  rec.add_bool("lifting.acyclic-fibration",
               "surjective equivalence iff RLP against the three boundary maps",
               std::to_string(functors.size()) + " functors", oracle.acyclic_disagreements.empty(),
               oracle.acyclic_disagreements.empty()
                   ? ""
                   : "functor #" + std::to_string(oracle.acyclic_disagreements[0]),
               ms_since(t0));
}

void suite_perm_axioms(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  Report axioms;
  for (const auto& p : corpus::perm_corpus()) axioms.merge(permcat::check_permutative(*p), p->name);
  rec.add("perm.axioms", "permutative axioms hold on the corpus", "corpus", axioms, ms_since(t0));

  t0 = Clock::now();
  Report chaotic;
  for (const auto& m : corpus::monoids_up_to_4()) {
    if (m.order > 3) continue;
    auto ec = permcat::chaotic_perm(permcat::discrete_perm(m));
    fincat::Functor term = fincat::Functor::constant(ec.ec->base, fincat::builtins::terminal(), 0);
    if (!fincat::is_equivalence(term) || !fincat::is_isofibration(term))
      chaotic.add("chaotic-terminal", m.name);
  }
  rec.add("perm.chaotic", "chaotic categories are contractible isofibrations over the point",
          "monoids<=3", chaotic, ms_since(t0));

  // mapping path factorization over corpus strict SM functors
  t0 = Clock::now();
  Report mp;
  int count = 0;
  auto cats = corpus::perm_corpus();
  for (const auto& c : cats) {
    for (const auto& d : cats) {
      if (c->nob() > 3 || d->nob() > 3) continue;
      std::vector<permcat::StrictSMFunctor> fs;
      try {
        fs = permcat::enumerate_strict_sm_functors(c, d, cfg.budget);
      } catch (const fincat::BudgetExceeded&) {
        continue;
      }
      for (const auto& f : fs) {
        if (count >= 50) break;
        ++count;
        auto m = permcat::mapping_path_factorize(f);
        if (!(permcat::compose(m.p_y, m.i_x).f == f.f)) mp.add("factorization", "P_Y o i_X != F");
        if (!fincat::is_isofibration(m.p_y.f)) mp.add("fibration", "P_Y not an isofibration");
        if (!fincat::is_equivalence(m.i_x.f)) mp.add("equivalence", "i_X not an equivalence");
        if (!permcat::check_permutative(*m.pf).ok()) mp.add("axioms", "P(F) not permutative");
      }
    }
  }
  rec.add("perm.mapping-path", "mapping path object factors F as equivalence then isofibration",
          std::to_string(count) + " functors", mp, ms_since(t0));

  // weak-equivalence and acyclic-fibration characterizations by search
  t0 = Clock::now();
  Report chars;
  int seen = 0;
  for (const auto& c : cats) {
    for (const auto& d : cats) {
      if (c->nob() > 2 || d->nob() > 2 || seen >= 24) continue;
      std::vector<permcat::StrictSMFunctor> fs;
      try {
        fs = permcat::enumerate_strict_sm_functors(c, d, cfg.budget);
      } catch (const fincat::BudgetExceeded&) {
        continue;
      }
      for (const auto& f : fs) {
        if (seen >= 24) break;
        ++seen;
        const bool equiv = fincat::is_fully_faithful(f.f) && fincat::is_essentially_surjective(f.f);
        const bool has_inverse = permcat::monoidal_quasi_inverse(f, cfg.budget).has_value();
        if (equiv != has_inverse) chars.add("weak-equivalence", c->name + "->" + d->name);
        const bool acyclic = equiv && f.f.surjective_on_objects();
        const bool has_section = permcat::monoidal_section(f, cfg.budget).has_value();
        if (acyclic != has_section) chars.add("acyclic-fibration", c->name + "->" + d->name);
      }
    }
  }
  rec.add("perm.characterizations",
          "monoidal quasi-inverses and sections characterize the model classes",
          std::to_string(seen) + " functors", chars, ms_since(t0));

  // the enriched hom embeds into the plain functor category on objects
  t0 = Clock::now();
  Report emb;
  {
    auto c = permcat::discrete_perm(corpus::z2());
    auto hom = permcat::strict_sm_hom(c, c, cfg.budget);
    auto plain = fincat::enumerate_functors(c->base, c->base, cfg.budget);
    for (size_t i = 0; i < hom.objects.size(); ++i) {
      bool found = false;
      for (const auto& g : plain)
        if (g == hom.objects[i].f) found = true;
      if (!found) emb.add("embedding", "strict functor missing among plain functors");
      for (size_t j = i + 1; j < hom.objects.size(); ++j)
        if (hom.objects[i].f == hom.objects[j].f) emb.add("embedding", "objects collide");
    }
  }
  rec.add("perm.hom-embedding", "the enriched hom embeds in the functor category on objects",
          "z2", emb, ms_since(t0));
}

void suite_day(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  auto g1 = gammacat::representable_gamma(1, 2);
  auto g2 = gammacat::representable_gamma(2, 2);
  auto p11 = gammacat::day_convolve(g1, g1, 2);
  auto p21 = gammacat::day_convolve(g2, g1, 2);
  auto p22 = gammacat::day_convolve(g2, g2, 2);
  Report unit;
  unit.merge(gammacat::day_coyoneda_check(p11, 1, 1), "g1*g1");
  unit.merge(gammacat::day_unit_iso(p11, g1), "g1*g1");
  unit.merge(gammacat::day_coyoneda_check(p21, 2, 1), "g2*g1");
  unit.merge(gammacat::day_unit_iso(p21, g2), "g2*g1");
  rec.add("day.unit", "the representable on one generator is the Day unit", "degrees<=2", unit,
          ms_since(t0));
  t0 = Clock::now();
  Report sq;
  sq.merge(gammacat::day_coyoneda_check(p22, 2, 2), "g2*g2");
  if (p22.degree[1].cat->num_objects() != 16) sq.add("count", "degree 1 of g2*g2 != 16");
  rec.add("day.representables", "convolution of representables is the smash representable",
          "degrees<=2", sq, ms_since(t0));
  t0 = Clock::now();
  Report sym;
  auto p12 = gammacat::day_convolve(g1, g2, 2);
  sym.merge(gammacat::day_symmetry_iso(p21, p12), "g2*g1~g1*g2");
  sym.merge(gammacat::day_symmetry_iso(p11, p11), "g1*g1");
  rec.add("day.symmetry", "Day convolution is symmetric", "degrees<=2", sym, ms_since(t0));
  t0 = Clock::now();
  Report nerveday;
  auto nerve = segalnerve::segal_nerve(permcat::discrete_perm(corpus::z2()), 2, cfg.budget);
  auto xk = gammacat::day_convolve(nerve.gamma, g1, 2);
  nerveday.merge(gammacat::day_unit_iso(xk, nerve.gamma), "unit");
  auto kx = gammacat::day_convolve(g1, nerve.gamma, 2);
  nerveday.merge(gammacat::day_symmetry_iso(xk, kx), "symmetry");
  rec.add("day.nerve", "the nerve of a discrete monoid absorbs the Day unit", "z2,degrees<=2",
          nerveday, ms_since(t0));
}

void suite_segal(const SuiteConfig& cfg, Recorder& rec) {
  std::vector<permcat::Monoid> monoids;
  if (cfg.monoid.empty()) {
    monoids = {corpus::z2(), corpus::z3(), corpus::sat3(), corpus::bool2()};
  } else {
    for (const auto& m : corpus::monoids_up_to_4())
      if (m.name == cfg.monoid) monoids.push_back(m);
    if (monoids.empty()) {
      rec.add_bool("segal.monoid", "nerve of the selected monoid", cfg.monoid, false,
                   "unknown monoid name", 0.0);
      return;
    }
  }
  for (const auto& m : monoids) {
    auto t0 = Clock::now();
    const int depth = m.order <= 2 ? std::min(cfg.n_max, 3) : 2;
    auto nv = segalnerve::segal_nerve(permcat::discrete_perm(m), depth, cfg.budget);
    Report r;
    r.merge(gammacat::functoriality_audit(nv.gamma), "functorial");
    r.merge(gammacat::segal_check(nv.gamma), "segal");
    rec.add("segal.monoid", "nerves of discrete commutative monoids satisfy the Segal condition",
            m.name + ",n<=" + std::to_string(depth), r, ms_since(t0));
  }
  auto t0 = Clock::now();
  auto ec = permcat::chaotic_perm(permcat::discrete_perm(corpus::z2())).ec;
  auto en = segalnerve::segal_nerve(ec, 2, cfg.budget);
  Report r2;
  r2.merge(gammacat::functoriality_audit(en.gamma), "functorial");
  r2.merge(gammacat::segal_check(en.gamma), "segal");
  auto cmp = gammacat::segal_comparison(en.gamma, 1, 1);
  if (cmp.comparison.surjective_on_objects())
    r2.add("strictness", "chaotic comparison unexpectedly bijective");
  rec.add("segal.chaotic", "the nerve of a chaotic category is Segal without being strict",
          "n<=2", r2, ms_since(t0));
}

void suite_adjunctions(const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 0; n <= std::min(2, cfg.n_max); ++n) {
    auto t0 = Clock::now();
    Report c = segalnerve::verify_coreflective(n, std::min(3, cfg.len_max + 1), n, cfg.budget);
    rec.add("adjunction.coreflective", "projection sequences are coreflective among map sequences",
            "n=" + std::to_string(n), c, ms_since(t0));
    t0 = Clock::now();
    Report rr = segalnerve::verify_reflective(n, std::min(3, cfg.len_max + 1), cfg.budget);
    rec.add("adjunction.reflective", "value sequences are reflective among subset sequences",
            "n=" + std::to_string(n), rr, ms_since(t0));
  }
}

void suite_iso_j(const SuiteConfig& cfg, Recorder& rec) {
  const int entry = std::max(1, std::min(2, cfg.entry_max));
  for (int n = 0; n <= std::min(2, cfg.n_max); ++n) {
    auto t0 = Clock::now();
    Report r = segalnerve::iso_compare_J(n, std::min(2, cfg.len_max), entry,
                                         std::max(cfg.budget, 50'000'000L));
    rec.add("isoJ.compare", "the Grothendieck fragment matches the map-sequence category",
            "n=" + std::to_string(n) + ",len<=2,entry<=" + std::to_string(entry), r, ms_since(t0));
  }
}

void suite_nerve(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  auto z2 = permcat::discrete_perm(corpus::z2());
  Report counts;
  for (int n = 0; n <= std::min(cfg.n_max, 3); ++n) {
    auto deg = segalnerve::nerve_degree(z2, n, cfg.budget);
    if (deg.objects.size() != (1u << n)) counts.add("count", "degree " + std::to_string(n));
    if (deg.cat->num_morphisms() != static_cast<int>(deg.objects.size()))
      counts.add("discrete", "degree " + std::to_string(n));
  }
  rec.add("nerve.counts", "nerve degrees of a discrete monoid are discrete with 2^n objects",
          "n<=" + std::to_string(std::min(cfg.n_max, 3)), counts, ms_since(t0));
  t0 = Clock::now();
  Report thick;
  auto deg1 = segalnerve::nerve_degree(z2, 1, cfg.budget);
  auto th = segalnerve::thickened_nerve_degree(z2, 1, 2, cfg.budget);
  thick.merge(segalnerve::thickened_comparison(deg1, th), "z2");
  auto one = segalnerve::thickened_nerve_degree(permcat::trivial_perm(), 1, 2, cfg.budget);
  if (one.objects.size() != 1) thick.add("trivial", "expected a single pseudo bicycle");
  rec.add("nerve.thickened", "the strict-to-pseudo comparison is fully faithful", "n=1,bound=2",
          thick, ms_since(t0));
}

void suite_roundtrip(const SuiteConfig& cfg, Recorder& rec) {
  std::vector<permcat::PermPtr> cats = {permcat::trivial_perm(),
                                        permcat::discrete_perm(corpus::z2()),
                                        permcat::chaotic_perm(permcat::discrete_perm(corpus::z2())).ec};
  for (const auto& c : cats)
    for (int n = 0; n <= std::min(2, cfg.n_max); ++n) {
      auto t0 = Clock::now();
      Report r = segalnerve::bicycle_roundtrip(c, n, std::min(2, cfg.len_max), cfg.budget);
      rec.add("roundtrip.bicycle", "bicycles and strict monoidal functors are interchangeable",
              c->name + ",n=" + std::to_string(n), r, ms_since(t0));
    }
}

void suite_wedge(const SuiteConfig& cfg, Recorder& rec) {
  for (int n = 0; n <= std::min(3, cfg.n_max); ++n) {
    auto t0 = Clock::now();
    Report r = segalnerve::wedge_inclusion_check(n, std::min(2, cfg.len_max), cfg.budget);
    rec.add("wedge.inclusion", "the wedge of generators includes as an acyclic cofibration",
            "n=" + std::to_string(n), r, ms_since(t0));
  }
}

void suite_localization(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  auto z2 = permcat::discrete_perm(corpus::z2());
  auto nerve = segalnerve::segal_nerve(z2, 3, cfg.budget);
  auto lein = leinster::build_leinster(2, 3, 2, cfg.budget);
  auto ext = leinster::sm_extension(nerve.gamma, lein, cfg.budget);
  auto groth = leinster::grothendieck_perm(ext, cfg.budget);
  auto loc = leinster::localize_horizontal(ext, groth, cfg.budget);
  Report r = loc.report;
  if (!fincat::is_equivalence(loc.inclusion)) r.add("inclusion", "not an equivalence");
  rec.add("localization.collapse", "horizontal localization collapses onto degree one",
          "z2 nerve, len<=2", r, ms_since(t0));
}

void suite_freeperm(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  Report r;
  for (fincat::CatPtr c : {fincat::builtins::terminal(), fincat::builtins::discrete2(),
                           fincat::builtins::arrow_i()}) {
    auto s = freeperm::free_perm(c, 3, cfg.budget);
    r.merge(permcat::check_permutative(*s.cat), "axioms:" + c->name);
    r.merge(fincat::validate_category(*s.cat->base), "category:" + c->name);
    for (const auto& m : {corpus::z2(), corpus::sat3()}) {
      auto a = permcat::discrete_perm(m);
      auto functors = fincat::enumerate_functors(c, a->base, cfg.budget);
      auto smf = permcat::enumerate_strict_sm_functors(s.cat, a, cfg.budget);
      if (functors.size() != smf.size()) r.add("restriction-bijection", c->name + "->" + m.name);
    }
  }
  rec.add("freeperm.universal", "restriction along the generators is a bijection", "L=3", r,
          ms_since(t0));
}

void suite_completion(const SuiteConfig& cfg, Recorder& rec) {
  auto t0 = Clock::now();
  Report r;
  for (const auto& m : {corpus::trivial_monoid(), corpus::z2()}) {
    auto p = permcat::discrete_perm(m);
    auto pe = freeperm::lax_completion(p, 3, cfg.budget);
    r.merge(fincat::validate_category(*pe.cat->base), "assoc:" + m.name);
    r.merge(permcat::check_permutative(*pe.cat), "axioms:" + m.name);
    r.merge(permcat::check_strict_sm_functor(pe.lambda_p), "fold:" + m.name);
    for (fincat::Id i = 0; i < pe.cat->nob(); ++i)
      for (fincat::Id jj = 0; jj < pe.cat->nob(); ++jj)
        if (static_cast<long>(pe.cat->base->hom(i, jj).size()) !=
            freeperm::completion_hom_count(*p, pe.words[i], pe.words[jj]))
          r.add("hom-count", m.name);
  }
  rec.add("completion.structure", "the lax completion composes associatively and folds back",
          "L=3", r, ms_since(t0));
}

}  // namespace

RunReport run_suite(const SuiteConfig& config) {
  RunReport report;
  Recorder rec{report};
  std::vector<std::string> wanted = config.suites;
  if (wanted.size() == 1 && wanted[0] == "all") wanted = suite_names();
  for (const auto& name : wanted) {
    try {
      if (name == "factorization")
        suite_factorization(config, rec);
      else if (name == "lifting-oracles")
        suite_lifting(config, rec);
      else if (name == "perm-axioms")
        suite_perm_axioms(config, rec);
      else if (name == "day")
        suite_day(config, rec);
      else if (name == "segal")
        suite_segal(config, rec);
      else if (name == "adjunctions")
        suite_adjunctions(config, rec);
      else if (name == "iso-J")
        suite_iso_j(config, rec);
      else if (name == "nerve")
        suite_nerve(config, rec);
      else if (name == "roundtrip")
        suite_roundtrip(config, rec);
      else if (name == "wedge")
        suite_wedge(config, rec);
      else if (name == "localization")
        suite_localization(config, rec);
      else if (name == "freeperm")
        suite_freeperm(config, rec);
      else if (name == "completion")
        suite_completion(config, rec);
      else
        report.records.push_back({name, "plumbing", "", "fail", "unknown suite name", 0.0});
    } catch (const fincat::BudgetExceeded& e) {
      rec.add_budget(name, e.what());
    }
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.check, a.params) < std::tie(b.check, b.params);
                   });
  return report;
}

std::string render(const RunReport& report, const SuiteConfig& config) {
  if (config.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["config"] = {{"suites", config.suites},   {"n_max", config.n_max},
                   {"len_max", config.len_max}, {"entry_max", config.entry_max},
                   {"budget", config.budget},   {"seed", config.seed},
                   {"monoid", config.monoid}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
      nlohmann::ordered_json e;
      e["check"] = r.check;
      e["anchor"] = r.anchor;
      e["params"] = r.params;
      e["status"] = r.status;
      e["witness"] = r.witness;
      if (config.timings) e["ms"] = r.ms;
      j["records"].push_back(std::move(e));
    }
    j["all_passed"] = report.all_passed();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << (r.status == "pass" ? "PASS" : (r.status == "budget" ? "BUDGET" : "FAIL")) << " "
       << r.check << " [" << r.params << "] " << r.anchor;
    if (!r.witness.empty()) os << " -- " << r.witness;
    if (config.timings) os << " (" << r.ms << " ms)";
    os << "\n";
  }
  os << (report.all_passed() ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace harness
