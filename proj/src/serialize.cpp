#include "serialize.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace serialize {

using fincat::Id;
using fincat::kNone;

Json to_json(const fincat::FinCategory& c) {
  Json j;
  j["objects"] = Json::array();
  for (Id o = 0; o < c.num_objects(); ++o) j["objects"].push_back(o);
  j["morphisms"] = Json::array();
  for (Id m = 0; m < c.num_morphisms(); ++m)
    j["morphisms"].push_back({{"id", m}, {"src", c.src(m)}, {"tgt", c.tgt(m)}});
  j["identities"] = Json::object();
  for (Id o = 0; o < c.num_objects(); ++o) j["identities"][std::to_string(o)] = c.identity(o);
  j["compose"] = Json::array();
  for (Id g = 0; g < c.num_morphisms(); ++g)
    for (Id f = 0; f < c.num_morphisms(); ++f) {
      const Id gf = c.compose(g, f);
      if (gf != kNone) j["compose"].push_back({g, f, gf});
    }
  return j;
}

Json to_json(const fincat::Functor& f) {
  Json j;
  j["obj_map"] = Json::object();
  for (size_t o = 0; o < f.ob.size(); ++o) j["obj_map"][std::to_string(o)] = f.ob[o];
  j["mor_map"] = Json::object();
  for (size_t m = 0; m < f.mor.size(); ++m) j["mor_map"][std::to_string(m)] = f.mor[m];
  return j;
}

Json to_json(const permcat::PermCategory& p) {
  Json j = to_json(*p.base);
  j["tensor_ob"] = Json::array();
  for (Id a = 0; a < p.nob(); ++a)
    for (Id b = 0; b < p.nob(); ++b)
      if (p.ob_tensor(a, b) != kNone) j["tensor_ob"].push_back({a, b, p.ob_tensor(a, b)});
  j["tensor_mor"] = Json::array();
  {
    std::vector<std::array<Id, 3>> entries;
    for (const auto& [key, fg] : p.mor_tensor_entries())
      entries.push_back({static_cast<Id>(key >> 32), static_cast<Id>(key & 0xffffffffu), fg});
    std::sort(entries.begin(), entries.end());
    for (const auto& e : entries) j["tensor_mor"].push_back({e[0], e[1], e[2]});
  }
  j["unit"] = p.unit;
  j["gamma"] = Json::array();
  for (Id a = 0; a < p.nob(); ++a)
    for (Id b = 0; b < p.nob(); ++b)
      if (p.gamma(a, b) != kNone) j["gamma"].push_back({a, b, p.gamma(a, b)});
  j["bound"] = p.bounded;
  j["generators"] = p.generator_objects;
  return j;
}

Json to_json(const gammaskel::BasedMap& f) {
  Json j;
  j["dom"] = f.dom;
  j["cod"] = f.cod;
  j["values"] = f.values;
  return j;
}

Json to_json(const gammacat::GammaCategory& x) {
  Json j;
  j["truncation"] = x.truncation;
  j["degrees"] = Json::array();
  for (const auto& d : x.degrees) j["degrees"].push_back(to_json(*d));
  j["actions"] = Json::array();
  for (const auto& [f, fun] : x.actions) {
    Json a;
    a["map"] = to_json(f);
    a["functor"] = to_json(fun);
    j["actions"].push_back(std::move(a));
  }
  return j;
}

Json to_json(const segalnerve::SegalBicycle& b) {
  Json j;
  j["n"] = b.n;
  j["psi"] = Json::array();
  for (segalnerve::Subset s = 0; s < (1u << b.n); ++s)
    j["psi"].push_back({{"subset", segalnerve::elements(s)}, {"ob", b.psi[s]}});
  j["sigma"] = Json::array();
  for (segalnerve::Subset s = 0; s < (1u << b.n); ++s)
    for (segalnerve::Subset t = 0; t < (1u << b.n); ++t) {
      if (s & t) continue;
      j["sigma"].push_back(
          {{"pair", {segalnerve::elements(s), segalnerve::elements(t)}}, {"mor", b.sigma_at(s, t)}});
    }
  j["u"] = b.u;
  return j;
}

namespace {

bool require(const Json& j, const char* field, const std::string& path, fincat::Report& issues) {
  if (!j.contains(field)) {
    issues.add("schema", path + "." + field + " missing");
    return false;
  }
  return true;
}

}  // namespace

fincat::CatPtr fincategory_from_json(const Json& j, fincat::Report& issues) {
  for (const char* f : {"objects", "morphisms", "identities", "compose"})
    if (!require(j, f, "$", issues)) return nullptr;
  fincat::FinCategory k;
  const size_t n_ob = j["objects"].size();
  const size_t n_mor = j["morphisms"].size();
  std::vector<Id> src(n_mor, kNone), tgt(n_mor, kNone);
  for (size_t i = 0; i < n_mor; ++i) {
    const auto& m = j["morphisms"][i];
    for (const char* f : {"id", "src", "tgt"})
      if (!require(m, f, "$.morphisms[" + std::to_string(i) + "]", issues)) return nullptr;
    const long id = m["id"].get<long>();
    if (id < 0 || id >= static_cast<long>(n_mor)) {
      issues.add("schema", "$.morphisms[" + std::to_string(i) + "].id out of range");
      return nullptr;
    }
    src[id] = m["src"].get<Id>();
    tgt[id] = m["tgt"].get<Id>();
    if (src[id] < 0 || src[id] >= static_cast<Id>(n_ob) || tgt[id] < 0 ||
        tgt[id] >= static_cast<Id>(n_ob)) {
      issues.add("schema", "$.morphisms[" + std::to_string(i) + "] endpoint out of range");
      return nullptr;
    }
  }
  std::vector<Id> idmor(n_ob, kNone);
  for (size_t o = 0; o < n_ob; ++o) {
    const std::string key = std::to_string(o);
    if (!j["identities"].contains(key)) {
      issues.add("schema", "$.identities." + key + " missing");
      return nullptr;
    }
    idmor[o] = j["identities"][key].get<Id>();
    if (idmor[o] < 0 || idmor[o] >= static_cast<Id>(n_mor) || src[idmor[o]] != static_cast<Id>(o) ||
        tgt[idmor[o]] != static_cast<Id>(o)) {
      issues.add("schema", "$.identities." + key + " is not an endomorphism of " + key);
      return nullptr;
    }
  }
  std::vector<Id> remap(n_mor, kNone);  // file id -> internal id
  for (size_t o = 0; o < n_ob; ++o) k.add_object();
  for (size_t o = 0; o < n_ob; ++o) remap[idmor[o]] = k.identity(static_cast<Id>(o));
  for (size_t m = 0; m < n_mor; ++m)
    if (remap[m] == kNone) remap[m] = k.add_morphism(src[m], tgt[m]);
  bool identity_layout = true;
  for (size_t m = 0; m < n_mor; ++m)
    if (remap[m] != static_cast<Id>(m)) identity_layout = false;
  if (!identity_layout)
    issues.add("schema", "$.morphisms: identity ids do not follow the canonical layout");
  for (size_t i = 0; i < j["compose"].size(); ++i) {
    const auto& e = j["compose"][i];
    if (!e.is_array() || e.size() != 3) {
      issues.add("schema", "$.compose[" + std::to_string(i) + "] is not a triple");
      return nullptr;
    }
    const long g = e[0].get<long>(), f = e[1].get<long>(), gf = e[2].get<long>();
    if (g < 0 || f < 0 || gf < 0 || g >= static_cast<long>(n_mor) ||
        f >= static_cast<long>(n_mor) || gf >= static_cast<long>(n_mor)) {
      issues.add("schema", "$.compose[" + std::to_string(i) + "] id out of range");
      return nullptr;
    }
    if (tgt[f] != src[g])
      issues.add("schema", "$.compose[" + std::to_string(i) + "] entry for non-composable pair");
    else
      k.set_compose(remap[g], remap[f], remap[gf]);
  }
  auto cat = fincat::make_cat(std::move(k));
  issues.merge(fincat::validate_category(*cat), "axioms");
  return cat;
}

permcat::PermPtr permcategory_from_json(const Json& j, fincat::Report& issues) {
  auto base = fincategory_from_json(j, issues);
  if (!base) return nullptr;
  for (const char* f : {"tensor_ob", "tensor_mor", "unit", "gamma"})
    if (!require(j, f, "$", issues)) return nullptr;
  permcat::PermCategory p(base);
  p.unit = j["unit"].get<Id>();
  for (size_t i = 0; i < j["tensor_ob"].size(); ++i) {
    const auto& e = j["tensor_ob"][i];
    p.set_ob_tensor(e[0].get<Id>(), e[1].get<Id>(), e[2].get<Id>());
  }
  for (size_t i = 0; i < j["tensor_mor"].size(); ++i) {
    const auto& e = j["tensor_mor"][i];
    p.set_mor_tensor(e[0].get<Id>(), e[1].get<Id>(), e[2].get<Id>());
  }
  for (size_t i = 0; i < j["gamma"].size(); ++i) {
    const auto& e = j["gamma"][i];
    p.set_gamma(e[0].get<Id>(), e[1].get<Id>(), e[2].get<Id>());
  }
  if (j.contains("bound")) p.bounded = j["bound"].get<bool>();
  if (j.contains("generators")) p.generator_objects = j["generators"].get<std::vector<Id>>();
  auto pp = std::make_shared<const permcat::PermCategory>(std::move(p));
  issues.merge(permcat::check_permutative(*pp), "axioms");
  return pp;
}

gammaskel::BasedMap basedmap_from_json(const Json& j, fincat::Report& issues) {
  for (const char* f : {"dom", "cod", "values"})
    if (!require(j, f, "$", issues)) return {};
  const int dom = j["dom"].get<int>(), cod = j["cod"].get<int>();
  auto values = j["values"].get<std::vector<int>>();
  if (static_cast<int>(values.size()) != dom) {
    issues.add("schema", "$.values length disagrees with dom");
    return {};
  }
  for (int v : values)
    if (v < 0 || v > cod) {
      issues.add("schema", "$.values entry out of range");
      return {};
    }
  return gammaskel::BasedMap(dom, cod, std::move(values));
}

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

fincat::Report io_roundtrip_file(const std::string& path) {
  fincat::Report r;
  std::ifstream in(path);
  if (!in) {
    r.add("io", "cannot open " + path);
    return r;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const std::exception& e) {
    r.add("parse", e.what());
    return r;
  }
  Json out;
  if (j.contains("tensor_ob")) {
    auto p = permcategory_from_json(j, r);
    if (!r.ok() || !p) return r;
    out = to_json(*p);
  } else if (j.contains("objects")) {
    auto c = fincategory_from_json(j, r);
    if (!r.ok() || !c) return r;
    out = to_json(*c);
  } else if (j.contains("truncation")) {
    if (!j.contains("degrees")) {
      r.add("schema", "$.degrees missing");
      return r;
    }
    out = j;
    for (size_t i = 0; i < j["degrees"].size(); ++i) {
      fincat::Report sub;
      auto c = fincategory_from_json(j["degrees"][i], sub);
      if (!sub.ok() || !c) {
        r.merge(sub, "degrees[" + std::to_string(i) + "]");
        return r;
      }
      out["degrees"][i] = to_json(*c);
    }
  } else {
    r.add("schema", "unrecognized document shape");
    return r;
  }
  if (dumps(out) != bytes) r.add("roundtrip", "serialization is not byte-stable");
  return r;
}

}  // namespace serialize
