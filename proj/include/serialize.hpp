#pragma once

#include <json.hpp>
#include <string>

#include "gammacat.hpp"
#include "permcat.hpp"
#include "segalnerve.hpp"

// JSON forms of the shared schemas, with stable field order for
// byte-reproducible reports.

namespace serialize {

using Json = nlohmann::ordered_json;

Json to_json(const fincat::FinCategory& c);
Json to_json(const fincat::Functor& f);
Json to_json(const permcat::PermCategory& p);
Json to_json(const gammaskel::BasedMap& f);
Json to_json(const gammacat::GammaCategory& x);
Json to_json(const segalnerve::SegalBicycle& b);

// Deserializers collect schema violations (with field paths) into the
// report and return empty results on failure.
fincat::CatPtr fincategory_from_json(const Json& j, fincat::Report& issues);
permcat::PermPtr permcategory_from_json(const Json& j, fincat::Report& issues);
gammaskel::BasedMap basedmap_from_json(const Json& j, fincat::Report& issues);

std::string dumps(const Json& j);

// deserialize -> validate -> serialize must reproduce the bytes
fincat::Report io_roundtrip_file(const std::string& path);

}  // namespace serialize
