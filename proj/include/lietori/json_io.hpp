// JSON serialization for construction parameters, invariant tuples, and
// verification reports.  Model files round-trip losslessly and carry a
// schema_version field that is checked on load.
#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lietori/invariants.hpp"
#include "lietori/lietorus.hpp"

namespace lietori {

using Json = nlohmann::ordered_json;

constexpr int kModelSchemaVersion = 1;

inline std::string family_token(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SU: return "su";
    case Family::SP: return "sp";
    case Family::O: return "o";
  }
  throw std::logic_error("family_token: unknown family");
}

inline Family family_from_token(const std::string& s) {
  if (s == "sl") return Family::SL;
  if (s == "su") return Family::SU;
  if (s == "sp") return Family::SP;
  if (s == "o") return Family::O;
  throw std::invalid_argument("unknown family '" + s + "' (expected sl, su, sp, o)");
}

inline Json params_to_json(const ConstructionParams& P) {
  Json j;
  j["family"] = family_token(P.family);
  j["r"] = P.r;
  Json quantum = Json::array();
  for (const auto& f : P.quantum) quantum.push_back(Json{{"M", f.M}, {"e", f.e}});
  j["quantum"] = quantum;
  j["k"] = P.k;
  j["p"] = P.p;
  j["q"] = P.q;
  j["m"] = P.m;
  Json delta = Json::array();
  for (const auto& d : P.delta) delta.push_back(d);
  j["delta"] = delta;
  return j;
}

inline ConstructionParams params_from_json(const Json& j) {
  ConstructionParams P;
  P.family = family_from_token(j.at("family").get<std::string>());
  P.r = j.at("r").get<int>();
  if (j.contains("quantum"))
    for (const auto& f : j.at("quantum"))
      P.quantum.push_back({f.at("M").get<long>(), f.at("e").get<long>()});
  P.k = j.value("k", 0);
  P.p = j.value("p", 0);
  P.q = j.value("q", 0);
  P.m = j.value("m", 0);
  if (j.contains("delta"))
    for (const auto& d : j.at("delta")) P.delta.push_back(d.get<Degree>());
  return P;
}

inline Json quotient_to_json(const QuotientInfo& q) {
  Json j;
  Json torsion = Json::array();
  for (const auto& t : q.torsion) torsion.push_back(t.get_si());
  j["torsion"] = torsion;
  j["free_rank"] = q.free_rank;
  return j;
}

inline Json tuple_to_json(const InvariantTuple& t) {
  Json j;
  j["type"] = t.type;
  j["nullity"] = t.nullity;
  j["crk"] = t.crk;
  j["rkv"] = t.rkv;
  j["quotient"] = quotient_to_json(t.quotient);
  return j;
}

inline Json verify_report_to_json(const VerifyReport& rep) {
  Json j;
  Json items = Json::array();
  for (const auto& it : rep.items) {
    Json e;
    e["axiom"] = it.axiom;
    e["pass"] = it.pass;
    e["witness"] = it.witness;
    items.push_back(std::move(e));
  }
  j["items"] = items;
  j["all_pass"] = rep.all_pass;
  return j;
}

inline Json model_file_json(const ConstructionParams& P) {
  Json j;
  j["schema_version"] = kModelSchemaVersion;
  j["params"] = params_to_json(P);
  return j;
}

inline void write_model_file(const std::string& path, const ConstructionParams& P) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << model_file_json(P).dump(2) << "\n";
}

inline ConstructionParams read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j = Json::parse(in);
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kModelSchemaVersion)
    throw std::runtime_error("'" + path + "': unsupported or missing schema_version");
  return params_from_json(j.at("params"));
}

}  // namespace lietori
