#include "bts/jsonio.hpp"

#include "bts/errors.hpp"

namespace bts::jsonio {

json envelope(const std::string& command, json params, json result) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json weight_json(const stratum::FrobWeight& w) {
  return json{{"sign", w.sign}, {"exponent", w.exponent}};
}

json term_json(const spectral::InducedRepTerm& t) {
  json out;
  if (t.over_Jcirc) {
    out["parahoric"] = "J°";
    out["rep"] = "1";
  } else {
    out["parahoric"] = "J_" + std::to_string(t.theta);
    out["partition"] = t.lambda;
  }
  out["multiplicity"] = t.multiplicity.get_str();
  return out;
}

json entry_json(spectral::Position pos, const spectral::VirtualInducedRep& rep) {
  json out;
  out["a"] = pos.first;
  out["b"] = pos.second;
  out["weight"] = weight_json(rep.weight);
  json terms = json::array();
  for (const auto& t : rep.terms) terms.push_back(term_json(t));
  out["terms"] = std::move(terms);
  return out;
}

json scalar_json(const shimura::FrobScalar& s) {
  return json{{"sign", s.sign}, {"delta", s.delta_label}, {"exponent", s.exponent}};
}

json report_lines_json(const std::vector<shimura::ReportLine>& lines) {
  json out = json::array();
  for (const auto& l : lines) {
    out.push_back(json{{"label", l.label},
                       {"multiplicity", l.multiplicity.get_str()},
                       {"scalar", scalar_json(l.scalar)}});
  }
  return out;
}

namespace {

bool get_flag(const json& e, const char* key) {
  if (!e.contains(key)) return false;
  if (!e[key].is_boolean()) throw UsageError(std::string("roster: flag '") + key + "' must be boolean");
  return e[key].get<bool>();
}

}  // namespace

RosterDocument parse_roster(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw UsageError("roster: invalid JSON");
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_string())
    throw UsageError("roster: missing string field 'version'");
  if (doc["version"].get<std::string>() != kSchemaVersion)
    throw UsageError("roster: unsupported version '" + doc["version"].get<std::string>() + "'");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw UsageError("roster: missing integer field 'n'");
  if (!doc.contains("p")) throw UsageError("roster: missing field 'p'");
  RosterDocument out;
  out.n = doc["n"].get<int>();
  if (doc["p"].is_number_integer()) {
    out.p = doc["p"].get<long>();
  } else if (doc["p"].is_string()) {
    if (out.p.set_str(doc["p"].get<std::string>(), 10) != 0)
      throw UsageError("roster: 'p' is not a decimal integer");
  } else {
    throw UsageError("roster: 'p' must be an integer or decimal string");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw UsageError("roster: missing array field 'entries'");
  for (const auto& e : doc["entries"]) {
    if (!e.is_object()) throw UsageError("roster: entries must be objects");
    shimura::AutoRepDescriptor d;
    if (!e.contains("label") || !e["label"].is_string())
      throw UsageError("roster: entry missing string 'label'");
    d.label = e["label"].get<std::string>();
    d.unramified_char = get_flag(e, "unramified_char");
    d.j1_spherical = get_flag(e, "j1_spherical");
    d.dim_gt_1 = get_flag(e, "dim_gt_1");
    d.is_chi_tau1 = get_flag(e, "is_chi_tau1");
    if (e.contains("d")) {
      if (!e["d"].is_number_integer()) throw UsageError("roster: 'd' must be an integer");
      d.d = e["d"].get<long>();
    }
    if (e.contains("weight_w")) {
      if (!e["weight_w"].is_number_integer()) throw UsageError("roster: 'weight_w' must be an integer");
      d.weight_w = e["weight_w"].get<long>();
    }
    out.entries.push_back(std::move(d));
  }
  return out;
}

}  // namespace bts::jsonio
