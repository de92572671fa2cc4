#pragma once
#include <json.hpp>
#include <string>

#include "bts/poly.hpp"
#include "bts/shimura.hpp"
#include "bts/spectral.hpp"
#include "bts/stratum.hpp"

namespace bts::jsonio {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "bt-strata/1";

json envelope(const std::string& command, json params, json result);
std::string dump(const json& doc);

json weight_json(const stratum::FrobWeight& w);
json term_json(const spectral::InducedRepTerm& t);
json entry_json(spectral::Position pos, const spectral::VirtualInducedRep& rep);
json scalar_json(const shimura::FrobScalar& s);
json report_lines_json(const std::vector<shimura::ReportLine>& lines);

// Roster document {version, n, p, entries}; throws UsageError on malformed
// documents and DomainError on failed validation.
struct RosterDocument {
  int n;
  mpz_class p;
  std::vector<shimura::AutoRepDescriptor> entries;
};
RosterDocument parse_roster(const std::string& text);

}  // namespace bts::jsonio
