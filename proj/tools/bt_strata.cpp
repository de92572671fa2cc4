#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "btstrata.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) throw CLI::ValidationError("expected a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

std::string scalar_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_value(std::ostream& os, const json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_object())) {
        os << pad << key << ":\n";
        render_value(os, val, indent + 2);
      } else if (val.is_array()) {
        os << pad << key << ": " << val.dump() << "\n";
      } else {
        os << pad << key << ": " << scalar_to_string(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      os << pad << "-\n";
      render_value(os, item, indent + 2);
    }
  } else {
    os << pad << scalar_to_string(v) << "\n";
  }
}

// The table view is a pure function of the emitted JSON document.
std::string render_table(const json& doc) {
  std::ostringstream os;
  os << "command: " << doc["command"].get<std::string>() << "\n";
  os << "schema: " << doc["schema_version"].get<std::string>() << "\n";
  os << "params:\n";
  render_value(os, doc["params"], 2);
  os << "result:\n";
  render_value(os, doc["result"], 2);
  return os.str();
}

struct Output {
  bool as_json = false;
  std::string out_file;

  int emit(const std::string& envelope) const {
    std::string text = as_json ? envelope : render_table(json::parse(envelope));
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_file);
      if (!f) {
        std::cerr << "error: cannot open output file '" << out_file << "'\n";
        return kExitUsage;
      }
      f << text;
    }
    return 0;
  }
};

struct Ctx {
  bts_ctx* ptr;
  Ctx() : ptr(bts_ctx_new()) {}
  ~Ctx() { bts_ctx_free(ptr); }
};

int finish(bts_ctx* ctx, int code, char* payload, const Output& out) {
  if (code != BTS_OK) {
    std::cerr << "error: " << bts_last_error(ctx) << "\n";
    return code;
  }
  std::string envelope(payload);
  bts_free_string(payload);
  return out.emit(envelope);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bt-strata: exact counts, lattices, and cohomology tables"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "emit the JSON envelope instead of a table");
  app.add_option("--out", out.out_file, "write output to FILE");

  Ctx ctx;
  int rc = 0;
  char* payload = nullptr;

  // nu r d [--at p]
  int nu_r = 0, nu_d = 0;
  std::string at_p;
  auto* nu = app.add_subcommand("nu", "nu(r,d): subspaces containing their orthogonal");
  nu->add_option("r", nu_r)->required();
  nu->add_option("d", nu_d)->required();
  nu->add_option("--at", at_p, "evaluate at the prime p");
  nu->callback([&] {
    rc = bts_nu(ctx.ptr, nu_r, nu_d, at_p.empty() ? nullptr : at_p.c_str(), &payload);
  });

  int ord_d = 0;
  auto* order = app.add_subcommand("order", "order of the finite unitary group U_d");
  order->add_option("d", ord_d)->required();
  order->callback([&] { rc = bts_order(ctx.ptr, ord_d, &payload); });

  int st_n = 0, st_theta = 0, st_dim = 0;
  bool st_below = false, st_above = false;
  auto* strata = app.add_subcommand("strata", "strata counts below or above a stratum");
  strata->add_option("--n", st_n)->required();
  strata->add_option("--theta", st_theta)->required();
  strata->add_option("--dim", st_dim)->required();
  strata->add_flag("--below", st_below);
  strata->add_flag("--above", st_above);
  strata->callback([&] {
    if (st_below == st_above) throw CLI::ValidationError("pass exactly one of --below/--above");
    rc = bts_strata(ctx.ptr, st_n, st_theta, st_above ? 1 : 0, st_dim, &payload);
  });

  auto* lattice = app.add_subcommand("lattice", "apartment vertex lattices");
  lattice->require_subcommand(1);
  int la_n = 0, la_i = 0;
  std::string la_coords, la_coords2;
  auto add_lattice_opts = [&](CLI::App* sub, bool second) {
    sub->add_option("--n", la_n)->required();
    sub->add_option("--i", la_i, "level")->required();
    sub->add_option("--coords", la_coords, "r_{-m},...,r_{-1},r_1,...,r_m")->required();
    if (second) sub->add_option("--coords2", la_coords2)->required();
  };
  auto* lcheck = lattice->add_subcommand("check", "validate membership in L_i");
  add_lattice_opts(lcheck, false);
  lcheck->callback([&] {
    auto cs = parse_int_list(la_coords);
    rc = bts_lattice_check(ctx.ptr, la_n, la_i, cs.data(), (int)cs.size(), &payload);
  });
  auto* ltype = lattice->add_subcommand("type", "orbit type t(Lambda)");
  add_lattice_opts(ltype, false);
  ltype->callback([&] {
    auto cs = parse_int_list(la_coords);
    rc = bts_lattice_type(ctx.ptr, la_n, la_i, cs.data(), (int)cs.size(), &payload);
  });
  auto* ldual = lattice->add_subcommand("dual", "dual vertex lattice, when in the family");
  add_lattice_opts(ldual, false);
  ldual->callback([&] {
    auto cs = parse_int_list(la_coords);
    rc = bts_lattice_dual(ctx.ptr, la_n, la_i, cs.data(), (int)cs.size(), &payload);
  });
  auto* lint = lattice->add_subcommand("intersect", "intersection and sum of two lattices");
  add_lattice_opts(lint, true);
  lint->callback([&] {
    auto ca = parse_int_list(la_coords);
    auto cb = parse_int_list(la_coords2);
    rc = bts_lattice_intersect(ctx.ptr, la_n, la_i, ca.data(), (int)ca.size(), cb.data(),
                               (int)cb.size(), &payload);
  });

  auto* partition = app.add_subcommand("partition", "Young diagram combinatorics");
  partition->require_subcommand(1);
  std::string parts;
  auto add_parts = [&](CLI::App* sub) {
    sub->add_option("parts", parts, "comma-separated parts, e.g. 3,3,2,2,1")->required();
  };
  auto* phooks = partition->add_subcommand("hooks", "hook lengths and a(lambda)");
  add_parts(phooks);
  phooks->callback([&] {
    auto lam = parse_int_list(parts);
    rc = bts_partition_hooks(ctx.ptr, lam.data(), (int)lam.size(), &payload);
  });
  auto* pdeg = partition->add_subcommand("degree", "degree polynomial of rho_lambda");
  add_parts(pdeg);
  pdeg->callback([&] {
    auto lam = parse_int_list(parts);
    rc = bts_partition_degree(ctx.ptr, lam.data(), (int)lam.size(), &payload);
  });
  auto* pcore = partition->add_subcommand("two-core", "2-core staircase");
  add_parts(pcore);
  pcore->callback([&] {
    auto lam = parse_int_list(parts);
    rc = bts_partition_two_core(ctx.ptr, lam.data(), (int)lam.size(), &payload);
  });
  auto* pclass = partition->add_subcommand("class", "cuspidal support and inertial class");
  add_parts(pclass);
  pclass->callback([&] {
    auto lam = parse_int_list(parts);
    rc = bts_partition_class(ctx.ptr, lam.data(), (int)lam.size(), &payload);
  });

  int sc_theta = 0;
  auto* stratum = app.add_subcommand("stratum", "cohomology table of the closed stratum");
  stratum->add_option("--theta", sc_theta)->required();
  stratum->add_option("--at", at_p, "evaluate Betti numbers at the prime p");
  stratum->callback([&] {
    rc = bts_stratum(ctx.ptr, sc_theta, at_p.empty() ? nullptr : at_p.c_str(), &payload);
  });

  int tu_n = 0, tu_theta = 0;
  auto* tube = app.add_subcommand("tube", "cohomology table of the analytical tube");
  tube->add_option("--n", tu_n)->required();
  tube->add_option("--theta", tu_theta)->required();
  tube->callback([&] { rc = bts_tube(ctx.ptr, tu_n, tu_theta, &payload); });

  int km_n = 0, km_theta = 0, km_s = 0;
  std::string km_p;
  bool km_closed = false;
  auto* kmult = app.add_subcommand("kmult", "multiplicity k_{s,theta}");
  kmult->add_option("--n", km_n)->required();
  kmult->add_option("--theta", km_theta)->required();
  kmult->add_option("--s", km_s)->required();
  kmult->add_option("--p", km_p)->required();
  kmult->add_flag("--closed", km_closed, "use the n<=4 closed forms");
  kmult->callback([&] {
    rc = bts_kmult(ctx.ptr, km_n, km_theta, km_s, km_p.c_str(), km_closed ? 1 : 0, &payload);
  });

  int e1_n = 0;
  std::string e1_p, e1_mode = "closed";
  auto* e1 = app.add_subcommand("e1", "first page of the Cech spectral sequence");
  e1->add_option("--n", e1_n)->required();
  e1->add_option("--p", e1_p)->required();
  e1->add_option("--mode", e1_mode)->check(CLI::IsMember({"closed", "bruteforce"}));
  e1->callback([&] { rc = bts_e1(ctx.ptr, e1_n, e1_p.c_str(), e1_mode.c_str(), &payload); });

  int e2_n = 0;
  auto* e2 = app.add_subcommand("e2-known", "the exactly-known second page terms");
  e2->add_option("--n", e2_n)->required();
  e2->callback([&] { rc = bts_e2_known(ctx.ptr, e2_n, &payload); });

  int rp_n = 0;
  std::string rp_p;
  auto* report = app.add_subcommand("report", "per-degree known terms and upper bounds");
  report->add_option("--n", rp_n)->required();
  report->add_option("--p", rp_p)->required();
  report->callback([&] { rc = bts_report(ctx.ptr, rp_n, rp_p.c_str(), &payload); });

  int ba_n = 0;
  std::string ba_p, ba_roster;
  auto* basic = app.add_subcommand("basic", "basic-stratum cohomology from a roster file");
  basic->add_option("--n", ba_n)->required()->check(CLI::IsMember({3, 4}));
  basic->add_option("--p", ba_p)->required();
  basic->add_option("--roster", ba_roster, "roster JSON file")->required();
  basic->callback([&] {
    std::ifstream f(ba_roster);
    if (!f) throw CLI::ValidationError("cannot open roster file '" + ba_roster + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    json doc = json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object()) {
      if (doc.contains("n") && doc["n"].is_number_integer() && doc["n"].get<int>() != ba_n)
        throw CLI::ValidationError("--n does not match the roster document");
      if (doc.contains("p") && doc["p"].dump() != ba_p && scalar_to_string(doc["p"]) != ba_p)
        throw CLI::ValidationError("--p does not match the roster document");
    }
    rc = bts_basic(ctx.ptr, text.c_str(), &payload);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  return finish(ctx.ptr, rc, payload, out);
}
