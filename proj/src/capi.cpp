#include "btstrata.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "bts/counts.hpp"
#include "bts/errors.hpp"
#include "bts/fieldgeom.hpp"
#include "bts/jsonio.hpp"
#include "bts/lattice.hpp"
#include "bts/partitions.hpp"
#include "bts/poly.hpp"
#include "bts/shimura.hpp"
#include "bts/spectral.hpp"
#include "bts/stratum.hpp"

using bts::jsonio::json;

struct bts_ctx {
  std::string last_error;
  uint64_t budget = 0;
};

namespace {

uint64_t subspace_budget(const bts_ctx* ctx) {
  return ctx->budget ? ctx->budget : bts::fieldgeom::kDefaultSubspaceBudget;
}

uint64_t subset_budget(const bts_ctx* ctx) {
  return ctx->budget ? ctx->budget : bts::spectral::kDefaultSubsetBudget;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int run(bts_ctx* ctx, char** out_json, Fn&& fn) {
  if (!ctx) return BTS_ERR_USAGE;
  ctx->last_error.clear();
  if (!out_json) {
    ctx->last_error = "out_json must not be null";
    return BTS_ERR_USAGE;
  }
  *out_json = nullptr;
  try {
    json doc = fn();
    *out_json = dup_string(bts::jsonio::dump(doc));
    return BTS_OK;
  } catch (const bts::UsageError& e) {
    ctx->last_error = e.what();
    return BTS_ERR_USAGE;
  } catch (const bts::BudgetError& e) {
    ctx->last_error = e.what();
    return BTS_ERR_BUDGET;
  } catch (const bts::DomainError& e) {
    ctx->last_error = e.what();
    return BTS_ERR_DOMAIN;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return BTS_ERR_DOMAIN;
  }
}

mpz_class parse_mpz(const char* s, const char* what) {
  if (!s || !*s) throw bts::UsageError(std::string(what) + ": missing value");
  mpz_class out;
  if (out.set_str(s, 10) != 0)
    throw bts::UsageError(std::string(what) + ": '" + s + "' is not a decimal integer");
  return out;
}

long parse_small_prime(const char* s, const char* what) {
  mpz_class p = parse_mpz(s, what);
  if (!p.fits_slong_p()) throw bts::DomainError(std::string(what) + ": p too large");
  return p.get_si();
}

std::vector<int> to_vec(const int* xs, int n, const char* what) {
  if (n < 0 || (n > 0 && !xs)) throw bts::UsageError(std::string(what) + ": bad array");
  return std::vector<int>(xs, xs + n);
}

json lattice_json(const bts::lattice::ApartmentLattice& L) {
  json out;
  out["n"] = L.n;
  out["level"] = L.level;
  out["coords"] = L.coords;
  out["s0"] = bts::lattice::aniso_s0(L.level);
  if (L.n % 2 == 0) out["s1"] = bts::lattice::aniso_s1(L.level);
  out["orbit_type"] = bts::lattice::orbit_type(L);
  return out;
}

json graded_table_json(const bts::stratum::GradedRepTable& tab) {
  json degrees = json::array();
  for (const auto& [deg, content] : tab.degrees) {
    json entry;
    entry["degree"] = deg;
    entry["reps"] = content.first;
    entry["weight"] = bts::jsonio::weight_json(content.second);
    degrees.push_back(std::move(entry));
  }
  return degrees;
}

json page_entries_json(const bts::spectral::SpectralPage& page) {
  auto inertial = bts::spectral::inertial_report(page);
  // Order by b ascending, then a descending (column 0 first).
  std::vector<bts::spectral::Position> order;
  for (const auto& [pos, rep] : page.entries) order.push_back(pos);
  std::sort(order.begin(), order.end(), [](auto x, auto y) {
    return std::pair(x.second, -x.first) < std::pair(y.second, -y.first);
  });
  json entries = json::array();
  for (const auto& pos : order) {
    json e = bts::jsonio::entry_json(pos, page.entries.at(pos));
    const auto& info = inertial.at(pos);
    for (size_t i = 0; i < info.size(); ++i) {
      e["terms"][i]["inertial_class"] = info[i].f;
      e["terms"][i]["supercuspidal"] = info[i].supercuspidal;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

bts::spectral::KMode parse_mode(const char* mode) {
  std::string m = mode ? mode : "closed";
  if (m == "closed") return bts::spectral::KMode::closed;
  if (m == "bruteforce") return bts::spectral::KMode::bruteforce;
  throw bts::UsageError("mode must be 'closed' or 'bruteforce'");
}

}  // namespace

extern "C" {

bts_ctx* bts_ctx_new(void) {
  auto* ctx = new bts_ctx;
  if (const char* env = std::getenv("BT_STRATA_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) ctx->budget = v;
  }
  return ctx;
}

void bts_ctx_free(bts_ctx* ctx) { delete ctx; }

void bts_ctx_set_budget(bts_ctx* ctx, uint64_t budget) {
  if (ctx) ctx->budget = budget;
}

const char* bts_last_error(const bts_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void bts_free_string(char* s) { std::free(s); }

const char* bts_schema_version(void) { return bts::jsonio::kSchemaVersion; }

int bts_nu(bts_ctx* ctx, int r, int d, const char* p, char** out_json) {
  return run(ctx, out_json, [&] {
    bts::IntPoly poly = bts::counts::nu_symbolic(r, d);
    json params{{"r", r}, {"d", d}};
    params["at"] = p ? json(std::string(p)) : json(nullptr);
    json result{{"poly", poly.render("p")}};
    if (p) result["value"] = poly.eval(parse_mpz(p, "nu")).get_str();
    return bts::jsonio::envelope("nu", params, result);
  });
}

int bts_order(bts_ctx* ctx, int d, char** out_json) {
  return run(ctx, out_json, [&] {
    return bts::jsonio::envelope("order", json{{"d", d}},
                                 json{{"poly", bts::counts::unitary_order(d).render("p")}});
  });
}

int bts_strata(bts_ctx* ctx, int n, int theta, int above, int dim, char** out_json) {
  return run(ctx, out_json, [&] {
    int m = (n - 1) / 2;
    if (theta < 0 || theta > m) throw bts::DomainError("strata: theta out of [0, m]");
    bts::IntPoly poly = above ? bts::counts::strata_above(n, theta, dim)
                              : bts::counts::strata_below(theta, dim);
    json params{{"n", n}, {"theta", theta}, {"direction", above ? "above" : "below"}, {"dim", dim}};
    return bts::jsonio::envelope("strata", params, json{{"poly", poly.render("p")}});
  });
}

int bts_lattice_check(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                      char** out_json) {
  return run(ctx, out_json, [&] {
    auto cs = to_vec(coords, ncoords, "lattice");
    json params{{"n", n}, {"level", level}, {"coords", cs}};
    json result;
    try {
      auto L = bts::lattice::make_lattice(n, level, cs);
      result["valid"] = true;
      result["lattice"] = lattice_json(L);
    } catch (const bts::DomainError& e) {
      result["valid"] = false;
      result["reason"] = e.what();
    }
    return bts::jsonio::envelope("lattice check", params, result);
  });
}

int bts_lattice_type(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                     char** out_json) {
  return run(ctx, out_json, [&] {
    auto cs = to_vec(coords, ncoords, "lattice");
    auto L = bts::lattice::make_lattice(n, level, cs);
    int t = bts::lattice::orbit_type(L);
    json params{{"n", n}, {"level", level}, {"coords", cs}};
    json result{{"orbit_type", t}, {"parahoric_class", bts::lattice::parahoric_class(n, t)}};
    return bts::jsonio::envelope("lattice type", params, result);
  });
}

int bts_lattice_dual(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                     char** out_json) {
  return run(ctx, out_json, [&] {
    auto cs = to_vec(coords, ncoords, "lattice");
    auto L = bts::lattice::make_lattice(n, level, cs);
    auto D = bts::lattice::dual(L);
    json params{{"n", n}, {"level", level}, {"coords", cs}};
    json result;
    result["exists"] = D.has_value();
    result["dual"] = D ? lattice_json(*D) : json(nullptr);
    return bts::jsonio::envelope("lattice dual", params, result);
  });
}

int bts_lattice_intersect(bts_ctx* ctx, int n, int level, const int* coords_a, int na,
                          const int* coords_b, int nb, char** out_json) {
  return run(ctx, out_json, [&] {
    auto ca = to_vec(coords_a, na, "lattice");
    auto cb = to_vec(coords_b, nb, "lattice");
    auto A = bts::lattice::make_lattice(n, level, ca);
    auto B = bts::lattice::make_lattice(n, level, cb);
    auto I = bts::lattice::intersect(A, B);
    auto S = bts::lattice::lattice_sum(A, B);
    json params{{"n", n}, {"level", level}, {"coords", ca}, {"coords2", cb}};
    json result;
    result["intersection"] = I ? lattice_json(*I) : json(nullptr);
    result["sum"] = S ? lattice_json(*S) : json(nullptr);
    return bts::jsonio::envelope("lattice intersect", params, result);
  });
}

int bts_partition_hooks(bts_ctx* ctx, const int* parts, int nparts, char** out_json) {
  return run(ctx, out_json, [&] {
    auto lam = to_vec(parts, nparts, "partition");
    json result{{"hooks", bts::partitions::hook_lengths(lam)},
                {"a_stat", bts::partitions::a_stat(lam)}};
    return bts::jsonio::envelope("partition hooks", json{{"partition", lam}}, result);
  });
}

int bts_partition_degree(bts_ctx* ctx, const int* parts, int nparts, char** out_json) {
  return run(ctx, out_json, [&] {
    auto lam = to_vec(parts, nparts, "partition");
    json result{{"poly", bts::partitions::degree(lam).render("q")}};
    return bts::jsonio::envelope("partition degree", json{{"partition", lam}}, result);
  });
}

int bts_partition_two_core(bts_ctx* ctx, const int* parts, int nparts, char** out_json) {
  return run(ctx, out_json, [&] {
    auto lam = to_vec(parts, nparts, "partition");
    auto core = bts::partitions::two_core(lam);
    json result{{"core", core}, {"t", static_cast<int>(core.size())}};
    return bts::jsonio::envelope("partition two-core", json{{"partition", lam}}, result);
  });
}

int bts_partition_class(bts_ctx* ctx, const int* parts, int nparts, char** out_json) {
  return run(ctx, out_json, [&] {
    auto lam = to_vec(parts, nparts, "partition");
    auto [t, e] = bts::partitions::cuspidal_support(lam);
    json result{{"t", t}, {"e", e}, {"f", bts::partitions::inertial_class(lam)}};
    return bts::jsonio::envelope("partition class", json{{"partition", lam}}, result);
  });
}

int bts_stratum(bts_ctx* ctx, int theta, const char* p, char** out_json) {
  return run(ctx, out_json, [&] {
    auto betti = bts::stratum::betti(theta);
    auto tab = bts::stratum::stratum_cohomology(theta);
    json params{{"theta", theta}};
    params["at"] = p ? json(std::string(p)) : json(nullptr);
    json degrees = graded_table_json(tab);
    for (auto& entry : degrees) {
      int deg = entry["degree"].get<int>();
      entry["betti"] = betti[deg].render("q");
      if (p) entry["betti_value"] = betti[deg].eval(parse_mpz(p, "stratum")).get_str();
    }
    return bts::jsonio::envelope("stratum", params, json{{"degrees", degrees}});
  });
}

int bts_tube(bts_ctx* ctx, int n, int theta, char** out_json) {
  return run(ctx, out_json, [&] {
    json params{{"n", n}, {"theta", theta}};
    return bts::jsonio::envelope(
        "tube", params, json{{"degrees", graded_table_json(bts::stratum::tube_cohomology(n, theta))}});
  });
}

int bts_kmult(bts_ctx* ctx, int n, int theta, int s, const char* p, int closed_form,
              char** out_json) {
  return run(ctx, out_json, [&] {
    mpz_class k;
    if (closed_form) {
      k = bts::spectral::k_mult_closed(n, theta, s, parse_mpz(p, "kmult"));
    } else {
      k = bts::spectral::k_mult_bruteforce(n, theta, s, parse_small_prime(p, "kmult"),
                                           subset_budget(ctx));
    }
    json params{{"n", n},
                {"theta", theta},
                {"s", s},
                {"p", std::string(p ? p : "")},
                {"mode", closed_form ? "closed" : "bruteforce"}};
    return bts::jsonio::envelope("kmult", params, json{{"k", k.get_str()}});
  });
}

int bts_e1(bts_ctx* ctx, int n, const char* p, const char* mode, char** out_json) {
  return run(ctx, out_json, [&] {
    auto km = parse_mode(mode);
    long pl = parse_small_prime(p, "e1");
    auto page = bts::spectral::e1_page(n, pl, km, subset_budget(ctx));
    json params{{"n", n},
                {"p", std::string(p)},
                {"mode", km == bts::spectral::KMode::closed ? "closed" : "bruteforce"}};
    return bts::jsonio::envelope("e1", params, json{{"entries", page_entries_json(page)}});
  });
}

int bts_e2_known(bts_ctx* ctx, int n, char** out_json) {
  return run(ctx, out_json, [&] {
    json entries = json::array();
    for (const auto& [pos, rep] : bts::spectral::e2_known_terms(n))
      entries.push_back(bts::jsonio::entry_json(pos, rep));
    return bts::jsonio::envelope("e2-known", json{{"n", n}}, json{{"entries", entries}});
  });
}

int bts_report(bts_ctx* ctx, int n, const char* p, char** out_json) {
  return run(ctx, out_json, [&] {
    long pl = parse_small_prime(p, "report");
    auto mode = n <= 4 ? bts::spectral::KMode::closed : bts::spectral::KMode::bruteforce;
    auto rep = bts::spectral::cohomology_report(n, pl, mode, subset_budget(ctx));
    json degrees = json::array();
    for (const auto& [b, dr] : rep) {
      json entry;
      entry["b"] = b;
      json known = json::array();
      for (const auto& pr : dr.known) known.push_back(bts::jsonio::entry_json(pr.pos, pr.rep));
      json bounded = json::array();
      for (const auto& pr : dr.bounded_by)
        bounded.push_back(bts::jsonio::entry_json(pr.pos, pr.rep));
      entry["known"] = std::move(known);
      entry["bounded_by"] = std::move(bounded);
      degrees.push_back(std::move(entry));
    }
    json params{{"n", n}, {"p", std::string(p)}};
    return bts::jsonio::envelope("report", params, json{{"degrees", degrees}});
  });
}

int bts_basic(bts_ctx* ctx, const char* roster_json, char** out_json) {
  return run(ctx, out_json, [&] {
    if (!roster_json) throw bts::UsageError("basic: missing roster document");
    auto roster = bts::jsonio::parse_roster(roster_json);
    auto rep = bts::shimura::basic_stratum_cohomology(roster.n, roster.p, roster.entries);
    json params{{"n", roster.n}, {"p", roster.p.get_str()}};
    json result;
    result["n"] = rep.n;
    result["p"] = rep.p.get_str();
    result["nu"] = rep.nu.get_str();
    result["H0"] = bts::jsonio::report_lines_json(rep.h0);
    result["H1_subspace"] = bts::jsonio::report_lines_json(rep.h1_subspace);
    result["H1_quotient"] = bts::jsonio::report_lines_json(rep.h1_quotient);
    result["H2"] = bts::jsonio::report_lines_json(rep.h2);
    return bts::jsonio::envelope("basic", params, result);
  });
}

}  // extern "C"
