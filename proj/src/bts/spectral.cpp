#include "bts/spectral.hpp"

#include <algorithm>
#include <string>

#include "bts/counts.hpp"
#include "bts/errors.hpp"
#include "bts/fieldgeom.hpp"

namespace bts::spectral {

namespace {

void check_theta(int n, int theta) {
  int m = (n - 1) / 2;
  if (theta < 0 || theta > m) throw DomainError("spectral: theta out of [0, m]");
}

mpz_class binom(const mpz_class& n, unsigned long k) {
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  if (out < 0) out = 0;
  return out;
}

}  // namespace

mpz_class nu_theta(int n, int theta, const mpz_class& p) {
  check_theta(n, theta);
  int m = (n - 1) / 2;
  return counts::strata_above(n, theta, m).eval(p);
}

mpz_class k_mult_bruteforce(int n, int theta, int s, long p, uint64_t budget) {
  check_theta(n, theta);
  if (s < 1) throw DomainError("k_mult_bruteforce: s must be >= 1");
  int m = (n - 1) / 2;
  int d1 = n - 2 * theta - 1;
  int r1 = n - theta - m - 1;
  fieldgeom::HermitianSpace V{fieldgeom::FieldDescriptor::make(p), d1};
  auto family = fieldgeom::enumerate_N(r1, V, budget);
  size_t nu = family.size();
  if (static_cast<size_t>(s) > nu) return 0;
  mpz_class total = binom(mpz_class(static_cast<unsigned long>(nu)), static_cast<unsigned long>(s));
  if (total > budget)
    throw BudgetError("k_mult_bruteforce: " + total.get_str() + " subsets exceed budget " +
                      mpz_class(budget).get_str());

  mpz_class count = 0;
  std::vector<size_t> idx(s);
  // Combinations in lexicographic order over the canonical subspace order.
  for (int k = 0; k < s; ++k) idx[k] = k;
  while (true) {
    std::vector<fieldgeom::Vec> rows;
    for (int k = 0; k < s; ++k)
      for (const auto& row : family[idx[k]].basis) rows.push_back(row);
    if (fieldgeom::make_subspace(V, std::move(rows)).dim() == d1) ++count;
    int k = s - 1;
    while (k >= 0 && idx[k] == nu - static_cast<size_t>(s - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

mpz_class k_mult_closed(int n, int theta, int s, const mpz_class& p) {
  if (n != 3 && n != 4) throw DomainError("k_mult_closed: only n in {3,4}");
  check_theta(n, theta);
  if (s < 1) throw DomainError("k_mult_closed: s must be >= 1");
  if (theta == 1) return s == 1 ? 1 : 0;
  if (s == 1) return 0;
  mpz_class nu = nu_theta(n, theta, p);
  return binom(nu, static_cast<unsigned long>(s));
}

std::vector<Position> nonzero_locus(int n, const mpz_class& p, uint64_t budget) {
  if (n < 1) throw DomainError("nonzero_locus: n must be >= 1");
  int m = (n - 1) / 2;
  std::vector<Position> out;
  for (int b = 2 * (n - 1 - m); b <= 2 * (n - 1); ++b) {
    int r = b / 2 - m;
    int d = 2 * (b / 2) - (n - 1);
    mpz_class nu = counts::nu_eval(r, d, p);
    mpz_class width = nu;  // a ranges over [1 - nu, 0]
    if (width > budget)
      throw BudgetError("nonzero_locus: " + width.get_str() + " positions at b=" +
                        std::to_string(b) + " exceed budget");
    long w = width.get_si();
    for (long k = 0; k < w; ++k) out.emplace_back(static_cast<int>(-k), b);
  }
  return out;
}

namespace {

// k_{s,theta} provider for page assembly. In closed mode theta = m carries
// only s = 1 (since nu_m = 1), valid for every n; other theta require the
// n <= 4 binomial forms.
mpz_class k_for_page(int n, int theta, int s, long p, KMode mode, uint64_t budget) {
  int m = (n - 1) / 2;
  if (mode == KMode::bruteforce) return k_mult_bruteforce(n, theta, s, p, budget);
  if (theta == m) return s == 1 ? 1 : 0;
  return k_mult_closed(n, theta, s, mpz_class(p));
}

}  // namespace

SpectralPage e1_page(int n, long p, KMode mode, uint64_t budget) {
  if (n < 1) throw DomainError("e1_page: n must be >= 1");
  if (mode == KMode::closed && n > 4)
    throw UsageError("e1_page: closed mode requires n <= 4");
  int m = (n - 1) / 2;
  SpectralPage page;
  page.n = n;
  page.p = p;
  for (int theta = 0; theta <= m; ++theta) {
    mpz_class nu = nu_theta(n, theta, mpz_class(p));
    if (nu > budget)
      throw BudgetError("e1_page: nu_theta = " + nu.get_str() + " exceeds budget");
    long nu_l = nu.get_si();
    auto tube = stratum::tube_cohomology(n, theta);
    for (long s = 1; s <= nu_l; ++s) {
      mpz_class k = k_for_page(n, theta, static_cast<int>(s), p, mode, budget);
      if (k == 0) continue;
      for (const auto& [b, content] : tube.degrees) {
        Position pos{static_cast<int>(1 - s), b};
        auto& entry = page.entries[pos];
        entry.weight = content.second;
        for (const auto& lam : content.first)
          entry.terms.push_back(InducedRepTerm{theta, false, lam, k});
      }
    }
  }
  for (auto& [pos, rep] : page.entries) {
    std::sort(rep.terms.begin(), rep.terms.end(),
              [](const InducedRepTerm& a, const InducedRepTerm& b) {
                return std::tie(a.theta, a.lambda) < std::tie(b.theta, b.lambda);
              });
  }
  return page;
}

std::map<Position, VirtualInducedRep> e2_known_terms(int n) {
  if (n < 1) throw DomainError("e2_known_terms: n must be >= 1");
  int m = (n - 1) / 2;
  std::map<Position, VirtualInducedRep> out;
  int top = 2 * (n - 1);
  if (m >= 1) {
    int base = 2 * (n - 1 - m);
    out[{0, base}] =
        VirtualInducedRep{{InducedRepTerm{m, false, {2 * m + 1}, 1}},
                          stratum::FrobWeight{1, base}};
    out[{0, base + 1}] =
        VirtualInducedRep{{InducedRepTerm{m, false, {2 * m, 1}, 1}},
                          stratum::FrobWeight{-1, base + 1}};
  }
  out[{0, top}] = VirtualInducedRep{{InducedRepTerm{m, true, {}, 1}},
                                    stratum::FrobWeight{1, top}};
  return out;
}

std::map<int, DegreeReport> cohomology_report(int n, long p, KMode mode, uint64_t budget) {
  auto known = e2_known_terms(n);
  auto page = e1_page(n, p, mode, budget);
  std::map<int, DegreeReport> out;
  int m = (n - 1) / 2;
  for (int b = 0; b <= 2 * (n - 1); ++b) {
    DegreeReport rep;
    for (int bp = std::max(b, 2 * (n - 1 - m)); bp <= 2 * (n - 1); ++bp) {
      Position pos{b - bp, bp};
      if (auto it = known.find(pos); it != known.end()) {
        rep.known.push_back(PositionedRep{pos, it->second});
      } else if (auto it2 = page.entries.find(pos); it2 != page.entries.end()) {
        rep.bounded_by.push_back(PositionedRep{pos, it2->second});
      }
    }
    out[b] = std::move(rep);
  }
  return out;
}

std::map<Position, std::vector<InertialEntry>> inertial_report(const SpectralPage& page) {
  int n = page.n;
  int m = (n - 1) / 2;
  std::map<Position, std::vector<InertialEntry>> out;
  for (const auto& [pos, rep] : page.entries) {
    std::vector<InertialEntry> entries;
    for (const auto& term : rep.terms) {
      int f = partitions::inertial_class(term.lambda);
      if (f != ((pos.second % 2 + 2) % 2))
        throw DomainError("inertial_report: 2-core class disagrees with degree parity");
      auto [t, e] = partitions::cuspidal_support(term.lambda);
      bool sc = n <= 4 && term.theta == m && e == 0;
      entries.push_back(InertialEntry{term, f, sc});
    }
    out[pos] = std::move(entries);
  }
  return out;
}

}  // namespace bts::spectral
