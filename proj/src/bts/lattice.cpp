#include "bts/lattice.hpp"

#include <algorithm>
#include <string>

#include "bts/errors.hpp"

namespace bts::lattice {

namespace {

int floordiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int aniso_s0(int i) { return floordiv(i + 1, 2); }
int aniso_s1(int i) { return floordiv(i, 2); }

ApartmentLattice make_lattice(int n, int i, std::vector<int> coords) {
  if (n < 1) throw DomainError("lattice: n must be >= 1");
  if ((static_cast<long>(n) * i) % 2 != 0) throw DomainError("lattice: n*i must be even");
  int m = (n - 1) / 2;
  if (static_cast<int>(coords.size()) != 2 * m)
    throw DomainError("lattice: expected " + std::to_string(2 * m) + " coordinates, got " +
                      std::to_string(coords.size()));
  ApartmentLattice L{n, i, std::move(coords)};
  for (int j = 1; j <= m; ++j) {
    int s = L.r_neg(j) + L.r_pos(j);
    if (s != i && s != i + 1)
      throw DomainError("lattice: r_{-" + std::to_string(j) + "} + r_" + std::to_string(j) + " = " +
                        std::to_string(s) + " not in {" + std::to_string(i) + "," +
                        std::to_string(i + 1) + "}");
  }
  return L;
}

ApartmentLattice standard_lattice(int n, int theta) {
  int m = (n - 1) / 2;
  if (theta < 0 || theta > m) throw DomainError("standard_lattice: theta out of [0, m]");
  std::vector<int> coords(2 * m, 0);
  for (int j = theta + 1; j <= m; ++j) coords[m - 1 + j] = 1;
  return make_lattice(n, 0, std::move(coords));
}

int orbit_type(const ApartmentLattice& L) {
  int t = 1;
  for (int j = 1; j <= L.m(); ++j)
    if (L.r_neg(j) + L.r_pos(j) == L.level) t += 2;
  return t;
}

std::optional<ApartmentLattice> dual(const ApartmentLattice& L) {
  int m = L.m();
  int t = orbit_type(L);
  bool n_even = L.n % 2 == 0;
  if (!n_even && t != 2 * m + 1) return std::nullopt;
  std::vector<int> coords(2 * m);
  ApartmentLattice D;
  D.n = L.n;
  D.level = n_even ? -L.level - 1 : -L.level;
  for (int j = 1; j <= m; ++j) {
    coords[m - j] = -L.r_pos(j);
    coords[m - 1 + j] = -L.r_neg(j);
  }
  D.coords = std::move(coords);
  return make_lattice(D.n, D.level, D.coords);
}

namespace {

std::optional<ApartmentLattice> combine(const ApartmentLattice& a, const ApartmentLattice& b,
                                        bool take_max) {
  if (a.n != b.n) throw DomainError("lattice combine: different n");
  if (a.level != b.level) throw DomainError("lattice combine: different levels");
  std::vector<int> coords(a.coords.size());
  for (size_t k = 0; k < coords.size(); ++k)
    coords[k] = take_max ? std::max(a.coords[k], b.coords[k]) : std::min(a.coords[k], b.coords[k]);
  try {
    return make_lattice(a.n, a.level, std::move(coords));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<ApartmentLattice> intersect(const ApartmentLattice& a, const ApartmentLattice& b) {
  return combine(a, b, true);
}

std::optional<ApartmentLattice> lattice_sum(const ApartmentLattice& a, const ApartmentLattice& b) {
  return combine(a, b, false);
}

namespace {

// Containment of lattices at a common level: larger exponents everywhere
// means a smaller lattice.
bool lattice_leq(const ApartmentLattice& inner, const ApartmentLattice& outer) {
  for (size_t k = 0; k < inner.coords.size(); ++k)
    if (inner.coords[k] < outer.coords[k]) return false;
  return true;
}

}  // namespace

bool is_simplex(std::vector<ApartmentLattice> ls) {
  if (ls.empty()) return false;
  int n = ls[0].n, i = ls[0].level;
  for (const auto& L : ls)
    if (L.n != n || L.level != i) throw DomainError("is_simplex: mixed levels");
  std::sort(ls.begin(), ls.end(), [](const ApartmentLattice& a, const ApartmentLattice& b) {
    return a.coords < b.coords;
  });
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  int m = ls[0].m();
  if (static_cast<int>(ls.size()) > m + 1) return false;
  // Largest lattice last: sort by coordinate sum descending gives the chain
  // candidate Lambda_0 subset ... subset Lambda_s.
  std::sort(ls.begin(), ls.end(), [](const ApartmentLattice& a, const ApartmentLattice& b) {
    int sa = 0, sb = 0;
    for (int x : a.coords) sa += x;
    for (int x : b.coords) sb += x;
    return sa > sb;
  });
  for (size_t k = 0; k + 1 < ls.size(); ++k)
    if (!lattice_leq(ls[k], ls[k + 1])) return false;
  // Chain closes up iff p^{i+1} Lambda_s^dual sits strictly inside Lambda_0.
  // In coordinates: i + 1 - r_{-+j}(Lambda_s) >= r_{+-j}(Lambda_0), with the
  // anisotropic exponents always strictly deeper.
  const ApartmentLattice& first = ls.front();
  const ApartmentLattice& last = ls.back();
  for (int j = 1; j <= m; ++j) {
    if (i + 1 - last.r_pos(j) < first.r_neg(j)) return false;
    if (i + 1 - last.r_neg(j) < first.r_pos(j)) return false;
  }
  return true;
}

int parahoric_class(int n, int t) {
  int m = (n - 1) / 2;
  if (t < 1 || t > 2 * m + 1 || t % 2 == 0)
    throw DomainError("parahoric_class: t must be odd in [1, 2m+1]");
  int theta = (t - 1) / 2;
  if (n % 2 == 0) theta = std::min(theta, m - theta);
  return theta;
}

int parahoric_class_count(int n) {
  if (n < 1) throw DomainError("parahoric_class_count: n must be >= 1");
  int m = (n - 1) / 2;
  return n % 2 == 1 ? m + 1 : m / 2 + 1;
}

}  // namespace bts::lattice
