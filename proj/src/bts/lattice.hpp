#pragma once
#include <optional>
#include <vector>

namespace bts::lattice {

// Vertex lattice Lambda(r_{-m},...,r_{-1},r_1,...,r_m) at level i in the
// standard apartment; m = floor((n-1)/2). The anisotropic exponents are
// derived from the level, never stored.
struct ApartmentLattice {
  int n = 1;
  int level = 0;
  std::vector<int> coords;  // r_{-m},...,r_{-1},r_1,...,r_m

  int m() const { return (n - 1) / 2; }
  int r_neg(int j) const { return coords[m() - j]; }       // r_{-j}, 1 <= j <= m
  int r_pos(int j) const { return coords[m() - 1 + j]; }   // r_j
  bool operator==(const ApartmentLattice&) const = default;
};

ApartmentLattice make_lattice(int n, int i, std::vector<int> coords);

// The standard lattice Lambda_theta at level 0: zeros then ones.
ApartmentLattice standard_lattice(int n, int theta);

// Anisotropic exponents s_0 = floor((i+1)/2) and, for even n, s_1 = floor(i/2).
int aniso_s0(int i);
int aniso_s1(int i);

int orbit_type(const ApartmentLattice& L);

// Dual vertex lattice, when it stays in the lattice family: always for even
// n (level -i-1, type n-t), for odd n only at maximal type (level -i).
std::optional<ApartmentLattice> dual(const ApartmentLattice& L);

// Coordinate-wise max / min; nullopt when the result leaves the level set.
std::optional<ApartmentLattice> intersect(const ApartmentLattice& a, const ApartmentLattice& b);
std::optional<ApartmentLattice> lattice_sum(const ApartmentLattice& a, const ApartmentLattice& b);

// True when the set forms a simplex: a strict inclusion chain
// p^{i+1} L_s^dual < L_0 < ... < L_s with 0 <= s <= m.
bool is_simplex(std::vector<ApartmentLattice> ls);

// Conjugacy class of the fixator J_Lambda among the J_theta.
int parahoric_class(int n, int t);
int parahoric_class_count(int n);

}  // namespace bts::lattice
