#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace bts::fieldgeom {

inline constexpr uint64_t kDefaultSubspaceBudget = 10'000'000;

// F_{p^2} = F_p[x]/(x^2 - c) with c the smallest quadratic non-residue.
struct FieldDescriptor {
  long p = 0;
  long c = 0;
  static FieldDescriptor make(long p);
};

// a0 + a1*x with 0 <= a0, a1 < p.
struct Fq2 {
  long a0 = 0;
  long a1 = 0;
  bool operator==(const Fq2&) const = default;
  bool is_zero() const { return a0 == 0 && a1 == 0; }
};

Fq2 add(const FieldDescriptor& F, Fq2 a, Fq2 b);
Fq2 sub(const FieldDescriptor& F, Fq2 a, Fq2 b);
Fq2 mul(const FieldDescriptor& F, Fq2 a, Fq2 b);
Fq2 neg(const FieldDescriptor& F, Fq2 a);
Fq2 inv(const FieldDescriptor& F, Fq2 a);
Fq2 conj(const FieldDescriptor& F, Fq2 a);

// Index in [0, p^2) used for canonical ordering and enumeration.
long fq2_index(const FieldDescriptor& F, Fq2 a);
Fq2 fq2_from_index(const FieldDescriptor& F, long idx);

using Vec = std::vector<Fq2>;

// F_{p^2}^d carrying the antidiagonal hermitian form A_d.
struct HermitianSpace {
  FieldDescriptor field;
  int d = 0;
};

// (u, v) = sum_i u_i * conj(v_{d+1-i}); linear in u, semilinear in v.
Fq2 pair(const Vec& u, const Vec& v, const HermitianSpace& S);

// Subspace held as canonical reduced-row-echelon basis rows.
struct HermitianSubspace {
  HermitianSpace ambient;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const HermitianSubspace& o) const { return basis == o.basis; }
};

// Canonicalize arbitrary spanning rows into RREF, dropping zero rows.
HermitianSubspace make_subspace(const HermitianSpace& S, std::vector<Vec> rows);

HermitianSubspace orthogonal(const HermitianSubspace& U);

// True when every basis vector of inner lies in the row space of outer.
bool contains(const HermitianSubspace& outer, const HermitianSubspace& inner);

// U^perp contained in U.
bool in_family_N(const HermitianSubspace& U);

// Visit all r-dimensional subspaces of S in canonical order (pivot-column
// pattern lex order, then free entries). Throws BudgetError if the
// Grassmannian exceeds the budget. Return false from the callback to stop.
void for_each_subspace(int r, const HermitianSpace& S, uint64_t budget,
                       const std::function<bool(const HermitianSubspace&)>& fn);

std::vector<HermitianSubspace> enumerate_N(int r, const HermitianSpace& S,
                                           uint64_t budget = kDefaultSubspaceBudget);
mpz_class count_N(int r, const HermitianSpace& S, uint64_t budget = kDefaultSubspaceBudget);

// Order of the unitary group of A_d over F_{p^2} by matrix scan; d <= 2 only.
mpz_class unitary_order_bruteforce(int d, const FieldDescriptor& F);

}  // namespace bts::fieldgeom
