#include "bts/fieldgeom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bts/errors.hpp"

namespace bts::fieldgeom {

namespace {

long mod_pow(long base, long exp, long mod) {
  long acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

long inv_mod(long a, long p) { return mod_pow(a, p - 2, p); }

// Gaussian binomial [d choose r]_q, the number of r-dim subspaces.
mpz_class gaussian_binomial(int d, int r, const mpz_class& q) {
  mpz_class num = 1, den = 1;
  for (int j = 0; j < r; ++j) {
    mpz_class qd, qr;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d - j);
    mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), j + 1);
    num *= qd - 1;
    den *= qr - 1;
  }
  return num / den;
}

}  // namespace

FieldDescriptor FieldDescriptor::make(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw DomainError("field: p must be an odd prime, got " + std::to_string(p));
  for (long c = 2; c < p; ++c) {
    if (mod_pow(c, (p - 1) / 2, p) == p - 1) return FieldDescriptor{p, c};
  }
  throw DomainError("field: no quadratic non-residue found");
}

Fq2 add(const FieldDescriptor& F, Fq2 a, Fq2 b) { return {(a.a0 + b.a0) % F.p, (a.a1 + b.a1) % F.p}; }

Fq2 sub(const FieldDescriptor& F, Fq2 a, Fq2 b) {
  return {(a.a0 - b.a0 + F.p) % F.p, (a.a1 - b.a1 + F.p) % F.p};
}

Fq2 mul(const FieldDescriptor& F, Fq2 a, Fq2 b) {
  // (a0 + a1 x)(b0 + b1 x) with x^2 = c
  return {(a.a0 * b.a0 + a.a1 * b.a1 % F.p * F.c) % F.p, (a.a0 * b.a1 + a.a1 * b.a0) % F.p};
}

Fq2 neg(const FieldDescriptor& F, Fq2 a) { return {(F.p - a.a0) % F.p, (F.p - a.a1) % F.p}; }

Fq2 inv(const FieldDescriptor& F, Fq2 a) {
  if (a.is_zero()) throw DomainError("fq2: inverse of zero");
  // norm = a * conj(a) = a0^2 - c*a1^2 lies in F_p
  long n = ((a.a0 * a.a0 - F.c % F.p * (a.a1 * a.a1 % F.p)) % F.p + F.p) % F.p;
  long ni = inv_mod(n, F.p);
  Fq2 cj = conj(F, a);
  return {cj.a0 * ni % F.p, cj.a1 * ni % F.p};
}

Fq2 conj(const FieldDescriptor& F, Fq2 a) {
  // x^p = -x since c is a non-residue
  return {a.a0, (F.p - a.a1) % F.p};
}

long fq2_index(const FieldDescriptor& F, Fq2 a) { return a.a0 * F.p + a.a1; }

Fq2 fq2_from_index(const FieldDescriptor& F, long idx) { return {idx / F.p, idx % F.p}; }

Fq2 pair(const Vec& u, const Vec& v, const HermitianSpace& S) {
  int d = S.d;
  if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
    throw DomainError("pair: dimension mismatch");
  Fq2 acc{0, 0};
  for (int i = 0; i < d; ++i) acc = add(S.field, acc, mul(S.field, u[i], conj(S.field, v[d - 1 - i])));
  return acc;
}

namespace {

// In-place RREF; returns rank. Rows beyond the rank are zeroed and removed
// by the caller.
int rref(const FieldDescriptor& F, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Fq2 pinv = inv(F, rows[rank][col]);
    for (int j = col; j < ncols; ++j) rows[rank][j] = mul(F, rows[rank][j], pinv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Fq2 f = rows[r][col];
      for (int j = col; j < ncols; ++j) rows[r][j] = sub(F, rows[r][j], mul(F, f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

HermitianSubspace make_subspace(const HermitianSpace& S, std::vector<Vec> rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != S.d) throw DomainError("make_subspace: row length mismatch");
  int rank = rref(S.field, rows);
  rows.resize(rank);
  return HermitianSubspace{S, std::move(rows)};
}

HermitianSubspace orthogonal(const HermitianSubspace& U) {
  const HermitianSpace& S = U.ambient;
  const FieldDescriptor& F = S.field;
  int d = S.d;
  int k = U.dim();
  // v is orthogonal to row r iff v . w = 0 where w_i = conj(r_{d+1-i}).
  std::vector<Vec> constraints;
  constraints.reserve(k);
  for (const auto& r : U.basis) {
    Vec w(d);
    for (int i = 0; i < d; ++i) w[i] = conj(F, r[d - 1 - i]);
    constraints.push_back(std::move(w));
  }
  int rank = rref(F, constraints);
  constraints.resize(rank);
  // Null space of the constraint matrix, read off from its RREF.
  std::vector<int> pivots;
  std::vector<bool> is_pivot(d, false);
  for (const auto& row : constraints) {
    for (int j = 0; j < d; ++j) {
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<Vec> null_rows;
  for (int j = 0; j < d; ++j) {
    if (is_pivot[j]) continue;
    Vec v(d, Fq2{0, 0});
    v[j] = Fq2{1, 0};
    for (int r = 0; r < rank; ++r) v[pivots[r]] = neg(F, constraints[r][j]);
    null_rows.push_back(std::move(v));
  }
  return make_subspace(S, std::move(null_rows));
}

bool contains(const HermitianSubspace& outer, const HermitianSubspace& inner) {
  const FieldDescriptor& F = outer.ambient.field;
  int d = outer.ambient.d;
  // Pivot columns of the outer RREF basis.
  std::vector<int> pivots;
  for (const auto& row : outer.basis) {
    for (int j = 0; j < d; ++j) {
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        break;
      }
    }
  }
  for (const auto& v0 : inner.basis) {
    Vec v = v0;
    for (size_t r = 0; r < outer.basis.size(); ++r) {
      Fq2 f = v[pivots[r]];
      if (f.is_zero()) continue;
      for (int j = 0; j < d; ++j) v[j] = sub(F, v[j], mul(F, f, outer.basis[r][j]));
    }
    for (int j = 0; j < d; ++j)
      if (!v[j].is_zero()) return false;
  }
  return true;
}

bool in_family_N(const HermitianSubspace& U) { return contains(U, orthogonal(U)); }

void for_each_subspace(int r, const HermitianSpace& S, uint64_t budget,
                       const std::function<bool(const HermitianSubspace&)>& fn) {
  const FieldDescriptor& F = S.field;
  int d = S.d;
  if (r < 0 || r > d) throw DomainError("for_each_subspace: rank out of range");
  mpz_class total = gaussian_binomial(d, r, mpz_class(F.p) * F.p);
  if (total > budget)
    throw BudgetError("subspace enumeration budget exceeded: " + total.get_str() + " > " +
                      mpz_class(budget).get_str());
  if (r == 0) {
    fn(HermitianSubspace{S, {}});
    return;
  }
  long q = F.p * F.p;
  std::vector<int> piv(r);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // Free positions of the RREF shape for this pivot pattern: row i may be
    // nonzero at columns beyond piv[i] that are not pivot columns.
    std::vector<bool> is_pivot(d, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < r; ++i)
      for (int j = piv[i] + 1; j < d; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);

    std::vector<Vec> rows(r, Vec(d, Fq2{0, 0}));
    for (int i = 0; i < r; ++i) rows[i][piv[i]] = Fq2{1, 0};
    std::vector<long> odo(free_pos.size(), 0);
    while (true) {
      for (size_t k = 0; k < free_pos.size(); ++k)
        rows[free_pos[k].first][free_pos[k].second] = fq2_from_index(F, odo[k]);
      if (!fn(HermitianSubspace{S, rows})) return;
      size_t k = 0;
      for (; k < odo.size(); ++k) {
        if (++odo[k] < q) break;
        odo[k] = 0;
      }
      if (k == odo.size()) break;
    }

    // Next pivot pattern in lexicographic order.
    int i = r - 1;
    while (i >= 0 && piv[i] == d - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int k = i + 1; k < r; ++k) piv[k] = piv[k - 1] + 1;
  }
}

namespace {

void check_N_range(int r, int d) {
  if (2 * r < d || r > d)
    throw DomainError("N(r,V): requires ceil(d/2) <= r <= d, got r=" + std::to_string(r) +
                      " d=" + std::to_string(d));
}

}  // namespace

std::vector<HermitianSubspace> enumerate_N(int r, const HermitianSpace& S, uint64_t budget) {
  check_N_range(r, S.d);
  std::vector<HermitianSubspace> out;
  for_each_subspace(r, S, budget, [&](const HermitianSubspace& U) {
    if (in_family_N(U)) out.push_back(U);
    return true;
  });
  return out;
}

mpz_class count_N(int r, const HermitianSpace& S, uint64_t budget) {
  check_N_range(r, S.d);
  mpz_class n = 0;
  for_each_subspace(r, S, budget, [&](const HermitianSubspace& U) {
    if (in_family_N(U)) ++n;
    return true;
  });
  return n;
}

mpz_class unitary_order_bruteforce(int d, const FieldDescriptor& F) {
  if (d < 0) throw DomainError("unitary_order_bruteforce: d must be >= 0");
  if (d > 2) throw DomainError("unitary_order_bruteforce: d too large for brute force");
  if (d == 0) return 1;
  HermitianSpace S{F, d};
  long q = F.p * F.p;
  mpz_class count = 0;
  // Matrices indexed column-major; condition: pair(col_j, col_i) = A_{ij}.
  std::vector<Vec> cols(d, Vec(d, Fq2{0, 0}));
  uint64_t ncells = static_cast<uint64_t>(d) * d;
  std::vector<long> odo(ncells, 0);
  while (true) {
    for (uint64_t k = 0; k < ncells; ++k) cols[k / d][k % d] = fq2_from_index(F, odo[k]);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      for (int j = 0; j < d && ok; ++j) {
        Fq2 want = (i + j == d - 1) ? Fq2{1, 0} : Fq2{0, 0};
        if (!(pair(cols[j], cols[i], S) == want)) ok = false;
      }
    }
    if (ok) ++count;
    size_t k = 0;
    for (; k < ncells; ++k) {
      if (++odo[k] < q) break;
      odo[k] = 0;
    }
    if (k == ncells) break;
  }
  return count;
}

}  // namespace bts::fieldgeom
