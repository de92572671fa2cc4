#include "bts/counts.hpp"

#include <string>

#include "bts/errors.hpp"

namespace bts::counts {

namespace {

// p^e - (-1)^e
IntPoly sign_factor(int e) {
  return IntPoly::monomial(1, e) - IntPoly((e % 2 == 0) ? 1 : -1);
}

void check_range(int r, int d) {
  if (d < 0 || r < 0 || 2 * r < d || r > d)
    throw DomainError("nu(r,d): requires ceil(d/2) <= r <= d, got r=" + std::to_string(r) +
                      " d=" + std::to_string(d));
}

}  // namespace

IntPoly nu_symbolic(int r, int d) {
  check_range(r, d);
  IntPoly num(1);
  for (int j = 1; j <= 2 * (d - r); ++j) num = num * sign_factor(2 * r - d + j);
  IntPoly den(1);
  for (int j = 1; j <= d - r; ++j) den = den * (IntPoly::monomial(1, 2 * j) - IntPoly(1));
  return poly_exact_div(num, den);
}

mpz_class nu_eval(int r, int d, const mpz_class& p) { return nu_symbolic(r, d).eval(p); }

IntPoly unitary_order(int d) {
  if (d < 0) throw DomainError("unitary_order: d must be >= 0");
  IntPoly out = IntPoly::monomial(1, d * (d - 1) / 2);
  for (int j = 1; j <= d; ++j) out = out * sign_factor(j);
  return out;
}

IntPoly parabolic_order(int r, int d) {
  check_range(r, d);
  IntPoly out = IntPoly::monomial(1, d * (d - 1) / 2);
  for (int j = 1; j <= d - r; ++j) out = out * (IntPoly::monomial(1, 2 * j) - IntPoly(1));
  for (int j = 1; j <= 2 * r - d; ++j) out = out * sign_factor(j);
  return out;
}

IntPoly strata_below(int theta, int theta_prime) {
  if (theta_prime < 0 || theta_prime > theta)
    throw DomainError("strata_below: requires 0 <= theta' <= theta");
  return nu_symbolic(theta + theta_prime + 1, 2 * theta + 1);
}

IntPoly strata_above(int n, int theta, int theta_prime) {
  int m = (n - 1) / 2;
  if (theta < 0 || theta > theta_prime || theta_prime > m)
    throw DomainError("strata_above: requires 0 <= theta <= theta' <= m");
  return nu_symbolic(n - theta - theta_prime - 1, n - 2 * theta - 1);
}

}  // namespace bts::counts
