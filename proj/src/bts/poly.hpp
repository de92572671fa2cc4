#pragma once
#include <gmpxx.h>

#include <map>
#include <string>

namespace bts {

// Exact integer-coefficient polynomial in one formal variable (the prime p,
// or q = p^2 depending on context). No zero coefficients are stored.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(long c) { set(0, mpz_class(c)); }
  explicit IntPoly(const mpz_class& c) { set(0, c); }

  static IntPoly monomial(const mpz_class& c, int exp);
  static IntPoly var() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  mpz_class coeff(int exp) const;
  const std::map<int, mpz_class>& terms() const { return coeffs_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

  mpz_class eval(const mpz_class& x) const;

  // Sparse rendering, highest degree first, e.g. "p^3 - 2p + 1".
  std::string render(const std::string& var) const;

 private:
  void set(int exp, const mpz_class& c);
  std::map<int, mpz_class> coeffs_;

  friend IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);
};

// Exact polynomial quotient; throws DomainError when the division leaves a
// remainder or b is zero.
IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);

}  // namespace bts
