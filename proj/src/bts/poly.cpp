#include "bts/poly.hpp"

#include <sstream>

#include "bts/errors.hpp"

namespace bts {

void IntPoly::set(int exp, const mpz_class& c) {
  if (c == 0) {
    coeffs_.erase(exp);
  } else {
    coeffs_[exp] = c;
  }
}

IntPoly IntPoly::monomial(const mpz_class& c, int exp) {
  IntPoly r;
  r.set(exp, c);
  return r;
}

mpz_class IntPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

IntPoly IntPoly::operator-() const {
  IntPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  int last = degree();
  // Horner over the sparse support, highest exponent first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int k = last; k > it->first; --k) acc *= x;
    acc += it->second;
    last = it->first;
  }
  for (int k = last; k > 0; --k) acc *= x;
  return acc;
}

std::string IntPoly::render(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    mpz_class c = it->second;
    int e = it->first;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || e == 0) out << a.get_str();
    if (e >= 1) {
      out << var;
      if (e > 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("poly_exact_div: division by zero polynomial");
  IntPoly rem = a;
  IntPoly quot;
  const int db = b.degree();
  const mpz_class& lb = b.coeffs_.rbegin()->second;
  while (!rem.is_zero() && rem.degree() >= db) {
    mpz_class lr = rem.coeffs_.rbegin()->second;
    if (lr % lb != 0) throw DomainError("poly_exact_div: not exact");
    IntPoly t = IntPoly::monomial(lr / lb, rem.degree() - db);
    quot = quot + t;
    rem = rem - t * b;
  }
  if (!rem.is_zero()) throw DomainError("poly_exact_div: not exact");
  return quot;
}

}  // namespace bts
