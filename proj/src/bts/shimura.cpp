#include "bts/shimura.hpp"

#include "bts/errors.hpp"

namespace bts::shimura {

FrobScalar frob_scalar_on_ext(int b_prime, int n, int w, const std::string& delta_label) {
  if (b_prime < 0 || b_prime > 2 * (n - 1))
    throw DomainError("frob_scalar_on_ext: b' out of [0, 2(n-1)]");
  return FrobScalar{b_prime % 2 == 0 ? 1 : -1, delta_label, -b_prime + 2 * (n - 1) + w};
}

bool alternating_identity(const mpz_class& nu) {
  if (nu < 1) throw DomainError("alternating_identity: nu must be >= 1");
  mpz_class sum = 0;
  mpz_class np1 = nu + 1;
  unsigned long top = mpz_get_ui(np1.get_mpz_t());
  for (unsigned long i = 2; i <= top; ++i) {
    mpz_class c;
    mpz_bin_ui(c.get_mpz_t(), np1.get_mpz_t(), i);
    sum += (i % 2 == 0) ? c : -c;
  }
  return sum == nu;
}

namespace {

void validate_entry(const AutoRepDescriptor& e, const mpz_class& nu) {
  if (e.d < 0) throw DomainError("roster entry '" + e.label + "': d must be >= 0");
  if (e.weight_w < 0) throw DomainError("roster entry '" + e.label + "': weight_w must be >= 0");
  if (e.d > 0 && !e.j1_spherical)
    throw DomainError("roster entry '" + e.label + "': d > 0 requires j1_spherical");
  if (e.unramified_char && !e.j1_spherical)
    throw DomainError("roster entry '" + e.label + "': unramified_char requires j1_spherical");
  if (e.unramified_char && e.dim_gt_1)
    throw DomainError("roster entry '" + e.label + "': unramified_char excludes dim_gt_1");
  if (e.j1_spherical && e.dim_gt_1 && mpz_class(e.d) > nu - 1)
    throw DomainError("roster entry '" + e.label + "': multiplicity nu-1-d would be negative");
  if (e.unramified_char && mpz_class(e.d) > nu)
    throw DomainError("roster entry '" + e.label + "': multiplicity nu-d would be negative");
}

}  // namespace

BasicStratumReport basic_stratum_cohomology(int n, const mpz_class& p,
                                            const std::vector<AutoRepDescriptor>& roster) {
  if (n != 3 && n != 4) throw DomainError("basic_stratum_cohomology: only n in {3,4}");
  BasicStratumReport rep;
  rep.n = n;
  rep.p = p;
  rep.nu = n == 3 ? p : p * p * p;
  for (const auto& e : roster) validate_entry(e, rep.nu);
  for (const auto& e : roster) {
    int w = static_cast<int>(e.weight_w);
    if (e.unramified_char)
      rep.h0.push_back({e.label, 1, FrobScalar{1, e.label, w}});
    if (e.j1_spherical)
      rep.h2.push_back({e.label, 1, FrobScalar{1, e.label, w + 2}});
    if (e.d > 0)
      rep.h1_subspace.push_back({e.label, mpz_class(e.d), FrobScalar{1, e.label, w}});
    if (e.is_chi_tau1)
      rep.h1_subspace.push_back({e.label, 1, FrobScalar{-1, e.label, w + 1}});
    if (e.j1_spherical && e.dim_gt_1 && rep.nu - 1 - e.d > 0)
      rep.h1_quotient.push_back({e.label, rep.nu - 1 - e.d, FrobScalar{1, e.label, w}});
    if (e.unramified_char && rep.nu - e.d > 0)
      rep.h1_quotient.push_back({e.label, rep.nu - e.d, FrobScalar{1, e.label, w}});
  }
  return rep;
}

}  // namespace bts::shimura
