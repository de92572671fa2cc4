#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace bts::shimura {

// sign * delta * p^exponent, with delta the unit-modulus scalar attached to
// the automorphic input named by delta_label.
struct FrobScalar {
  int sign = 1;
  std::string delta_label;
  int exponent = 0;
  bool operator==(const FrobScalar&) const = default;
};

// Opaque local input: flags of Pi_p plus the Ext dimension d and weight w.
struct AutoRepDescriptor {
  std::string label;
  bool unramified_char = false;
  bool j1_spherical = false;
  bool dim_gt_1 = false;
  bool is_chi_tau1 = false;
  long d = 0;
  long weight_w = 0;
};

struct ReportLine {
  std::string label;
  mpz_class multiplicity;
  FrobScalar scalar;
};

// Degree 1 splits into the subspace part V and the quotient part.
struct BasicStratumReport {
  int n = 3;
  mpz_class p;
  mpz_class nu;
  std::vector<ReportLine> h0;
  std::vector<ReportLine> h1_subspace;
  std::vector<ReportLine> h1_quotient;
  std::vector<ReportLine> h2;
};

// Frobenius scalar on the Ext space in degree b'.
FrobScalar frob_scalar_on_ext(int b_prime, int n, int w, const std::string& delta_label);

// Checks sum_{i=2}^{nu+1} (-1)^i C(nu+1, i) = nu exactly.
bool alternating_identity(const mpz_class& nu);

// Validates the roster and instantiates the degree 0/1/2 decomposition with
// nu = p (n=3) or p^3 (n=4).
BasicStratumReport basic_stratum_cohomology(int n, const mpz_class& p,
                                            const std::vector<AutoRepDescriptor>& roster);

}  // namespace bts::shimura
