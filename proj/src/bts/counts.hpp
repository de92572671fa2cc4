#pragma once
#include <gmpxx.h>

#include "bts/poly.hpp"

namespace bts::counts {

// Number of r-dimensional subspaces U of a d-dimensional hermitian space with
// U^perp contained in U, as a polynomial in p. Requires ceil(d/2) <= r <= d.
IntPoly nu_symbolic(int r, int d);
mpz_class nu_eval(int r, int d, const mpz_class& p);

// Order of the finite unitary group U_d(F_p).
IntPoly unitary_order(int d);

// Order of the parabolic stabilizing a member of N(r, V).
IntPoly parabolic_order(int r, int d);

// Strata of dimension theta' contained in / containing a stratum of
// dimension theta.
IntPoly strata_below(int theta, int theta_prime);
IntPoly strata_above(int n, int theta, int theta_prime);

}  // namespace bts::counts
