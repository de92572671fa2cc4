#pragma once
#include <gmpxx.h>

#include <map>
#include <vector>

#include "bts/partitions.hpp"
#include "bts/poly.hpp"

namespace bts::stratum {

// The scalar sign * p^exponent by which Frobenius acts.
struct FrobWeight {
  int sign = 1;
  int exponent = 0;
  bool operator==(const FrobWeight&) const = default;
};

// Degree -> (unipotent labels, Frobenius weight). Only degrees with content
// are stored.
struct GradedRepTable {
  std::map<int, std::pair<std::vector<partitions::Partition>, FrobWeight>> degrees;
};

// Cohomology of the closed stratum M_Lambda of dimension theta; weight
// (-p)^j in degree j.
GradedRepTable stratum_cohomology(int theta);

// Betti numbers as polynomials in q, degrees 0..2*theta.
std::vector<IntPoly> betti(int theta);
std::vector<mpz_class> betti_eval(int theta, const mpz_class& p);

// Cohomology of the analytical tube U_Lambda: the stratum table shifted by
// 2(n-1-theta), weight (-p)^b in ambient degree b.
GradedRepTable tube_cohomology(int n, int theta);

}  // namespace bts::stratum
