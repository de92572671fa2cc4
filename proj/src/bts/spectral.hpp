#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bts/partitions.hpp"
#include "bts/stratum.hpp"

namespace bts::spectral {

inline constexpr uint64_t kDefaultSubsetBudget = 1'000'000;

// One summand (c-Ind_{J_theta} rho_lambda)^multiplicity; over_Jcirc marks the
// trivial representation of J° appearing in the known top E_2 term.
struct InducedRepTerm {
  int theta = 0;
  bool over_Jcirc = false;
  partitions::Partition lambda;
  mpz_class multiplicity = 1;
  bool operator==(const InducedRepTerm&) const = default;
};

struct VirtualInducedRep {
  std::vector<InducedRepTerm> terms;
  stratum::FrobWeight weight;
};

using Position = std::pair<int, int>;  // (a, b) with a <= 0

struct SpectralPage {
  int n = 1;
  mpz_class p;
  std::map<Position, VirtualInducedRep> entries;
};

enum class KMode { closed, bruteforce };

// nu_theta: the number of maximal-type vertex lattices above Lambda_theta.
mpz_class nu_theta(int n, int theta, const mpz_class& p);

// Multiplicity k_{s,theta}: s-element subsets of N(n-theta-m-1, V_theta^1)
// whose members jointly span the space (common orthogonal intersection {0}).
mpz_class k_mult_bruteforce(int n, int theta, int s, long p,
                            uint64_t budget = kDefaultSubsetBudget);

// Closed forms available for n in {3,4}.
mpz_class k_mult_closed(int n, int theta, int s, const mpz_class& p);

// All (a,b) with E_1^{a,b} nonzero, ordered by b then a descending.
std::vector<Position> nonzero_locus(int n, const mpz_class& p,
                                    uint64_t budget = kDefaultSubsetBudget);

SpectralPage e1_page(int n, long p, KMode mode, uint64_t budget = kDefaultSubsetBudget);

// The three exactly-known E_2 terms.
std::map<Position, VirtualInducedRep> e2_known_terms(int n);

struct PositionedRep {
  Position pos;
  VirtualInducedRep rep;
};

struct DegreeReport {
  std::vector<PositionedRep> known;
  std::vector<PositionedRep> bounded_by;
};

// Per cohomology degree b of M^an: known E_2 summands plus E_1 upper bounds.
std::map<int, DegreeReport> cohomology_report(int n, long p, KMode mode,
                                              uint64_t budget = kDefaultSubsetBudget);

struct InertialEntry {
  InducedRepTerm term;
  int f = 0;
  bool supercuspidal = false;
};

// Inertial class and supercuspidality per page term; checks the parity rule.
std::map<Position, std::vector<InertialEntry>> inertial_report(const SpectralPage& page);

}  // namespace bts::spectral
