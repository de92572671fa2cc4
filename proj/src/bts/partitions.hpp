#pragma once
#include <utility>
#include <vector>

#include "bts/poly.hpp"

namespace bts::partitions {

// Weakly decreasing list of positive parts; empty list is the empty partition.
using Partition = std::vector<int>;

void validate(const Partition& lam);
int size_of(const Partition& lam);

// One hook length per box, row-major.
std::vector<int> hook_lengths(const Partition& lam);

// a(lambda) = sum (i-1) * lambda_i.
long a_stat(const Partition& lam);

// Degree polynomial of the unipotent representation rho_lambda, in q.
IntPoly degree(const Partition& lam);

// 2-core via beta-set parities (canonical) and via greedy domino removal
// (kept as an independent oracle).
Partition two_core(const Partition& lam);
Partition two_core_greedy(const Partition& lam);

// (t, e) with |lambda| = 2e + t(t+1)/2 and 2-core Delta_t.
std::pair<int, int> cuspidal_support(const Partition& lam);

// Inertial-class label f = (t(t+1)/2 - 1)/2; requires |lambda| odd.
int inertial_class(const Partition& lam);

}  // namespace bts::partitions
