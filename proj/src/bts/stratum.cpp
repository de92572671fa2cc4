#include "bts/stratum.hpp"

#include "bts/errors.hpp"

namespace bts::stratum {

namespace {

FrobWeight weight_at(int degree) { return FrobWeight{degree % 2 == 0 ? 1 : -1, degree}; }

}  // namespace

GradedRepTable stratum_cohomology(int theta) {
  if (theta < 0) throw DomainError("stratum_cohomology: theta must be >= 0");
  GradedRepTable out;
  for (int j = 0; j <= theta; ++j) {
    std::vector<partitions::Partition> reps;
    for (int s = 0; s <= std::min(j, theta - j); ++s) {
      partitions::Partition lam{2 * theta + 1 - 2 * s};
      if (2 * s > 0) lam.push_back(2 * s);
      reps.push_back(std::move(lam));
    }
    out.degrees[2 * j] = {std::move(reps), weight_at(2 * j)};
  }
  for (int j = 0; j + 1 <= theta; ++j) {
    std::vector<partitions::Partition> reps;
    for (int s = 0; s <= std::min(j, theta - 1 - j); ++s)
      reps.push_back({2 * theta - 2 * s, 2 * s + 1});
    if (!reps.empty()) out.degrees[2 * j + 1] = {std::move(reps), weight_at(2 * j + 1)};
  }
  return out;
}

std::vector<IntPoly> betti(int theta) {
  GradedRepTable tab = stratum_cohomology(theta);
  std::vector<IntPoly> out(2 * theta + 1);
  for (const auto& [deg, content] : tab.degrees) {
    IntPoly b;
    for (const auto& lam : content.first) b = b + partitions::degree(lam);
    out[deg] = b;
  }
  return out;
}

std::vector<mpz_class> betti_eval(int theta, const mpz_class& p) {
  std::vector<mpz_class> out;
  for (const auto& poly : betti(theta)) out.push_back(poly.eval(p));
  return out;
}

GradedRepTable tube_cohomology(int n, int theta) {
  int m = (n - 1) / 2;
  if (theta < 0 || theta > m) throw DomainError("tube_cohomology: theta out of [0, m]");
  int shift = 2 * (n - 1 - theta);
  GradedRepTable out;
  for (const auto& [deg, content] : stratum_cohomology(theta).degrees)
    out.degrees[deg + shift] = {content.first, weight_at(deg + shift)};
  return out;
}

}  // namespace bts::stratum
