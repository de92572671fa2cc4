#include "bts/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bts/errors.hpp"

namespace bts::partitions {

void validate(const Partition& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) throw DomainError("partition: parts must be positive");
    if (i > 0 && lam[i] > lam[i - 1]) throw DomainError("partition: parts must be weakly decreasing");
  }
}

int size_of(const Partition& lam) { return std::accumulate(lam.begin(), lam.end(), 0); }

std::vector<int> hook_lengths(const Partition& lam) {
  validate(lam);
  int rows = static_cast<int>(lam.size());
  std::vector<int> out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      int arm = lam[i] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < rows && lam[k] > j; ++k) ++leg;
      out.push_back(1 + arm + leg);
    }
  }
  return out;
}

long a_stat(const Partition& lam) {
  validate(lam);
  long s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += static_cast<long>(i) * lam[i];
  return s;
}

namespace {

// q^e - (-1)^e
IntPoly sign_factor(int e) {
  return IntPoly::monomial(1, e) - IntPoly((e % 2 == 0) ? 1 : -1);
}

}  // namespace

IntPoly degree(const Partition& lam) {
  validate(lam);
  int k = size_of(lam);
  // Cancel hook factors against equal numerator factors 1..k first; the
  // leftovers form one numerator product and one denominator product, with
  // a single exact division at the end.
  std::map<int, int> hooks;
  for (int h : hook_lengths(lam)) ++hooks[h];
  IntPoly num = IntPoly::monomial(1, a_stat(lam));
  for (int j = 1; j <= k; ++j) {
    auto it = hooks.find(j);
    if (it != hooks.end() && it->second > 0) {
      --it->second;
    } else {
      num = num * sign_factor(j);
    }
  }
  IntPoly den(1);
  for (auto& [h, mult] : hooks)
    for (int i = 0; i < mult; ++i) den = den * sign_factor(h);
  return poly_exact_div(num, den);
}

namespace {

Partition from_beta(std::vector<long> beta) {
  // beta strictly decreasing; recover parts lambda_i = beta_i - (len - i).
  std::sort(beta.rbegin(), beta.rend());
  Partition out;
  long len = static_cast<long>(beta.size());
  for (long i = 0; i < len; ++i) {
    long part = beta[i] - (len - 1 - i);
    if (part > 0) out.push_back(static_cast<int>(part));
  }
  return out;
}

}  // namespace

Partition two_core(const Partition& lam) {
  validate(lam);
  long r = static_cast<long>(lam.size());
  std::vector<long> beta;
  for (long i = 0; i < r; ++i) beta.push_back(lam[i] + (r - 1 - i));
  // Push beads to the bottom of each parity runner.
  long n_even = 0, n_odd = 0;
  for (long b : beta) (b % 2 == 0 ? n_even : n_odd)++;
  std::vector<long> packed;
  for (long i = 0; i < n_even; ++i) packed.push_back(2 * i);
  for (long i = 0; i < n_odd; ++i) packed.push_back(2 * i + 1);
  return from_beta(std::move(packed));
}

Partition two_core_greedy(const Partition& lam) {
  validate(lam);
  Partition cur = lam;
  bool removed = true;
  while (removed) {
    removed = false;
    // Horizontal domino: drop 2 from a row keeping monotonicity.
    for (size_t i = 0; i < cur.size() && !removed; ++i) {
      int next = (i + 1 < cur.size()) ? cur[i + 1] : 0;
      if (cur[i] - 2 >= next) {
        cur[i] -= 2;
        removed = true;
      }
    }
    // Vertical domino: drop 1 from two adjacent equal rows.
    for (size_t i = 0; i + 1 < cur.size() && !removed; ++i) {
      int next = (i + 2 < cur.size()) ? cur[i + 2] : 0;
      if (cur[i] == cur[i + 1] && cur[i + 1] - 1 >= next) {
        cur[i] -= 1;
        cur[i + 1] -= 1;
        removed = true;
      }
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  return cur;
}

std::pair<int, int> cuspidal_support(const Partition& lam) {
  Partition core = two_core(lam);
  int t = static_cast<int>(core.size());
  for (int i = 0; i < t; ++i)
    if (core[i] != t - i) throw DomainError("cuspidal_support: 2-core is not a staircase");
  int k = size_of(lam);
  int rem = k - t * (t + 1) / 2;
  if (rem < 0 || rem % 2 != 0) throw DomainError("cuspidal_support: size mismatch with 2-core");
  return {t, rem / 2};
}

int inertial_class(const Partition& lam) {
  if (size_of(lam) % 2 == 0) throw DomainError("inertial_class: |lambda| must be odd");
  auto [t, e] = cuspidal_support(lam);
  int tt = t * (t + 1) / 2;
  return (tt - 1) / 2;
}

}  // namespace bts::partitions
