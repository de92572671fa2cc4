#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bts/counts.hpp"
#include "bts/errors.hpp"
#include "bts/spectral.hpp"

namespace sp = bts::spectral;
using sp::KMode;
using sp::Position;

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST_CASE("k_mult_bruteforce small cases") {
  for (int n : {3, 4, 5}) CHECK(sp::k_mult_bruteforce(n, (n - 1) / 2, 1, 3) == 1);
  CHECK(sp::k_mult_bruteforce(3, 0, 1, 3) == 0);
  for (int s = 2; s <= 4; ++s) CHECK(sp::k_mult_bruteforce(3, 0, s, 3) == binom(4, s));
  CHECK(sp::k_mult_bruteforce(3, 0, 5, 3) == 0);
  for (int s = 2; s <= 3; ++s) CHECK(sp::k_mult_bruteforce(4, 0, s, 3) == binom(28, s));
  CHECK_THROWS_AS(sp::k_mult_bruteforce(3, 2, 1, 3), bts::DomainError);
  CHECK_THROWS_AS(sp::k_mult_bruteforce(3, 0, 0, 3), bts::DomainError);
  CHECK_THROWS_AS(sp::k_mult_bruteforce(4, 0, 4, 3, 1000), bts::BudgetError);
}

TEST_CASE("k_mult_closed matches brute force") {
  for (long p : {3L, 5L}) {
    for (int s = 1; s <= p + 1; ++s) {
      for (int theta : {0, 1}) {
        CHECK(sp::k_mult_closed(3, theta, s, p) == sp::k_mult_bruteforce(3, theta, s, p));
      }
    }
  }
  for (int s = 1; s <= 3; ++s) {
    for (int theta : {0, 1}) {
      CHECK(sp::k_mult_closed(4, theta, s, 3) == sp::k_mult_bruteforce(4, theta, s, 3));
    }
  }
  CHECK_THROWS_AS(sp::k_mult_closed(5, 0, 1, 3), bts::DomainError);
}

TEST_CASE("k bounds") {
  for (int n : {3, 4}) {
    for (int theta : {0, 1}) {
      long nu_l = sp::nu_theta(n, theta, 3).get_si();
      std::vector<long> svals{1, 2, 3, nu_l - 1, nu_l, nu_l + 1, nu_l + 2};
      for (long s : svals) {
        if (s < 1) continue;
        mpz_class k = sp::k_mult_bruteforce(n, theta, static_cast<int>(s), 3, 10'000'000);
        CHECK(k >= 0);
        CHECK(k <= binom(nu_l, s));
        if (s > nu_l) CHECK(k == 0);
        if (s == nu_l) CHECK(k == 1);
      }
    }
  }
}

TEST_CASE("nu_theta agrees with strata_above") {
  CHECK(sp::nu_theta(3, 0, 3) == 4);
  CHECK(sp::nu_theta(4, 0, 3) == 28);
  CHECK(sp::nu_theta(5, 2, 3) == 1);
  CHECK(sp::nu_theta(5, 0, 3) == 4 * 28);
}

TEST_CASE("nonzero_locus") {
  for (long p : {3L, 5L}) {
    std::vector<Position> want3;
    want3.emplace_back(0, 2);
    want3.emplace_back(0, 3);
    for (long k = 0; k <= p; ++k) want3.emplace_back(static_cast<int>(-k), 4);
    CHECK(sp::nonzero_locus(3, p) == want3);

    CHECK(sp::nonzero_locus(1, p) == std::vector<Position>{{0, 0}});

    std::vector<Position> want4;
    want4.emplace_back(0, 4);
    want4.emplace_back(0, 5);
    for (long k = 0; k <= p * p * p; ++k) want4.emplace_back(static_cast<int>(-k), 6);
    CHECK(sp::nonzero_locus(4, p) == want4);
  }
}

TEST_CASE("e1 page support equals nonzero locus") {
  for (int n : {1, 2, 3, 4}) {
    for (long p : {3L, 5L}) {
      auto page = sp::e1_page(n, p, KMode::closed);
      std::vector<Position> support;
      for (const auto& [pos, rep] : page.entries) {
        CHECK(!rep.terms.empty());
        for (const auto& t : rep.terms) CHECK(t.multiplicity > 0);
        support.push_back(pos);
      }
      auto locus = sp::nonzero_locus(n, p);
      std::sort(locus.begin(), locus.end());
      CHECK(support == locus);
    }
  }
}

TEST_CASE("e1 closed and bruteforce agree for n=3, p=3") {
  auto a = sp::e1_page(3, 3, KMode::closed);
  auto b = sp::e1_page(3, 3, KMode::bruteforce);
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [pos, rep] : a.entries) {
    REQUIRE(b.entries.count(pos) == 1);
    CHECK(rep.terms == b.entries.at(pos).terms);
  }
}

TEST_CASE("page weights carry sign (-1)^b and exponent b") {
  for (int n : {1, 2, 3, 4}) {
    auto page = sp::e1_page(n, 3, KMode::closed);
    for (const auto& [pos, rep] : page.entries) {
      CHECK(rep.weight.sign == (pos.second % 2 == 0 ? 1 : -1));
      CHECK(rep.weight.exponent == pos.second);
    }
  }
}

TEST_CASE("top corner is c-Ind_{J_m} trivial with multiplicity 1") {
  for (int n : {1, 2, 3, 4}) {
    int m = (n - 1) / 2;
    auto page = sp::e1_page(n, 5, KMode::closed);
    Position top{0, 2 * (n - 1)};
    REQUIRE(page.entries.count(top) == 1);
    const auto& terms = page.entries.at(top).terms;
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].theta == m);
    CHECK(terms[0].lambda == bts::partitions::Partition{2 * m + 1});
    CHECK(terms[0].multiplicity == 1);
  }
}

TEST_CASE("e2_known_terms") {
  auto e3 = sp::e2_known_terms(3);
  REQUIRE(e3.size() == 3);
  CHECK(e3.count({0, 2}) == 1);
  CHECK(e3.count({0, 3}) == 1);
  CHECK(e3.count({0, 4}) == 1);
  CHECK(e3.at({0, 2}).terms[0].lambda == bts::partitions::Partition{3});
  CHECK(e3.at({0, 3}).terms[0].lambda == bts::partitions::Partition{2, 1});
  CHECK(e3.at({0, 4}).terms[0].over_Jcirc);

  auto e1n = sp::e2_known_terms(1);
  REQUIRE(e1n.size() == 1);
  CHECK(e1n.count({0, 0}) == 1);
  CHECK(e1n.at({0, 0}).terms[0].over_Jcirc);

  auto e5 = sp::e2_known_terms(5);
  CHECK(e5.at({0, 4}).terms[0].theta == 2);
  CHECK(e5.at({0, 4}).terms[0].lambda == bts::partitions::Partition{5});
  CHECK(e5.at({0, 5}).terms[0].lambda == bts::partitions::Partition{4, 1});

  for (int n = 1; n <= 6; ++n) {
    for (const auto& [pos, rep] : sp::e2_known_terms(n)) {
      CHECK(pos.first + pos.second >= 0);
      CHECK(pos.first + pos.second <= 2 * (n - 1));
      CHECK(rep.weight.sign == (pos.second % 2 == 0 ? 1 : -1));
      CHECK(rep.weight.exponent == pos.second);
    }
  }
}

TEST_CASE("cohomology_report") {
  auto rep = sp::cohomology_report(3, 3, KMode::closed);
  REQUIRE(rep.size() == 5);
  // b = 4: only the known top term.
  REQUIRE(rep.at(4).known.size() == 1);
  CHECK(rep.at(4).known[0].rep.terms[0].over_Jcirc);
  CHECK(rep.at(4).bounded_by.empty());
  // b = 2: known middle term plus the E_1 bound at (-2, 4).
  REQUIRE(rep.at(2).known.size() == 1);
  CHECK(rep.at(2).known[0].pos == Position{0, 2});
  REQUIRE(rep.at(2).bounded_by.size() == 1);
  CHECK(rep.at(2).bounded_by[0].pos == Position{-2, 4});
  CHECK(rep.at(2).bounded_by[0].rep.terms[0].multiplicity == 4);  // C(4,3)
  // b = 1: nothing known, only the E_1 bound at (-3, 4).
  CHECK(rep.at(1).known.empty());
  REQUIRE(rep.at(1).bounded_by.size() == 1);
  CHECK(rep.at(1).bounded_by[0].pos == Position{-3, 4});
  CHECK(rep.at(1).bounded_by[0].rep.terms[0].multiplicity == 1);  // C(4,4)
  // b = 0: (-4,4) falls outside the locus, so nothing at all.
  CHECK(rep.at(0).known.empty());
  CHECK(rep.at(0).bounded_by.empty());

  auto rep1 = sp::cohomology_report(1, 3, KMode::closed);
  REQUIRE(rep1.size() == 1);
  CHECK(rep1.at(0).known.size() == 1);
  CHECK(rep1.at(0).bounded_by.empty());
}

TEST_CASE("inertial_report") {
  for (int n : {1, 2, 3, 4}) {
    for (long p : {3L, 5L}) {
      auto page = sp::e1_page(n, p, KMode::closed);
      auto rep = sp::inertial_report(page);
      for (const auto& [pos, entries] : rep) {
        for (const auto& e : entries) {
          CHECK(e.f == ((pos.second % 2 + 2) % 2));
          if (e.supercuspidal) {
            CHECK(e.term.theta == (n - 1) / 2);
            bool expected = (n == 1 && pos.second == 0) || (n == 2 && pos.second == 2) ||
                            (n == 3 && pos.second == 3) || (n == 4 && pos.second == 5);
            CHECK(expected);
          }
        }
      }
      // The supercuspidal position actually occurs.
      int want_b = n <= 2 ? 2 * (n - 1) : 2 * (n - 1) - 1;
      bool found = false;
      for (const auto& [pos, entries] : rep)
        for (const auto& e : entries)
          if (e.supercuspidal && pos.second == want_b) found = true;
      CHECK(found);
    }
  }
}
