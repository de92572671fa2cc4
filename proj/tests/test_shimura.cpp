#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bts/errors.hpp"
#include "bts/shimura.hpp"

namespace sh = bts::shimura;
using sh::AutoRepDescriptor;
using sh::FrobScalar;

TEST_CASE("frob_scalar_on_ext") {
  for (int n : {3, 4}) {
    int top = 2 * (n - 1);
    CHECK(sh::frob_scalar_on_ext(top, n, 0, "d") == FrobScalar{1, "d", 0});
    CHECK(sh::frob_scalar_on_ext(top - 1, n, 0, "d") == FrobScalar{-1, "d", 1});
    CHECK(sh::frob_scalar_on_ext(top - 2, n, 0, "d") == FrobScalar{1, "d", 2});
    CHECK(sh::frob_scalar_on_ext(top, n, 7, "d") == FrobScalar{1, "d", 7});
    CHECK_THROWS_AS(sh::frob_scalar_on_ext(top + 1, n, 0, "d"), bts::DomainError);
    CHECK_THROWS_AS(sh::frob_scalar_on_ext(-1, n, 0, "d"), bts::DomainError);
  }
}

TEST_CASE("alternating_identity") {
  CHECK(sh::alternating_identity(1));
  CHECK(sh::alternating_identity(3));
  CHECK(sh::alternating_identity(27));
  for (long p : {3L, 5L, 7L}) {
    CHECK(sh::alternating_identity(p));
    CHECK(sh::alternating_identity(p * p * p));
  }
  CHECK_THROWS_AS(sh::alternating_identity(0), bts::DomainError);
}

TEST_CASE("basic_stratum_cohomology examples") {
  CHECK_THROWS_AS(sh::basic_stratum_cohomology(5, 3, {}), bts::DomainError);

  auto empty = sh::basic_stratum_cohomology(3, 5, {});
  CHECK(empty.nu == 5);
  CHECK(empty.h0.empty());
  CHECK(empty.h1_subspace.empty());
  CHECK(empty.h1_quotient.empty());
  CHECK(empty.h2.empty());

  AutoRepDescriptor unram;
  unram.label = "pi";
  unram.unramified_char = true;
  unram.j1_spherical = true;
  auto r1 = sh::basic_stratum_cohomology(3, 5, {unram});
  REQUIRE(r1.h0.size() == 1);
  CHECK(r1.h0[0].multiplicity == 1);
  CHECK(r1.h0[0].scalar == FrobScalar{1, "pi", 0});
  REQUIRE(r1.h1_quotient.size() == 1);
  CHECK(r1.h1_quotient[0].multiplicity == 5);
  CHECK(r1.h1_quotient[0].scalar == FrobScalar{1, "pi", 0});
  CHECK(r1.h1_subspace.empty());
  REQUIRE(r1.h2.size() == 1);
  CHECK(r1.h2[0].scalar == FrobScalar{1, "pi", 2});

  AutoRepDescriptor big;
  big.label = "pi";
  big.j1_spherical = true;
  big.dim_gt_1 = true;
  big.d = 1;
  auto r2 = sh::basic_stratum_cohomology(3, 5, {big});
  CHECK(r2.h0.empty());
  REQUIRE(r2.h1_subspace.size() == 1);
  CHECK(r2.h1_subspace[0].multiplicity == 1);
  CHECK(r2.h1_subspace[0].scalar == FrobScalar{1, "pi", 0});
  REQUIRE(r2.h1_quotient.size() == 1);
  CHECK(r2.h1_quotient[0].multiplicity == 3);
  REQUIRE(r2.h2.size() == 1);
  CHECK(r2.h2[0].scalar == FrobScalar{1, "pi", 2});

  // n = 4 uses nu = p^3.
  auto r3 = sh::basic_stratum_cohomology(4, 3, {unram});
  CHECK(r3.nu == 27);
  CHECK(r3.h1_quotient[0].multiplicity == 27);

  AutoRepDescriptor chi;
  chi.label = "chi";
  chi.is_chi_tau1 = true;
  chi.weight_w = 2;
  auto r4 = sh::basic_stratum_cohomology(3, 3, {chi});
  REQUIRE(r4.h1_subspace.size() == 1);
  CHECK(r4.h1_subspace[0].multiplicity == 1);
  CHECK(r4.h1_subspace[0].scalar == FrobScalar{-1, "chi", 3});
  CHECK(r4.h2.empty());
}

TEST_CASE("roster validation") {
  AutoRepDescriptor bad;
  bad.label = "x";
  bad.d = 1;  // d > 0 without j1_spherical
  CHECK_THROWS_AS(sh::basic_stratum_cohomology(3, 5, {bad}), bts::DomainError);

  AutoRepDescriptor bad2;
  bad2.label = "x";
  bad2.unramified_char = true;  // requires j1_spherical
  CHECK_THROWS_AS(sh::basic_stratum_cohomology(3, 5, {bad2}), bts::DomainError);

  AutoRepDescriptor bad3;
  bad3.label = "x";
  bad3.unramified_char = true;
  bad3.j1_spherical = true;
  bad3.dim_gt_1 = true;  // excluded combination
  CHECK_THROWS_AS(sh::basic_stratum_cohomology(3, 5, {bad3}), bts::DomainError);

  AutoRepDescriptor bad4;
  bad4.label = "x";
  bad4.j1_spherical = true;
  bad4.dim_gt_1 = true;
  bad4.d = 5;  // nu - 1 - d < 0 at nu = 5
  CHECK_THROWS_AS(sh::basic_stratum_cohomology(3, 5, {bad4}), bts::DomainError);

  // Boundary case nu - 1 - d = 0 passes and emits no quotient line.
  AutoRepDescriptor edge = bad4;
  edge.d = 4;
  auto r = sh::basic_stratum_cohomology(3, 5, {edge});
  CHECK(r.h1_quotient.empty());
  REQUIRE(r.h1_subspace.size() == 1);
  CHECK(r.h1_subspace[0].multiplicity == 4);
}
