#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bts/counts.hpp"
#include "bts/errors.hpp"
#include "bts/poly.hpp"

using bts::IntPoly;
using bts::poly_exact_div;
namespace counts = bts::counts;

namespace {

IntPoly P(long c) { return IntPoly(c); }
IntPoly X(int e) { return IntPoly::monomial(1, e); }

}  // namespace

TEST_CASE("poly arithmetic and rendering") {
  IntPoly a = X(2) - P(1);
  CHECK(a.render("p") == "p^2 - 1");
  CHECK((X(1) + P(1)).render("p") == "p + 1");
  CHECK((X(3) * P(2) - X(1) + P(4)).render("p") == "2p^3 - p + 4");
  CHECK(IntPoly().render("p") == "0");
  CHECK(P(-7).render("p") == "-7");
  CHECK(a.eval(3) == 8);
  CHECK((X(5) - X(2) + P(1)).eval(mpz_class(10)) == 99901);
}

TEST_CASE("poly_exact_div") {
  CHECK(poly_exact_div(X(2) - P(1), X(1) + P(1)) == X(1) - P(1));
  CHECK(poly_exact_div(X(1) + P(1), X(1) + P(1)) == P(1));
  CHECK_THROWS_AS(poly_exact_div(X(3) + P(1), X(2) - P(1)), bts::DomainError);
  CHECK_THROWS_AS(poly_exact_div(X(1), IntPoly()), bts::DomainError);
}

TEST_CASE("nu_symbolic examples") {
  CHECK(counts::nu_symbolic(1, 2) == X(1) + P(1));
  CHECK(counts::nu_symbolic(2, 3) == X(3) + P(1));
  for (int d = 0; d <= 8; ++d) CHECK(counts::nu_symbolic(d, d) == P(1));
  // nu(d-1, d) = (p^{d-1} - (-1)^{d-1})(p^d - (-1)^d) / (p^2 - 1)
  for (int d = 2; d <= 9; ++d) {
    IntPoly num = (X(d - 1) - P((d - 1) % 2 == 0 ? 1 : -1)) * (X(d) - P(d % 2 == 0 ? 1 : -1));
    CHECK(counts::nu_symbolic(d - 1, d) == poly_exact_div(num, X(2) - P(1)));
  }
  CHECK_THROWS_AS(counts::nu_symbolic(1, 3), bts::DomainError);
  CHECK_THROWS_AS(counts::nu_symbolic(4, 3), bts::DomainError);
}

TEST_CASE("nu_eval examples") {
  CHECK(counts::nu_eval(1, 2, 3) == 4);
  CHECK(counts::nu_eval(2, 3, 3) == 28);
  CHECK(counts::nu_eval(3, 3, 5) == 1);
}

TEST_CASE("unitary_order") {
  CHECK(counts::unitary_order(1) == X(1) + P(1));
  CHECK(counts::unitary_order(2).eval(3) == 96);
  IntPoly d3 = X(3) * (X(1) + P(1)) * (X(2) - P(1)) * (X(3) + P(1));
  CHECK(counts::unitary_order(3) == d3);
}

TEST_CASE("parabolic_order") {
  CHECK(counts::parabolic_order(2, 2) == counts::unitary_order(2));
  CHECK(counts::parabolic_order(1, 2) == X(1) * (X(2) - P(1)));
  mpz_class u3 = counts::unitary_order(3).eval(3);
  CHECK(counts::parabolic_order(2, 3).eval(3) == u3 / 28);
}

TEST_CASE("coset identity for all d <= 12") {
  for (int d = 0; d <= 12; ++d) {
    for (int r = (d + 1) / 2; r <= d; ++r) {
      CHECK(counts::nu_symbolic(r, d) * counts::parabolic_order(r, d) == counts::unitary_order(d));
    }
  }
}

TEST_CASE("strata counts") {
  CHECK(counts::strata_above(3, 0, 1) == X(1) + P(1));
  for (int theta = 0; theta <= 5; ++theta) CHECK(counts::strata_below(theta, theta) == P(1));
  CHECK(counts::strata_above(5, 0, 2) == (X(1) + P(1)) * (X(3) + P(1)));
  CHECK_THROWS_AS(counts::strata_above(5, 2, 1), bts::DomainError);
  CHECK_THROWS_AS(counts::strata_below(1, 2), bts::DomainError);
}

TEST_CASE("strata_above product forms") {
  for (int n = 1; n <= 9; n += 2) {
    int m = (n - 1) / 2;
    for (int theta = 0; theta <= m; ++theta) {
      IntPoly prod(1);
      for (int j = 0; j <= m - theta - 1; ++j) prod = prod * (X(2 * j + 1) + P(1));
      CHECK(counts::strata_above(n, theta, m) == prod);
    }
  }
  for (int n = 2; n <= 10; n += 2) {
    int m = (n - 1) / 2;
    for (int theta = 0; theta <= m; ++theta) {
      IntPoly prod(1);
      for (int j = 1; j <= m - theta; ++j) prod = prod * (X(2 * j + 1) + P(1));
      CHECK(counts::strata_above(n, theta, m) == prod);
    }
  }
}
