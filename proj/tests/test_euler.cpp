#include "doctest.h"

#include "tlat/errors.hpp"
#include "tlat/euler.hpp"

using namespace tlat;

TEST_CASE("line-bundle pairing on the plane") {
  CHECK(chi_line(0, 0) == 1);
  CHECK(chi_line(0, 1) == 3);
  CHECK(chi_line(0, 2) == 6);
  CHECK(chi_line(1, 0) == 0);
  CHECK(chi_line(2, 0) == 0);
  CHECK(chi_line(-1, 1) == 6);
  // Depends only on the difference.
  for (int s = -3; s <= 3; ++s) CHECK(chi_line(s, s + 1) == 3);
}

TEST_CASE("two-term Hom complex Euler characteristic") {
  CHECK(homfp_euler({1, 0}, {1, 0}) == 1);
  CHECK(homfp_euler({0, 1}, {0, 1}) == 1);
  CHECK(homfp_euler({2, 1}, {2, 1}) == -1);
  CHECK(homfp_euler({1, 1}, {1, 1}) == -1);
}

TEST_CASE("u = 2w reduces the pairing to minus the product of the w's") {
  for (long long w = 0; w <= 100; ++w)
    for (long long wp : {0LL, 1LL, 7LL, 100LL})
      CHECK(homfp_euler({2 * w, w}, {2 * wp, wp}) == -w * wp);
}

TEST_CASE("the pairing is bilinear") {
  const QuiverRepDims a{3, 2}, b{5, 1}, c{7, 4};
  const QuiverRepDims ab{a.u + b.u, a.w + b.w};
  CHECK(homfp_euler(ab, c) == homfp_euler(a, c) + homfp_euler(b, c));
  CHECK(homfp_euler(c, ab) == homfp_euler(c, a) + homfp_euler(c, b));
}

TEST_CASE("the admissibility equation has no valid solution") {
  for (long long w : {1LL, 5LL, 42LL}) {
    const AdmissibilityReport rep = admissibility_contradiction(w);
    CHECK(rep.w == w);
    CHECK(rep.chi_fg == -w);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.forced_w_prime == 1);
    CHECK(rep.contradiction);
    CHECK_FALSE(rep.narrative.empty());
    // The forced value indeed solves -w = -w * w'.
    CHECK(-w == -w * rep.forced_w_prime);
  }
  const AdmissibilityReport zero = admissibility_contradiction(0);
  CHECK(zero.vacuous);
  CHECK_FALSE(zero.contradiction);
  CHECK_THROWS_AS(admissibility_contradiction(-1), Error);
}
