#include <doctest.h>

#include "tautring/lemma34.hpp"

using namespace tautring;

TEST_CASE("ideal comparison for the unit stratum class over the line") {
  const auto dims = lemma34_dims(1, Lemma34Alpha::Unit, 4);
  REQUIRE(dims.lhs.size() == 5);
  REQUIRE(dims.rhs.size() == 5);
  CHECK(dims.lhs == dims.rhs);
  // The ideal starts in positive degree.
  CHECK(dims.lhs[0] == 0);
  // The pushforward of the unit is the boundary divisor, so degree one is hit.
  CHECK(dims.lhs[1] >= 1);
}

TEST_CASE("ideal comparison for the side kappa stratum class over the line") {
  const auto dims = lemma34_dims(1, Lemma34Alpha::SideKappa, 4);
  REQUIRE(dims.lhs.size() == 5);
  CHECK(dims.lhs == dims.rhs);
  CHECK(dims.lhs[0] == 0);
}
