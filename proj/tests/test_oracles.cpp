#include <doctest.h>

#include "tautring/oracles.hpp"

using namespace tautring;

TEST_CASE("gaussian binomial coefficient lists") {
  CHECK(gaussian_binomial_coeffs(2) == std::vector<long>{1, 1, 1});
  CHECK(gaussian_binomial_coeffs(3) == std::vector<long>{1, 1, 2, 1, 1});
  CHECK(gaussian_binomial_coeffs(4) == std::vector<long>{1, 1, 2, 2, 2, 1, 1});
  CHECK(gaussian_binomial_coeffs(5) == std::vector<long>{1, 1, 2, 2, 3, 2, 2, 1, 1});

  // Palindromic and summing to the binomial (n+1 choose 2).
  for (int n = 2; n <= 7; ++n) {
    const auto v = gaussian_binomial_coeffs(n);
    long sum = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] == v[v.size() - 1 - i]);
      sum += v[i];
    }
    CHECK(sum == long(n + 1) * n / 2);
  }
}

TEST_CASE("plane curve counts") {
  const auto n = kontsevich_numbers(5);
  REQUIRE(n.size() == 5);
  CHECK(n[0] == 1);
  CHECK(n[1] == 1);
  CHECK(n[2] == 12);
  CHECK(n[3] == 620);
  CHECK(n[4] == mpz_class("87304"));
}

TEST_CASE("line space integrals") {
  const auto g = grassmann_line_integrals();
  CHECK(g[0] == 2);
  CHECK(g[1] == 1);
  CHECK(g[2] == 1);
}

TEST_CASE("degree-two counts in 3-space") {
  const auto c = p3_degree2_counts();
  CHECK(c[0] == 92);  // conics meeting 8 general lines
  CHECK(c[1] == 18);
  CHECK(c[2] == 4);
  CHECK(c[3] == 1);
  CHECK(c[4] == 0);  // conics through 4 general points are obstructed by planarity
}
