#pragma once

#include <array>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

// Coefficient list of the Gaussian binomial [n+1 choose 2]_q, computed by
// exact polynomial division; the expected Hilbert function of the degree-one
// ring over n-space.
std::vector<long> gaussian_binomial_coeffs(int n);

// Rational plane curve counts N_1..N_dmax from the quadratic recursion with
// binomial weights (N_1 = 1).
std::vector<mpz_class> kontsevich_numbers(int dmax);

// Triple of top intersections on the space of lines in 3-space, computed via
// the hyperplane/point multiplication rules on the six-element basis:
// (incidence^4, incidence^2 * point, point^2) = (2, 1, 1).
std::array<long, 3> grassmann_line_integrals();

// Degree-two counts in 3-space: the five primary invariants with p incidence
// and q point conditions, p + 2q = 8, ordered (8,0),(6,1),(4,2),(2,3),(0,4).
// Solved from the genus-zero associativity equations seeded by the line
// geometry; throws if the overdetermined system is inconsistent.
std::array<mpz_class, 5> p3_degree2_counts();

}  // namespace tautring
