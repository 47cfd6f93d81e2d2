#pragma once

#include <vector>

#include "tautring/quotient.hpp"

namespace tautring {

// Class supported on one boundary stratum used to seed the two ideals being
// compared: the unit of the stratum, or the side kappa class of the
// hyperplane square on the two-element side.
enum class Lemma34Alpha { Unit, SideKappa };

struct Lemma34Dims {
  std::vector<long> lhs;  // dim of (orbit ideal cap invariant part) per degree
  std::vector<long> rhs;  // dim of the ideal spanned by the four symmetrized
                          // generators inside the invariant ring, per degree
};

// For degree-3 maps to n-space: compares, degree by degree up to cap, the
// invariant part of the ideal generated by the orbit of the seeded stratum
// class against the ideal generated inside the invariant ring by the four
// symmetrized classes (the class itself, its product with the side cotangent
// class, and its products with the boundary divisor and its square).
Lemma34Dims lemma34_dims(int n, Lemma34Alpha alpha, int cap, int jobs = 1);

}  // namespace tautring
