#pragma once

#include "tautring/quotient.hpp"

namespace tautring {

// Image of an ambient class under a permutation of the degree set (perm maps
// element i to perm[i-1]).  Kappa classes are fixed; divisor variables map to
// the divisor of the permuted partition; node variables map to the permuted
// node class, rewritten through the two-sided node identity when the
// canonical side flips.
Poly act_on_poly(const Ctx& ctx, const std::vector<int>& perm, const Poly& x);

// Symmetrization: the average over all permutations of the degree set.
Poly reynolds(const Ctx& ctx, const Poly& x);

// Dimension of the invariant part of the quotient slice: the rank of the
// normal forms of the symmetrized standard monomials.
long invariant_dim(const Quotient& q, int k);

// Echelon rows over the slice columns spanning the invariant part.
std::vector<SRow> invariant_basis(const Quotient& q, int k);

}  // namespace tautring
