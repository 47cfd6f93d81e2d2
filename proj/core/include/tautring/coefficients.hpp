#pragma once

#include <utility>

#include "tautring/context.hpp"
#include "tautring/poly.hpp"

namespace tautring {

// Conventions that the relation coefficients depend on.  `SubsetsMode`
// controls whether subset sums in the b/c coefficient polynomials range over
// proper nonempty subsets only (Strict, default) or also include the full
// side (Inclusive).  `PairCount` controls whether the quadratic pair sum in
// the c coefficient counts ordered pairs (each unordered pair twice) or
// unordered pairs once.
enum class SubsetsMode { Strict, Inclusive };
enum class PairCount { Ordered, Unordered };

// Divisor-relation coefficients on the one-pointed space of degree-d maps.
Rat n_psi(int a, int d);
Rat n_pair_nested(int a, int b, int d);    // first side contained in second
Rat n_pair_disjoint(int a, int b, int d);  // disjoint sides

// Ambient coefficient polynomials b_h, c_h attached to partition p with the
// chosen side; they appear in the node-class quadratic relation.
Poly b_poly(const Ctx& ctx, int p, Side h, SubsetsMode mode);
Poly c_poly(const Ctx& ctx, int p, Side h, SubsetsMode mode, PairCount pc);

// Stratum-level expansion of the side kappa class k_g(H^2) on the stratum of
// partition p, side g.  Exact closed form; satisfies
//   kh2(p,g) + kh2(p,gbar) == k2   and
//   kh2(p,g) == 2|g| ev(p,g) + |g|^2 psi_g - sum_{A proper in g} |A|^2 delta_{P_A}.
// Monic quadratic satisfied by the canonical cotangent class on the stratum:
// psi^2 + first*psi + second = 0, derived by summing the one-pointed
// relation over the two sides of the split (both returned polynomials are
// over the stratum variables and free of the cotangent class).
std::pair<Poly, Poly> psi_quadratic(const Ctx& ctx, int p);

Poly kh2_strat(const Ctx& ctx, int p, Side g);

// Stratum-level expansion of the node evaluation class ev*(H) on the stratum
// of partition p; independent of the side used to compute it.
Poly ev_strat(const Ctx& ctx, int p, Side g);

// Ambient expansion of the one-node kappa class of H (auxiliary, degree 1).
Poly k0_of_H(const Ctx& ctx);

}  // namespace tautring
