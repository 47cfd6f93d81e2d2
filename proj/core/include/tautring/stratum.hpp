#pragma once

#include <memory>

#include "tautring/coefficients.hpp"
#include "tautring/context.hpp"
#include "tautring/poly.hpp"

namespace tautring {

// Calculus on the boundary stratum attached to one partition P.  Stratum
// classes are polynomials over the stratum variable table of the context:
//   psi (the cotangent class on the canonical side), k2, k3, and one delta
//   variable per partition of the same degree.
// delta_P is the restriction of D_P itself; the cotangent class of the
// non-canonical side is -delta_P - psi and is always expressed that way.
class StratumAlg {
 public:
  StratumAlg(std::shared_ptr<const Ctx> ctx, int p, SubsetsMode subsets,
             PairCount paircount);

  const Ctx& ctx() const { return *ctx_; }
  int part() const { return p_; }

  // Cotangent class of the non-canonical side: -delta_P - psi.
  Poly psi_bar() const;
  // Cotangent class of the given side (must be a side of P).
  Poly psi_of(Side g) const;

  // Normal form on the stratum: drops monomials containing a delta variable
  // crossing P or a pair of mutually crossing delta variables, and rewrites
  // psi^2 -> -bhat*psi - chat until the psi-degree is at most 1.  Idempotent
  // and degree-preserving.
  Poly reduce(Poly x) const;
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

  // Pushforward to the ambient ring of a reduced stratum class: a monomial
  // without psi maps to D_P times its lift, a monomial with psi-degree one
  // maps to F_P times the lift of its psi-free part.  Raises degree by one.
  Poly push(const Poly& reduced) const;

  // Restriction of an ambient class to the stratum.  The public form accepts
  // only kappa and divisor variables (throws std::invalid_argument on any F);
  // the extended form also restricts node classes F_Q via the excess and
  // chain formulas.  Both return reduced stratum classes.
  Poly restrict_amb(const Poly& ambient) const;
  Poly restrict_ext(const Poly& ambient) const;

  // Stratum-level restrictions of the coefficient polynomials of the
  // canonical side (used by the psi^2 rewrite; exposed for tests).
  const Poly& bhat() const { return bhat_; }
  const Poly& chat() const { return chat_; }

 private:
  Poly lift_to_ambient(const std::vector<std::uint8_t>& strat_exps) const;
  Poly restrict_f_var(int q) const;  // extended restriction of F_Q, Q != P
  bool mono_vanishes(const std::vector<std::uint8_t>& exps) const;

  std::shared_ptr<const Ctx> ctx_;
  int p_;
  SubsetsMode subsets_;
  PairCount paircount_;
  Poly bhat_, chat_;
};

// Shared per-(d, p, conventions) instances.
std::shared_ptr<const StratumAlg> get_stratum(std::shared_ptr<const Ctx> ctx,
                                              int p, SubsetsMode subsets,
                                              PairCount paircount);

}  // namespace tautring
