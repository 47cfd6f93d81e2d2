#pragma once

#include <array>
#include <memory>
#include <vector>

#include "tautring/context.hpp"
#include "tautring/stratum.hpp"

namespace tautring {

// Level data of the tautological recursion.  `top` and `open` are ambient
// classes of degrees level and level-1; `gamma[p][i]` and `psik[p][i]` are
// reduced stratum classes on partition p (index 0 the canonical side, 1 the
// other side) of degrees level-1 and level.  For d = 1 the boundary tables
// are empty.
struct VData {
  int level = 1;
  Poly top;
  Poly open;
  std::vector<std::array<Poly, 2>> gamma;
  std::vector<std::array<Poly, 2>> psik;
};

class VRecursion {
 public:
  VRecursion(std::shared_ptr<const Ctx> ctx, SubsetsMode subsets, PairCount paircount);

  const Ctx& ctx() const { return *ctx_; }
  const StratumAlg& stratum(int p) const { return *strata_[p]; }

  // Level 1: top = k2, open = d, gamma = side sizes, psik = |g| psi_g.
  VData seed() const;
  VData step(const VData& v) const;
  VData at_level(int level) const;  // seed stepped to the given level

  // One-node kappa class of the level: -(2/d) top + (1/d^2) open k2 +
  // sum over oriented sides (|g|^2/d^2) push(gamma[complement side]).
  Poly k0_of_level(const VData& v) const;

  // One-node kappa class of the hyperplane square (same pattern applied to
  // top = k3, open = k2, gamma = the side kappa table of H^2).
  Poly k0_of_h2() const;

  // Node evaluation class on partition p (side independent) and its reduced
  // powers.
  const Poly& ev(int p) const { return ev_[p]; }
  Poly ev_pow(int p, int k) const;

 private:
  std::shared_ptr<const Ctx> ctx_;
  SubsetsMode subsets_;
  PairCount paircount_;
  std::vector<std::shared_ptr<const StratumAlg>> strata_;
  std::vector<Poly> ev_;
  std::vector<std::array<Poly, 2>> kh2_;  // kh2_[p][i]: side kappa of H^2
};

}  // namespace tautring
