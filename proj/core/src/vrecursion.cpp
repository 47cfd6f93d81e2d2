#include "tautring/vrecursion.hpp"

#include <stdexcept>

namespace tautring {

namespace {

Side side_of(const Partition& part, int i) { return i == 0 ? part.canon : part.other(); }

}  // namespace

VRecursion::VRecursion(std::shared_ptr<const Ctx> ctx, SubsetsMode subsets,
                       PairCount paircount)
    : ctx_(std::move(ctx)), subsets_(subsets), paircount_(paircount) {
  for (int p = 0; p < ctx_->nparts(); ++p) {
    strata_.push_back(get_stratum(ctx_, p, subsets_, paircount_));
    ev_.push_back(strata_[p]->reduce(ev_strat(*ctx_, p, ctx_->parts.part(p).canon)));
    const Partition& part = ctx_->parts.part(p);
    kh2_.push_back({strata_[p]->reduce(kh2_strat(*ctx_, p, part.canon)),
                    strata_[p]->reduce(kh2_strat(*ctx_, p, part.other()))});
  }
}

VData VRecursion::seed() const {
  VData v;
  v.level = 1;
  v.top = Poly::var(ctx_->amb_k2(), ctx_->namb());
  v.open = Poly::constant(Rat(ctx_->d), ctx_->namb());
  for (int p = 0; p < ctx_->nparts(); ++p) {
    const Partition& part = ctx_->parts.part(p);
    std::array<Poly, 2> g, pk;
    for (int i = 0; i < 2; ++i) {
      Side s = side_of(part, i);
      g[i] = Poly::constant(Rat(side_size(s)), ctx_->nstrat());
      pk[i] = strata_[p]->reduce(strata_[p]->psi_of(s).scaled(Rat(side_size(s))));
    }
    v.gamma.push_back(std::move(g));
    v.psik.push_back(std::move(pk));
  }
  return v;
}

Poly VRecursion::ev_pow(int p, int k) const {
  Poly r = Poly::constant(Rat(1), ctx_->nstrat());
  for (int i = 0; i < k; ++i) r = strata_[p]->mul(r, ev_[p]);
  return r;
}

Poly VRecursion::k0_of_level(const VData& v) const {
  const long d = ctx_->d;
  Poly out = v.top.scaled(rat(-2, d)) +
             (v.open * Poly::var(ctx_->amb_k2(), ctx_->namb())).scaled(rat(1, d * d));
  for (int p = 0; p < ctx_->nparts(); ++p) {
    const Partition& part = ctx_->parts.part(p);
    for (int i = 0; i < 2; ++i) {
      long e = side_size(side_of(part, i));
      out = out + strata_[p]->push(v.gamma[p][1 - i]).scaled(rat(e * e, d * d));
    }
  }
  return out;
}

Poly VRecursion::k0_of_h2() const {
  const long d = ctx_->d;
  const int nv = ctx_->namb();
  Poly out = Poly::var(ctx_->amb_k3(), nv).scaled(rat(-2, d)) +
             Poly::var(ctx_->amb_k2(), nv, 2).scaled(rat(1, d * d));
  for (int p = 0; p < ctx_->nparts(); ++p) {
    const Partition& part = ctx_->parts.part(p);
    for (int i = 0; i < 2; ++i) {
      long e = side_size(side_of(part, i));
      out = out + strata_[p]->push(kh2_[p][1 - i]).scaled(rat(e * e, d * d));
    }
  }
  return out;
}

VData VRecursion::step(const VData& v) const {
  VData nx;
  nx.level = v.level + 1;
  nx.open = v.top;

  // Open part: the two-node splitting of k(H^level * H^2).
  Poly delta_sum = Poly::zero(ctx_->namb());
  for (int p = 0; p < ctx_->nparts(); ++p)
    for (int i = 0; i < 2; ++i)
      delta_sum =
          delta_sum + strata_[p]->push(strata_[p]->mul(v.gamma[p][i], kh2_[p][1 - i]));
  nx.top = (v.open * k0_of_h2() + k0_of_level(v) * Poly::var(ctx_->amb_k2(), ctx_->namb()) -
            delta_sum)
               .scaled(rat(-1, 2));

  // Boundary part: side kappa classes of H^(level+1) via the one-pointed
  // factor product rule, with interior transfer from the smaller strata.
  for (int p = 0; p < ctx_->nparts(); ++p) {
    const Partition& part = ctx_->parts.part(p);
    const StratumAlg& alg = *strata_[p];
    std::array<Poly, 2> g, pk;
    for (int i = 0; i < 2; ++i) {
      Side s = side_of(part, i);
      long e = side_size(s);
      Poly acc = alg.mul(v.gamma[p][i], ev_[p]);
      acc = acc + ev_pow(p, v.level).scaled(Rat(e));
      acc = acc + alg.mul(alg.psi_of(s), v.gamma[p][i]).scaled(Rat(e));
      for (Side a : PartTable::proper_subsets(s)) {
        int pa = ctx_->parts.index_of_side(a);
        int ia = (ctx_->parts.part(pa).canon == a) ? 0 : 1;
        Poly pushed = strata_[pa]->push(v.gamma[pa][ia]);
        acc = acc - alg.restrict_ext(pushed).scaled(Rat(side_size(a)));
      }
      g[i] = alg.reduce(acc);
      pk[i] = alg.mul(alg.psi_of(s), g[i]);
    }
    nx.gamma.push_back(std::move(g));
    nx.psik.push_back(std::move(pk));
  }
  return nx;
}

VData VRecursion::at_level(int level) const {
  if (level < 1) throw std::invalid_argument("at_level: level must be >= 1");
  VData v = seed();
  while (v.level < level) v = step(v);
  return v;
}

}  // namespace tautring
