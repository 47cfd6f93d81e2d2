#include "tautring/stratum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tautring {

namespace {

using Exps = std::vector<std::uint8_t>;

Side other_of(const Partition& part, Side g) { return part.canon == g ? part.other() : part.canon; }

void check_side(const Ctx& ctx, int p, Side g, const char* who) {
  const Partition& part = ctx.parts.part(p);
  if (g != part.canon && g != part.other())
    throw std::invalid_argument(std::string(who) + ": side does not belong to partition");
}

// A monomial dies on the stratum of P when its divisor support contains a
// pair of crossing partitions (P itself counts as part of the support).
bool strat_mono_dies(const Ctx& ctx, int p, const Exps& exps) {
  std::vector<int> qs;
  for (int q = 0; q < ctx.nparts(); ++q) {
    int idx = ctx.st_delta(q);
    if (idx < int(exps.size()) && exps[size_t(idx)] > 0) qs.push_back(q);
  }
  for (int q : qs)
    if (q != p && ctx.parts.crossing(q, p)) return true;
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = i + 1; j < qs.size(); ++j)
      if (ctx.parts.crossing(qs[i], qs[j])) return true;
  return false;
}

}  // namespace

Rat n_psi(int a, int d) {
  // (a^2/d^2) (6 - 4a/d) = a^2 (6d - 4a) / d^3.
  long la = a, ld = d;
  return rat(la * la * (6 * ld - 4 * la), ld * ld * ld);
}

Rat n_pair_nested(int a, int b, int d) {
  // (a^2/d^2) (6b/d - 2a/d - 3b^2/d^2) = a^2 (6bd - 2ad - 3b^2) / d^4.
  long la = a, lb = b, ld = d;
  return rat(la * la * (6 * lb * ld - 2 * la * ld - 3 * lb * lb), ld * ld * ld * ld);
}

Rat n_pair_disjoint(int a, int b, int d) {
  long la = a, lb = b, ld = d;
  return rat(-3 * la * la * lb * lb, ld * ld * ld * ld);
}

// The two sides' quadratics must be exchanged by psi -> -delta - psi, which
// pins every sign below; the derivation in psi_quadratic() reproduces these
// closed forms on the canonical side (asserted in the unit tests).
Poly b_poly(const Ctx& ctx, int p, Side h, SubsetsMode mode) {
  check_side(ctx, p, h, "b_poly");
  const int d = ctx.d;
  const int nv = ctx.namb();
  const Side hbar = other_of(ctx.parts.part(p), h);

  Poly out = Poly::var(ctx.amb_D(p), nv).scaled(n_psi(side_size(hbar), d));
  auto add_side_sum = [&](Side g, int sign) {
    for (Side a : PartTable::proper_subsets(g)) {
      int pa = ctx.parts.index_of_side(a);
      out = out + Poly::var(ctx.amb_D(pa), nv).scaled(n_psi(side_size(a), d) * sign);
    }
    if (mode == SubsetsMode::Inclusive)
      out = out + Poly::var(ctx.amb_D(p), nv).scaled(n_psi(side_size(g), d) * sign);
  };
  add_side_sum(h, -1);
  add_side_sum(hbar, 1);
  return out;
}

Poly c_poly(const Ctx& ctx, int p, Side h, SubsetsMode mode, PairCount pc) {
  check_side(ctx, p, h, "c_poly");
  const int d = ctx.d;
  const int nv = ctx.namb();
  const Side hbar = other_of(ctx.parts.part(p), h);
  const long ld = d;

  auto Dv = [&](int q) { return Poly::var(ctx.amb_D(q), nv); };

  Poly out = Poly::var(ctx.amb_k2(), nv, 2).scaled(rat(3, ld * ld * ld * ld)) +
             Poly::var(ctx.amb_k3(), nv).scaled(rat(-4, ld * ld * ld));

  // Subsets of one side; the Inclusive mode also takes the full side, whose
  // partition is P itself.
  auto subsets_of = [&](Side g) {
    std::vector<Side> subs = PartTable::proper_subsets(g);
    if (mode == SubsetsMode::Inclusive) subs.push_back(g);
    return subs;
  };
  std::vector<Side> subs = subsets_of(h);
  {
    const std::vector<Side> rest = subsets_of(hbar);
    subs.insert(subs.end(), rest.begin(), rest.end());
  }

  // Diagonal terms N_{h',h'} D_{P'}^2 over subsets of either side.
  for (Side a : subs) {
    int pa = ctx.parts.index_of_side(a);
    out = out + Dv(pa).pow(2).scaled(n_pair_nested(side_size(a), side_size(a), d));
  }

  // Pair terms over distinct subsets drawn from either side (a subset of h
  // and a subset of hbar form a disjoint pair).  Crossing pairs carry no
  // defined coefficient and their divisor product vanishes, so they are
  // skipped.
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) {
      Side x = subs[i], y = subs[j];
      int px = ctx.parts.index_of_side(x);
      int py = ctx.parts.index_of_side(y);
      if (ctx.parts.crossing(px, py)) continue;
      Rat coeff;
      if ((x & y) == 0) {
        coeff = n_pair_disjoint(side_size(x), side_size(y), d);
      } else if ((x & y) == x || (x & y) == y) {
        Side lo = ((x & y) == x) ? x : y;
        Side hi = (lo == x) ? y : x;
        coeff = n_pair_nested(side_size(lo), side_size(hi), d);
      } else {
        continue;  // overlapping but not nested: crossing, already skipped
      }
      if (pc == PairCount::Ordered) coeff *= 2;
      out = out + (Dv(px) * Dv(py)).scaled(coeff);
    }

  // Terms involving the partition's own divisor.
  out = out + Dv(p).pow(2).scaled(n_pair_nested(side_size(hbar), side_size(hbar), d));
  for (Side a : subsets_of(h)) {
    int pa = ctx.parts.index_of_side(a);
    out = out +
          (Dv(p) * Dv(pa)).scaled(n_pair_disjoint(side_size(a), side_size(hbar), d) * 2);
  }
  for (Side a : subsets_of(hbar)) {
    int pa = ctx.parts.index_of_side(a);
    out = out +
          (Dv(p) * Dv(pa)).scaled(n_pair_nested(side_size(a), side_size(hbar), d) * 2);
  }
  return out;
}

Poly kh2_strat(const Ctx& ctx, int p, Side g) {
  check_side(ctx, p, g, "kh2_strat");
  const int d = ctx.d;
  const int nv = ctx.nstrat();
  const Partition& part = ctx.parts.part(p);
  const Side gbar = other_of(part, g);
  const long e = side_size(g), eb = side_size(gbar), ld = d;

  Poly psi_g = (g == part.canon)
                   ? Poly::var(ctx.st_psi(), nv)
                   : -(Poly::var(ctx.st_delta(p), nv) + Poly::var(ctx.st_psi(), nv));

  Poly out = psi_g.scaled(Rat(e * eb));
  out = out - Poly::var(ctx.st_delta(p), nv).scaled(rat(e * eb * eb, ld));
  out = out + Poly::var(ctx.st_k2(), nv).scaled(rat(e, ld));
  for (Side a : PartTable::proper_subsets(g)) {
    long la = side_size(a);
    int pa = ctx.parts.index_of_side(a);
    out = out + Poly::var(ctx.st_delta(pa), nv).scaled(rat(la * la * eb, ld));
  }
  for (Side a : PartTable::proper_subsets(gbar)) {
    long la = side_size(a);
    int pa = ctx.parts.index_of_side(a);
    out = out - Poly::var(ctx.st_delta(pa), nv).scaled(rat(la * la * e, ld));
  }
  return out;
}

Poly ev_strat(const Ctx& ctx, int p, Side g) {
  check_side(ctx, p, g, "ev_strat");
  const int nv = ctx.nstrat();
  const Partition& part = ctx.parts.part(p);
  const long e = side_size(g);

  Poly psi_g = (g == part.canon)
                   ? Poly::var(ctx.st_psi(), nv)
                   : -(Poly::var(ctx.st_delta(p), nv) + Poly::var(ctx.st_psi(), nv));

  // ev = -1/2 [ e psi_g - (1/e) kh2 - sum_{A proper in g} (|A|^2/e) delta_A ].
  Poly inner = psi_g.scaled(Rat(e)) + kh2_strat(ctx, p, g).scaled(rat(-1, e));
  for (Side a : PartTable::proper_subsets(g)) {
    long la = side_size(a);
    int pa = ctx.parts.index_of_side(a);
    inner = inner + Poly::var(ctx.st_delta(pa), nv).scaled(rat(-la * la, e));
  }
  return inner.scaled(rat(-1, 2));
}

std::pair<Poly, Poly> psi_quadratic(const Ctx& ctx, int p) {
  // Sum the one-pointed quadratic relation over the two sides of the split.
  // For a side g of size e, the relation on the one-pointed space of degree e
  // reads  psi_g^2 - sum_A n_psi(|A|,e) psi_g delta_A + sum_{A,A'} N^e_{AA'}
  // delta_A delta_A' + (3/e^4) kh2_g^2 - (4/e^3) kh3_g = 0,  with A running
  // over proper nonempty subsets of g.  Solving each for kh3_g and adding the
  // two sides eliminates the unknown side kappas, leaving a monic quadratic
  // for the canonical cotangent class.  The construction is symmetric in the
  // two sides, so the resulting rewrite rule is stable under relabeling.
  const int nv = ctx.nstrat();
  const Partition& part = ctx.parts.part(p);
  const Poly k3 = Poly::var(ctx.st_k3(), nv);

  Poly e_total = -k3;
  for (Side g : {part.canon, part.other()}) {
    const long e = side_size(g);
    Poly psi_g = (g == part.canon)
                     ? Poly::var(ctx.st_psi(), nv)
                     : -(Poly::var(ctx.st_delta(p), nv) + Poly::var(ctx.st_psi(), nv));
    Poly side_sum = psi_g * psi_g;
    const std::vector<Side> subs = PartTable::proper_subsets(g);
    for (Side a : subs) {
      int pa = ctx.parts.index_of_side(a);
      side_sum =
          side_sum - (psi_g * Poly::var(ctx.st_delta(pa), nv))
                         .scaled(n_psi(int(side_size(a)), int(e)));
    }
    for (size_t i = 0; i < subs.size(); ++i)
      for (size_t j = i; j < subs.size(); ++j) {
        Side x = subs[i], y = subs[j];
        Rat coeff;
        if (x == y) {
          coeff = n_pair_nested(int(side_size(x)), int(side_size(x)), int(e));
        } else if ((x & y) == 0) {
          coeff = n_pair_disjoint(int(side_size(x)), int(side_size(y)), int(e)) * 2;
        } else if ((x & y) == x || (x & y) == y) {
          Side lo = ((x & y) == x) ? x : y;
          Side hi = (lo == x) ? y : x;
          coeff = n_pair_nested(int(side_size(lo)), int(side_size(hi)), int(e)) * 2;
        } else {
          continue;  // crossing within one side: the product vanishes
        }
        side_sum = side_sum + (Poly::var(ctx.st_delta(ctx.parts.index_of_side(x)), nv) *
                               Poly::var(ctx.st_delta(ctx.parts.index_of_side(y)), nv))
                                  .scaled(coeff);
      }
    const Poly kh2_g = kh2_strat(ctx, p, g);
    side_sum = side_sum + (kh2_g * kh2_g).scaled(rat(3, e * e * e * e));
    e_total = e_total + side_sum.scaled(rat(e * e * e, 4));
  }

  // Split by the power of the cotangent variable and normalize to a monic
  // quadratic  psi^2 + bhat psi + chat = 0.
  const int psi = ctx.st_psi();
  Rat alpha(0);
  Poly bq = Poly::zero(nv), cq = Poly::zero(nv);
  for (const auto& [e, c] : e_total.t) {
    // Monomials supported on crossing divisor pairs vanish identically on the
    // stratum (they enter through the squared side kappas); drop them so the
    // returned coefficients are the exact restriction.
    if (strat_mono_dies(ctx, p, e)) continue;
    if (e[size_t(psi)] == 2) {
      std::vector<std::uint8_t> rest = e;
      rest[size_t(psi)] = 0;
      for (std::uint8_t x : rest)
        if (x != 0) throw std::logic_error("psi_quadratic: non-constant leading term");
      alpha += c;
    } else if (e[size_t(psi)] == 1) {
      std::vector<std::uint8_t> rest = e;
      rest[size_t(psi)] = 0;
      bq = bq + Poly::monomial(std::move(rest), c);
    } else if (e[size_t(psi)] == 0) {
      cq = cq + Poly::monomial(e, c);
    } else {
      throw std::logic_error("psi_quadratic: cubic term in the cotangent class");
    }
  }
  if (alpha == 0) throw std::logic_error("psi_quadratic: degenerate leading coefficient");
  return {bq.scaled(1 / alpha), cq.scaled(1 / alpha)};
}

Poly k0_of_H(const Ctx& ctx) {
  const int nv = ctx.namb();
  const long d = ctx.d;
  Poly out = Poly::var(ctx.amb_k2(), nv).scaled(rat(-1, d));
  for (int p = 0; p < ctx.nparts(); ++p) {
    long e = side_size(ctx.parts.part(p).canon);
    out = out + Poly::var(ctx.amb_D(p), nv).scaled(rat(e * (d - e), d));
  }
  return out;
}

// ---- StratumAlg ------------------------------------------------------------

StratumAlg::StratumAlg(std::shared_ptr<const Ctx> ctx, int p, SubsetsMode subsets,
                       PairCount paircount)
    : ctx_(std::move(ctx)), p_(p), subsets_(subsets), paircount_(paircount) {
  // The rewrite rule for the squared cotangent class is derived from the
  // one-pointed relation on both sides of the split; by construction it is
  // independent of the presentation's counting conventions.
  std::tie(bhat_, chat_) = psi_quadratic(*ctx_, p_);
}

Poly StratumAlg::psi_bar() const {
  const int nv = ctx_->nstrat();
  return -(Poly::var(ctx_->st_delta(p_), nv) + Poly::var(ctx_->st_psi(), nv));
}

Poly StratumAlg::psi_of(Side g) const {
  const Partition& part = ctx_->parts.part(p_);
  if (g == part.canon) return Poly::var(ctx_->st_psi(), ctx_->nstrat());
  if (g == part.other()) return psi_bar();
  throw std::invalid_argument("psi_of: side does not belong to partition");
}

bool StratumAlg::mono_vanishes(const Exps& exps) const {
  return strat_mono_dies(*ctx_, p_, exps);
}

Poly StratumAlg::reduce(Poly x) const {
  const int nv = ctx_->nstrat();
  const int psi = ctx_->st_psi();
  for (;;) {
    Poly kept = Poly::zero(nv);
    bool has_high_psi = false;
    for (const auto& [exps, coeff] : x.t) {
      if (mono_vanishes(exps)) continue;
      Exps e = exps;
      e.resize(nv, 0);
      if (e[psi] >= 2) has_high_psi = true;
      kept = kept + Poly::monomial(std::move(e), coeff);
    }
    x = std::move(kept);
    if (!has_high_psi) return x;
    // Rewrite one power of psi^2 in every offending monomial.
    Poly rule = -(bhat_ * Poly::var(psi, nv)) - chat_;
    Poly next = Poly::zero(nv);
    for (const auto& [exps, coeff] : x.t) {
      Exps e = exps;
      e.resize(nv, 0);
      if (e[psi] >= 2) {
        e[psi] = std::uint8_t(e[psi] - 2);
        next = next + Poly::monomial(std::move(e), coeff) * rule;
      } else {
        next = next + Poly::monomial(std::move(e), coeff);
      }
    }
    x = std::move(next);
  }
}

Poly StratumAlg::lift_to_ambient(const Exps& strat_exps) const {
  Exps amb(ctx_->namb(), 0);
  amb[ctx_->amb_k2()] = strat_exps[ctx_->st_k2()];
  amb[ctx_->amb_k3()] = strat_exps[ctx_->st_k3()];
  for (int q = 0; q < ctx_->nparts(); ++q) amb[ctx_->amb_D(q)] = strat_exps[ctx_->st_delta(q)];
  return Poly::monomial(std::move(amb), Rat(1));
}

Poly StratumAlg::push(const Poly& reduced) const {
  const int nv = ctx_->namb();
  const int psi = ctx_->st_psi();
  Poly out = Poly::zero(nv);
  for (const auto& [exps, coeff] : reduced.t) {
    Exps e = exps;
    e.resize(ctx_->nstrat(), 0);
    if (e[psi] > 1) throw std::invalid_argument("push: stratum class is not reduced");
    int a = e[psi];
    e[psi] = 0;
    int head = (a == 0) ? ctx_->amb_D(p_) : ctx_->amb_F(p_);
    out = out + lift_to_ambient(e).scaled(coeff).mul_var(head);
  }
  return out;
}

Poly StratumAlg::restrict_f_var(int q) const {
  const int nv = ctx_->nstrat();
  if (q == p_)
    return Poly::var(ctx_->st_psi(), nv) * Poly::var(ctx_->st_delta(p_), nv);
  if (ctx_->parts.crossing(p_, q)) return Poly::zero(nv);
  // Orient the pair: hP on P covers the complement of hQ on Q.
  Orientation ori = ctx_->parts.orientation(p_, q);
  const Side qhat = ori.hQ;
  const Side comp_qhat = other_of(ctx_->parts.part(q), qhat);
  Poly dq = Poly::var(ctx_->st_delta(q), nv);
  Poly chain_sum = Poly::zero(nv);
  for (int r : ctx_->parts.chain(p_, q))
    chain_sum = chain_sum + Poly::var(ctx_->st_delta(r), nv);
  Poly towards = -(psi_of(ori.hP) * dq) + dq * chain_sum;
  const Side f_side = ctx_->parts.part(q).canon;
  if (f_side == qhat) return towards;
  if (f_side == comp_qhat) return -dq.pow(2) - towards;
  throw std::logic_error("restrict_f_var: inconsistent orientation");
}

Poly StratumAlg::restrict_amb(const Poly& ambient) const {
  const int nv = ctx_->nstrat();
  Poly out = Poly::zero(nv);
  for (const auto& [exps, coeff] : ambient.t) {
    Exps e = exps;
    e.resize(ctx_->namb(), 0);
    for (int q = 0; q < ctx_->nparts(); ++q)
      if (e[ctx_->amb_F(q)] > 0)
        throw std::invalid_argument(
            "restrict_amb: node variables require the extended restriction");
    bool dead = false;
    Exps se(nv, 0);
    se[ctx_->st_k2()] = e[ctx_->amb_k2()];
    se[ctx_->st_k3()] = e[ctx_->amb_k3()];
    for (int q = 0; q < ctx_->nparts(); ++q) {
      int de = e[ctx_->amb_D(q)];
      if (de == 0) continue;
      if (q != p_ && ctx_->parts.crossing(q, p_)) {
        dead = true;
        break;
      }
      se[ctx_->st_delta(q)] = std::uint8_t(de);
    }
    if (dead) continue;
    out = out + Poly::monomial(std::move(se), coeff);
  }
  return reduce(out);
}

Poly StratumAlg::restrict_ext(const Poly& ambient) const {
  const int nv = ctx_->nstrat();
  Poly out = Poly::zero(nv);
  for (const auto& [exps, coeff] : ambient.t) {
    Exps e = exps;
    e.resize(ctx_->namb(), 0);
    bool dead = false;
    Poly fpart = Poly::constant(coeff, nv);
    for (int q = 0; q < ctx_->nparts() && !dead; ++q) {
      int fe = e[ctx_->amb_F(q)];
      if (fe == 0) continue;
      Poly rf = restrict_f_var(q);
      if (rf.is_zero()) {
        dead = true;
        break;
      }
      fpart = fpart * rf.pow(fe);
    }
    if (dead) continue;
    Exps se(nv, 0);
    se[ctx_->st_k2()] = e[ctx_->amb_k2()];
    se[ctx_->st_k3()] = e[ctx_->amb_k3()];
    for (int q = 0; q < ctx_->nparts(); ++q) {
      int de = e[ctx_->amb_D(q)];
      if (de == 0) continue;
      if (q != p_ && ctx_->parts.crossing(q, p_)) {
        dead = true;
        break;
      }
      se[ctx_->st_delta(q)] = std::uint8_t(de);
    }
    if (dead) continue;
    out = out + Poly::monomial(std::move(se), Rat(1)) * fpart;
  }
  return reduce(out);
}

std::shared_ptr<const StratumAlg> get_stratum(std::shared_ptr<const Ctx> ctx, int p,
                                              SubsetsMode subsets, PairCount paircount) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const StratumAlg>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(ctx->d, p, int(subsets), int(paircount));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const StratumAlg>(ctx, p, subsets, paircount);
  cache.emplace(key, alg);
  return alg;
}

}  // namespace tautring
