#include "tautring/lemma34.hpp"

#include <stdexcept>

#include "tautring/coefficients.hpp"
#include "tautring/stratum.hpp"
#include "tautring/symmetry.hpp"

namespace tautring {

namespace {

Poly row_to_poly(const Quotient& q, int degree, const SRow& row) {
  const auto& monos = q.slice(degree).monos;
  Poly r = Poly::zero(q.table().size());
  for (const auto& [c, v] : row) r.t.emplace_back(monos[c], v);
  return r;
}

int degree_of(const Quotient& q, const Poly& x) {
  const auto d = x.homogeneous_degree(q.table());
  if (!d) throw std::logic_error("inhomogeneous ideal generator");
  return *d;
}

}  // namespace

Lemma34Dims lemma34_dims(int n, Lemma34Alpha alpha, int cap, int jobs) {
  const BuildFlags fl;
  Presentation pres = build_presentation(n, 3, fl);
  std::shared_ptr<const Ctx> ctx = pres.ctx;
  Quotient q(std::move(pres));
  q.extend(cap, jobs);

  const int p0 = 0;
  const Partition& part = ctx->parts.part(p0);
  const Side h = (side_size(part.canon) == 1) ? part.other() : part.canon;
  const auto st = get_stratum(ctx, p0, fl.subsets, fl.paircount);

  Poly a = Poly::constant(Rat(1), ctx->nstrat());
  if (alpha == Lemma34Alpha::SideKappa) a = kh2_strat(*ctx, p0, h);
  a = st->reduce(a);

  const int nstrat = ctx->nstrat();
  const Poly base = st->push(a);
  const Poly with_psi = st->push(st->reduce(st->psi_of(h) * a));
  const Poly with_delta = st->push(st->reduce(Poly::var(ctx->st_delta(p0), nstrat) * a));
  const Poly with_delta2 = st->push(st->reduce(Poly::var(ctx->st_delta(p0), nstrat, 2) * a));

  const auto perms = all_permutations(3);
  std::vector<Poly> orbit;
  orbit.reserve(perms.size());
  for (const auto& s : perms) orbit.push_back(act_on_poly(*ctx, s, base));

  auto symmetrize = [&](const Poly& x) {
    Poly r = Poly::zero(x.nvars());
    for (const auto& s : perms) r = r + act_on_poly(*ctx, s, x);
    return r;
  };
  const std::vector<Poly> rhs_gens = {symmetrize(base), symmetrize(with_psi),
                                      symmetrize(with_delta), symmetrize(with_delta2)};

  Lemma34Dims out;
  for (int k = 0; k <= cap; ++k) {
    Echelon orbit_rows;
    for (const Poly& g : orbit) {
      const int w = degree_of(q, g);
      if (w > k) continue;
      for (const auto& e : ctx->amb.monomials(k - w))
        orbit_rows.insert(q.nf_row(g * Poly::monomial(e, Rat(1))));
    }
    const std::vector<SRow> inv = invariant_basis(q, k);
    Echelon joint = orbit_rows;
    for (const auto& row : inv) joint.insert(row);
    out.lhs.push_back(orbit_rows.rank() + long(inv.size()) - joint.rank());

    Echelon rhs_rows;
    for (const Poly& g : rhs_gens) {
      if (g.is_zero()) continue;
      const int w = degree_of(q, g);
      if (w > k) continue;
      for (const auto& row : invariant_basis(q, k - w))
        rhs_rows.insert(q.nf_row(g * row_to_poly(q, k - w, row)));
    }
    out.rhs.push_back(rhs_rows.rank());
  }
  return out;
}

}  // namespace tautring
