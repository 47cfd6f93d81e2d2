#include "tautring/symmetry.hpp"

namespace tautring {

namespace {

std::vector<Poly> var_images(const Ctx& ctx, const std::vector<int>& perm) {
  const int nv = ctx.namb();
  std::vector<Poly> img(nv);
  img[ctx.amb_k2()] = Poly::var(ctx.amb_k2(), nv);
  img[ctx.amb_k3()] = Poly::var(ctx.amb_k3(), nv);
  for (int p = 0; p < ctx.nparts(); ++p) {
    int q = ctx.parts.act(perm, p);
    img[ctx.amb_D(p)] = Poly::var(ctx.amb_D(q), nv);
    Side image_side = ctx.parts.act_side(perm, ctx.parts.part(p).canon);
    if (image_side == ctx.parts.part(q).canon) {
      img[ctx.amb_F(p)] = Poly::var(ctx.amb_F(q), nv);
    } else {
      img[ctx.amb_F(p)] = -Poly::var(ctx.amb_D(q), nv, 2) - Poly::var(ctx.amb_F(q), nv);
    }
  }
  return img;
}

}  // namespace

Poly act_on_poly(const Ctx& ctx, const std::vector<int>& perm, const Poly& x) {
  const int nv = ctx.namb();
  std::vector<Poly> img = var_images(ctx, perm);
  return x.map_monomials(nv, [&](const std::vector<std::uint8_t>& e) {
    Poly m = Poly::constant(Rat(1), nv);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * img[i].pow(e[i]);
    return m;
  });
}

Poly reynolds(const Ctx& ctx, const Poly& x) {
  const auto perms = all_permutations(ctx.d);
  Poly acc = Poly::zero(ctx.namb());
  for (const auto& perm : perms) acc = acc + act_on_poly(ctx, perm, x);
  return acc.scaled(rat(1, long(perms.size())));
}

long invariant_dim(const Quotient& q, int k) { return long(invariant_basis(q, k).size()); }

std::vector<SRow> invariant_basis(const Quotient& q, int k) {
  const Ctx& ctx = q.ctx();
  Echelon ech;
  for (const auto& m : q.std_monos(k)) {
    Poly sym = reynolds(ctx, Poly::monomial(m, Rat(1)));
    ech.insert(q.nf_row(sym));
  }
  std::vector<SRow> out;
  out.reserve(ech.rank());
  for (const auto& [pivot, row] : ech.rows()) out.push_back(row);
  return out;
}

}  // namespace tautring
