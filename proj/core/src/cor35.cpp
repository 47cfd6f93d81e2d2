#include "tautring/cor35.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tautring/vrecursion.hpp"

namespace tautring {

namespace {

// Index (0 canonical, 1 complement) of the singleton side of partition p.
int singleton_side_index(const Ctx& ctx, int p) {
  return side_size(ctx.parts.part(p).canon) == 1 ? 0 : 1;
}

// Node class of the given side of partition p as an ambient polynomial:
// F_P on the canonical side, -D_P^2 - F_P on the complement.
Poly node_class(const Ctx& ctx, int p, Side s) {
  const int nv = ctx.namb();
  Poly f = Poly::var(ctx.amb_F(p), nv);
  if (s == ctx.parts.part(p).canon) return f;
  return -(Poly::var(ctx.amb_D(p), nv, 2)) - f;
}

// Solves sum_j c_j cols[j] = target exactly over the sparse row coordinates;
// free variables are set to zero.  Throws if the system is inconsistent.
std::vector<Rat> solve_exact(const std::vector<SRow>& cols, const SRow& target,
                             const std::string& what) {
  std::vector<int> pos;
  auto note = [&pos](const SRow& r) {
    for (const auto& [c, v] : r) pos.push_back(c);
  };
  for (const auto& r : cols) note(r);
  note(target);
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  auto row_of = [&pos](int c) {
    return int(std::lower_bound(pos.begin(), pos.end(), c) - pos.begin());
  };

  const int nr = int(pos.size());
  const int nc = int(cols.size());
  std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc + 1, Rat(0)));
  for (int j = 0; j < nc; ++j)
    for (const auto& [c, v] : cols[j]) m[row_of(c)][j] = v;
  for (const auto& [c, v] : target) m[row_of(c)][nc] = v;

  std::vector<int> pivot_of_col(nc, -1);
  int r = 0;
  for (int j = 0; j < nc && r < nr; ++j) {
    int pr = -1;
    for (int i = r; i < nr; ++i)
      if (m[i][j] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const Rat lead = m[r][j];
    for (int t = j; t <= nc; ++t) m[r][t] /= lead;
    for (int i = 0; i < nr; ++i) {
      if (i == r || m[i][j] == 0) continue;
      const Rat f = m[i][j];
      for (int t = j; t <= nc; ++t) m[i][t] -= f * m[r][t];
    }
    pivot_of_col[j] = r++;
  }
  for (int i = r; i < nr; ++i)
    if (m[i][nc] != 0)
      throw std::runtime_error(what + ": class is not expressible in the model generators");

  std::vector<Rat> sol(nc, Rat(0));
  for (int j = 0; j < nc; ++j)
    if (pivot_of_col[j] >= 0) sol[j] = m[pivot_of_col[j]][nc];
  return sol;
}

// Rewrites an ambient class as a model polynomial of the same degree, modulo
// the structural ideal; the zero polynomial results when the class lies in
// the structural ideal itself.
Poly rewrite_to_model(const Quotient& sq, const Ctx& ctx, const std::vector<Poly>& images,
                      const VarTable& mtab, const Poly& x, const std::string& what) {
  Poly zero = Poly::zero(mtab.size());
  if (x.is_zero()) return zero;
  const auto deg = x.homogeneous_degree(ctx.amb);
  if (!deg) throw std::invalid_argument(what + ": inhomogeneous class");

  const auto monos = mtab.monomials(*deg);
  std::vector<SRow> cols;
  cols.reserve(monos.size());
  for (const auto& e : monos) {
    Poly img = Poly::constant(Rat(1), ctx.namb());
    for (int i = 0; i < mtab.size(); ++i)
      if (e[i]) img = img * images[i].pow(e[i]);
    cols.push_back(sq.nf_row(img));
  }
  const std::vector<Rat> sol = solve_exact(cols, sq.nf_row(x), what);

  Poly r = zero;
  for (std::size_t j = 0; j < monos.size(); ++j)
    if (sol[j] != 0) r.t.emplace_back(monos[j], sol[j]);
  return r;
}

BuildFlags structural_flags(PairCount pc) {
  BuildFlags fl;
  fl.rel5 = Rel5Mode::Derived;
  fl.subsets = SubsetsMode::Strict;
  fl.paircount = pc;
  return fl;
}

}  // namespace

std::string conventions_str(const Cor35Conventions& c) {
  std::string s = "paircount=";
  s += (c.paircount == PairCount::Ordered) ? "ordered" : "unordered";
  s += " tau=";
  s += (c.tau == TauConv::TwoElementSides) ? "two-element" : "singleton";
  s += " s2=";
  s += (c.s2 == S2Count::Unordered) ? "unordered" : "ordered";
  return s;
}

VarTable model_table() {
  VarTable tab;
  tab.vars = {
      {"k2", VK::Kappa2, -1, 1},    {"sigma1", VK::Model, -1, 1},
      {"rho", VK::Model, -1, 2},    {"sigma2", VK::Model, -1, 2},
      {"tau", VK::Model, -1, 2},    {"sigma3", VK::Model, -1, 3},
  };
  return tab;
}

std::vector<Poly> model_images(const Ctx& ctx, const Cor35Conventions& conv) {
  if (ctx.d != 3) throw std::invalid_argument("the invariant model requires degree 3");
  const int nv = ctx.namb();
  const int m = ctx.nparts();

  Poly k2 = Poly::var(Ctx::amb_k2(), nv);
  Poly k3 = Poly::var(Ctx::amb_k3(), nv);

  Poly sigma1 = Poly::zero(nv);
  for (int p = 0; p < m; ++p) sigma1 = sigma1 + Poly::var(ctx.amb_D(p), nv);

  Poly s2sum = Poly::zero(nv);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      s2sum = s2sum + Poly::var(ctx.amb_D(p), nv).mul_var(ctx.amb_D(q));
  if (conv.s2 == S2Count::Ordered) s2sum = s2sum.scaled(Rat(2));
  Poly sigma2 = sigma1 * sigma1 - s2sum.scaled(Rat(4));

  Poly sigma3 = Poly::constant(Rat(1), nv);
  for (int p = 0; p < m; ++p) sigma3 = sigma3.mul_var(ctx.amb_D(p));

  Poly tau = Poly::zero(nv);
  for (int p = 0; p < m; ++p) {
    const Partition& part = ctx.parts.part(p);
    const int si = singleton_side_index(ctx, p);
    const Side singleton = (si == 0) ? part.canon : part.other();
    const Side twoelt = (si == 0) ? part.other() : part.canon;
    tau = tau + node_class(ctx, p, conv.tau == TauConv::TwoElementSides ? twoelt : singleton);
  }
  tau = tau.scaled(rat(1, 2));

  Poly rho = (tau.scaled(Rat(7)) + (sigma1 * sigma1).scaled(rat(1, 4)) +
              sigma2.scaled(rat(1, 2)) + (k2 * k2).scaled(rat(1, 4)) - k3)
                 .scaled(rat(-1, 27));

  return {k2, sigma1, rho, sigma2, tau, sigma3};
}

Poly model_to_ambient(const Ctx& ctx, const Poly& x, const Cor35Conventions& conv) {
  const std::vector<Poly> images = model_images(ctx, conv);
  return x.map_monomials(ctx.namb(), [&](const std::vector<std::uint8_t>& e) {
    Poly r = Poly::constant(Rat(1), ctx.namb());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) r = r * images[i].pow(e[i]);
    return r;
  });
}

std::vector<Relation> model_fixed_relations() {
  const VarTable tab = model_table();
  const int nv = tab.size();
  const int rho = tab.find("rho"), s2 = tab.find("sigma2"), tau = tab.find("tau"),
            s3 = tab.find("sigma3");
  Poly vtau = Poly::var(tau, nv), vs3 = Poly::var(s3, nv);
  Poly vrho = Poly::var(rho, nv), vs2 = Poly::var(s2, nv);
  return {
      {"model-fixed-tau-sigma3", vtau * vs3},
      {"model-fixed-rho-sigma3", vrho * vs3},
      {"model-fixed-tau-square", vtau * vtau - vrho * vs2},
  };
}

std::vector<Cor35Conventions> conventions_passing_fixed_relations() {
  std::vector<Cor35Conventions> out;
  const std::vector<Relation> fixed = model_fixed_relations();
  for (PairCount pc : {PairCount::Ordered, PairCount::Unordered}) {
    Presentation sp = build_structural(3, structural_flags(pc));
    const Ctx& ctx = *sp.ctx;
    Quotient sq(sp);
    sq.extend(5);
    for (TauConv tc : {TauConv::TwoElementSides, TauConv::SingletonSides}) {
      for (S2Count sc : {S2Count::Unordered, S2Count::Ordered}) {
        Cor35Conventions conv{pc, tc, sc};
        bool ok = true;
        for (const auto& rel : fixed)
          if (!sq.is_zero_mod(model_to_ambient(ctx, rel.poly, conv))) {
            ok = false;
            break;
          }
        if (ok) out.push_back(conv);
      }
    }
  }
  return out;
}

ModelBuild build_model(int n, const Cor35Conventions& conv) {
  if (n < 1) throw std::invalid_argument("build_model requires n >= 1");
  Presentation sp = build_structural(3, structural_flags(conv.paircount));
  std::shared_ptr<const Ctx> ctx = sp.ctx;
  Quotient sq(sp);
  sq.extend(n + 2);

  const std::vector<Poly> images = model_images(*ctx, conv);
  const VarTable mtab = model_table();

  VRecursion vr(ctx, SubsetsMode::Strict, conv.paircount);
  const VData v = vr.at_level(n + 1);

  const int nv = ctx->namb();
  Poly u_dgamma = Poly::zero(nv);
  Poly u_psik = Poly::zero(nv);
  Poly u_gamma = Poly::zero(nv);
  for (int p = 0; p < ctx->nparts(); ++p) {
    const int si = singleton_side_index(*ctx, p);
    const StratumAlg& st = vr.stratum(p);
    u_dgamma = u_dgamma + st.push(v.gamma[p][si]).mul_var(ctx->amb_D(p));
    u_psik = u_psik + st.push(v.psik[p][si]);
    u_gamma = u_gamma + st.push(v.gamma[p][si]);
  }
  const Poly u_k0 = vr.k0_of_level(v);
  const Poly& u_open = v.open;

  ModelBuild mb;
  mb.n = n;
  mb.conv = conv;
  mb.relations = model_fixed_relations();
  const std::pair<std::string, const Poly*> levels[] = {
      {"model-level-dgamma", &u_dgamma}, {"model-level-psik", &u_psik},
      {"model-level-gamma", &u_gamma},   {"model-level-k0", &u_k0},
      {"model-level-open", &u_open},
  };
  for (const auto& [label, cls] : levels) {
    Poly r = rewrite_to_model(sq, *ctx, images, mtab, *cls, label);
    if (!r.is_zero()) mb.relations.push_back({label, std::move(r)});
  }
  return mb;
}

std::vector<long> model_hilbert(const ModelBuild& mb, int max_degree) {
  Quotient q(model_table(), mb.relations);
  q.extend(max_degree);
  return q.hilbert();
}

}  // namespace tautring
