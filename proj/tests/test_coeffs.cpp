#include <doctest.h>

#include "tautring/coefficients.hpp"
#include "tautring/stratum.hpp"

using namespace tautring;

namespace {
Side side_of(std::initializer_list<int> elems) {
  Side s = 0;
  for (int e : elems) s |= Side(1u) << (e - 1);
  return s;
}

Poly sv(const Ctx& ctx, int i, int exp = 1) { return Poly::var(i, ctx.nstrat(), exp); }
Poly av(const Ctx& ctx, int i, int exp = 1) { return Poly::var(i, ctx.namb(), exp); }
}  // namespace

TEST_CASE("divisor coefficients") {
  CHECK(n_psi(1, 2) == Rat(1));
  CHECK(n_psi(1, 3) == rat(14, 27));
  CHECK(n_psi(2, 3) == rat(40, 27));

  CHECK(n_pair_nested(1, 1, 2) == rat(5, 16));
  CHECK(n_pair_nested(1, 2, 3) == rat(2, 9));
  CHECK(n_pair_nested(1, 1, 3) == rat(1, 9));
  CHECK(n_pair_nested(2, 2, 3) == rat(16, 27));
  CHECK(n_pair_disjoint(1, 1, 3) == rat(-1, 27));
}

TEST_CASE("b polynomial") {
  auto ctx = get_ctx(2);
  const Poly b = b_poly(*ctx, 0, side_of({1}), SubsetsMode::Strict);
  CHECK((b - av(*ctx, ctx->amb_D(0))).is_zero());  // b = D
}

TEST_CASE("b is conjugation closed") {
  // The quadratics of the two sides of one stratum must be exchanged by the
  // substitution psi -> -delta - psi, which forces b(h) + b(hbar) = 2 D.
  for (int d : {2, 3, 4}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      const Partition& part = ctx->parts.part(p);
      const Poly sum = b_poly(*ctx, p, part.canon, SubsetsMode::Strict) +
                       b_poly(*ctx, p, part.other(), SubsetsMode::Strict);
      CHECK((sum - av(*ctx, ctx->amb_D(p)).scaled(Rat(2))).is_zero());
    }
  }
}

TEST_CASE("c polynomial frozen values") {
  auto c2 = get_ctx(2);
  const Poly c = c_poly(*c2, 0, side_of({1}), SubsetsMode::Strict, PairCount::Ordered);
  const Poly want2 = av(*c2, Ctx::amb_k2(), 2).scaled(rat(3, 16)) -
                     av(*c2, Ctx::amb_k3()).scaled(rat(1, 2)) +
                     av(*c2, c2->amb_D(0), 2).scaled(rat(5, 16));
  CHECK((c - want2).is_zero());

  auto c3 = get_ctx(3);
  const Poly cc = c_poly(*c3, 0, side_of({1}), SubsetsMode::Strict, PairCount::Ordered);
  const Poly da = av(*c3, c3->amb_D(0)), db = av(*c3, c3->amb_D(1)), dc = av(*c3, c3->amb_D(2));
  const Poly want3 = av(*c3, Ctx::amb_k2(), 2).scaled(rat(1, 27)) -
                     av(*c3, Ctx::amb_k3()).scaled(rat(4, 27)) + (da * da).scaled(rat(16, 27)) +
                     (db * db + dc * dc).scaled(rat(1, 9)) +
                     (da * (db + dc)).scaled(rat(4, 9)) - (db * dc).scaled(rat(2, 27));
  CHECK((cc - want3).is_zero());
}

TEST_CASE("quadratic coefficients match the two-sided derivation") {
  // b_poly / c_poly are closed forms; psi_quadratic derives the same monic
  // quadratic from the one-pointed relation summed over both sides.  The
  // canonical side must reproduce the derived pair exactly, and the other
  // side must carry the conjugate data under psi -> -delta - psi.
  for (int d : {2, 3, 4}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      const auto [bhat, chat] = psi_quadratic(*ctx, p);
      auto lift = [&](const Poly& x) {
        return x.map_monomials(ctx->namb(), [&](const std::vector<std::uint8_t>& e) {
          REQUIRE(e[size_t(Ctx::st_psi())] == 0);
          std::vector<std::uint8_t> amb(size_t(ctx->namb()), 0);
          amb[size_t(Ctx::amb_k2())] = e[size_t(Ctx::st_k2())];
          amb[size_t(Ctx::amb_k3())] = e[size_t(Ctx::st_k3())];
          for (int q = 0; q < ctx->nparts(); ++q)
            amb[size_t(ctx->amb_D(q))] = e[size_t(ctx->st_delta(q))];
          return Poly::monomial(std::move(amb), Rat(1));
        });
      };
      const Partition& part = ctx->parts.part(p);
      const Poly b = b_poly(*ctx, p, part.canon, SubsetsMode::Strict);
      const Poly c = c_poly(*ctx, p, part.canon, SubsetsMode::Strict, PairCount::Ordered);
      CHECK((b - lift(bhat)).is_zero());
      CHECK((c - lift(chat)).is_zero());

      // Conjugate side: b' = 2D - b and c' = c + D^2 - b D.
      const Poly bb = b_poly(*ctx, p, part.other(), SubsetsMode::Strict);
      const Poly cc = c_poly(*ctx, p, part.other(), SubsetsMode::Strict, PairCount::Ordered);
      const Poly dP = av(*ctx, ctx->amb_D(p));
      CHECK((bb - (dP.scaled(Rat(2)) - b)).is_zero());
      CHECK((cc - (c + dP * dP - b * dP)).is_zero());
    }
  }
}

TEST_CASE("side kappa of the hyperplane square") {
  auto c2 = get_ctx(2);
  const Poly k2_2 = kh2_strat(*c2, 0, side_of({1}));
  const Poly want2 = sv(*c2, Ctx::st_psi()) + sv(*c2, c2->st_delta(0)).scaled(rat(1, 2)) +
                     sv(*c2, Ctx::st_k2()).scaled(rat(1, 2));
  CHECK((k2_2 - want2).is_zero());

  auto c3 = get_ctx(3);
  const Poly g1 = kh2_strat(*c3, 0, side_of({1}));
  const Poly want_g1 = sv(*c3, Ctx::st_psi()).scaled(Rat(2)) +
                       sv(*c3, c3->st_delta(0)).scaled(rat(4, 3)) +
                       sv(*c3, Ctx::st_k2()).scaled(rat(1, 3)) +
                       (sv(*c3, c3->st_delta(1)) + sv(*c3, c3->st_delta(2))).scaled(rat(1, 3));
  CHECK((g1 - want_g1).is_zero());

  const Poly g23 = kh2_strat(*c3, 0, side_of({2, 3}));
  const Poly want_g23 = -sv(*c3, Ctx::st_psi()).scaled(Rat(2)) -
                        sv(*c3, c3->st_delta(0)).scaled(rat(4, 3)) +
                        sv(*c3, Ctx::st_k2()).scaled(rat(2, 3)) -
                        (sv(*c3, c3->st_delta(1)) + sv(*c3, c3->st_delta(2))).scaled(rat(1, 3));
  CHECK((g23 - want_g23).is_zero());
}

TEST_CASE("side kappa sum rule") {
  for (int d : {2, 3, 4}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      const Partition& part = ctx->parts.part(p);
      const Poly total = kh2_strat(*ctx, p, part.canon) + kh2_strat(*ctx, p, part.other());
      CHECK((total - sv(*ctx, Ctx::st_k2())).is_zero());
    }
  }
}

TEST_CASE("node evaluation class") {
  auto c2 = get_ctx(2);
  const Poly ev2 = ev_strat(*c2, 0, side_of({1}));
  const Poly want2 = sv(*c2, c2->st_delta(0)).scaled(rat(1, 4)) +
                     sv(*c2, Ctx::st_k2()).scaled(rat(1, 4));
  CHECK((ev2 - want2).is_zero());

  auto c3 = get_ctx(3);
  const Poly ev3 = ev_strat(*c3, 0, side_of({1}));
  const Poly want3 = sv(*c3, Ctx::st_psi()).scaled(rat(1, 2)) +
                     sv(*c3, c3->st_delta(0)).scaled(rat(2, 3)) +
                     sv(*c3, Ctx::st_k2()).scaled(rat(1, 6)) +
                     (sv(*c3, c3->st_delta(1)) + sv(*c3, c3->st_delta(2))).scaled(rat(1, 6));
  CHECK((ev3 - want3).is_zero());
}

TEST_CASE("node evaluation class is side independent") {
  for (int d : {2, 3, 4}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      const Partition& part = ctx->parts.part(p);
      const Poly a = ev_strat(*ctx, p, part.canon);
      const Poly b = ev_strat(*ctx, p, part.other());
      CHECK((a - b).is_zero());
    }
  }
}

TEST_CASE("side kappa against evaluation and cotangent data") {
  // kh2(g) = 2|g| ev + |g|^2 psi_g - sum over proper subsets A of g of
  // |A|^2 delta_{P_A}.
  for (int d : {2, 3, 4}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      auto st = get_stratum(ctx, p, SubsetsMode::Strict, PairCount::Ordered);
      for (Side g : {ctx->parts.part(p).canon, ctx->parts.part(p).other()}) {
        const long a = side_size(g);
        Poly rhs = ev_strat(*ctx, p, g).scaled(Rat(2 * a)) + st->psi_of(g).scaled(Rat(a * a));
        for (Side sub : PartTable::proper_subsets(g)) {
          const int pa = ctx->parts.index_of_side(sub);
          const long s = side_size(sub);
          rhs = rhs - sv(*ctx, ctx->st_delta(pa)).scaled(Rat(s * s));
        }
        CHECK((kh2_strat(*ctx, p, g) - rhs).is_zero());
      }
    }
  }
}

TEST_CASE("one-node kappa of the hyperplane") {
  auto c2 = get_ctx(2);
  const Poly k0_2 = k0_of_H(*c2);
  const Poly want2 = -av(*c2, Ctx::amb_k2()).scaled(rat(1, 2)) +
                     av(*c2, c2->amb_D(0)).scaled(rat(1, 2));
  CHECK((k0_2 - want2).is_zero());

  auto c3 = get_ctx(3);
  Poly want3 = -av(*c3, Ctx::amb_k2()).scaled(rat(1, 3));
  for (int p = 0; p < 3; ++p) want3 = want3 + av(*c3, c3->amb_D(p)).scaled(rat(2, 3));
  CHECK((k0_of_H(*c3) - want3).is_zero());
}
