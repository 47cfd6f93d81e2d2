#include <doctest.h>

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

TEST_CASE("side cotangent classes") {
  auto ctx = get_ctx(3);
  auto st = get_stratum(ctx, 0, SubsetsMode::Strict, PairCount::Ordered);
  const Poly psi = sv(*ctx, Ctx::st_psi());
  const Poly dlt = sv(*ctx, ctx->st_delta(0));

  CHECK((st->psi_of(side_of({1})) - psi).is_zero());
  CHECK((st->psi_of(side_of({2, 3})) - (-dlt - psi)).is_zero());
  CHECK((st->psi_bar() - (-dlt - psi)).is_zero());
}

TEST_CASE("reduce drops crossing boundary monomials") {
  auto ctx = get_ctx(4);
  const int p = ctx->parts.index_of_side(side_of({1, 2}));
  const int cross = ctx->parts.index_of_side(side_of({1, 3}));
  auto st = get_stratum(ctx, p, SubsetsMode::Strict, PairCount::Ordered);

  CHECK(st->reduce(sv(*ctx, ctx->st_delta(cross))).is_zero());

  // Two deltas both compatible with P but mutually crossing also die.
  const int p1 = ctx->parts.index_of_side(side_of({1}));
  const int q12 = ctx->parts.index_of_side(side_of({1, 2}));
  const int q13 = ctx->parts.index_of_side(side_of({1, 3}));
  auto st1 = get_stratum(ctx, p1, SubsetsMode::Strict, PairCount::Ordered);
  const Poly pair = sv(*ctx, ctx->st_delta(q12)) * sv(*ctx, ctx->st_delta(q13));
  CHECK_FALSE(st1->reduce(sv(*ctx, ctx->st_delta(q12))).is_zero());
  CHECK(st1->reduce(pair).is_zero());
}

TEST_CASE("psi square rewrite terminates, preserves degree, idempotent") {
  auto ctx = get_ctx(3);
  auto st = get_stratum(ctx, 0, SubsetsMode::Strict, PairCount::Ordered);
  const Poly psi = sv(*ctx, Ctx::st_psi());

  for (int k = 2; k <= 5; ++k) {
    const Poly r = st->reduce(psi.pow(k));
    CHECK(*r.homogeneous_degree(ctx->strat) == k);
    // psi-degree at most one afterwards.
    for (const auto& [e, c] : r.t) CHECK(int(e[Ctx::st_psi()]) <= 1);
    CHECK((st->reduce(r) - r).is_zero());
  }
}

TEST_CASE("pushforward of the two side cotangents") {
  for (int d : {2, 3}) {
    auto ctx = get_ctx(d);
    for (int p = 0; p < ctx->nparts(); ++p) {
      auto st = get_stratum(ctx, p, SubsetsMode::Strict, PairCount::Ordered);
      const Poly psi = sv(*ctx, Ctx::st_psi());
      // push(psi) + push(psi_bar) + D^2 = 0: the two-sided node identity.
      const Poly total =
          st->push(st->reduce(psi)) + st->push(st->psi_bar()) + av(*ctx, ctx->amb_D(p), 2);
      CHECK(total.is_zero());
      // push(1) is the boundary divisor itself.
      CHECK((st->push(Poly::constant(Rat(1), ctx->nstrat())) - av(*ctx, ctx->amb_D(p)))
                .is_zero());
      // push(psi) is the node class.
      CHECK((st->push(st->reduce(psi)) - av(*ctx, ctx->amb_F(p))).is_zero());
    }
  }
}

TEST_CASE("ambient restriction") {
  auto ctx = get_ctx(3);
  auto st = get_stratum(ctx, 0, SubsetsMode::Strict, PairCount::Ordered);

  CHECK((st->restrict_amb(av(*ctx, Ctx::amb_k2())) - sv(*ctx, Ctx::st_k2())).is_zero());
  CHECK((st->restrict_amb(av(*ctx, ctx->amb_D(1))) - sv(*ctx, ctx->st_delta(1))).is_zero());
  CHECK_THROWS_AS((void)st->restrict_amb(av(*ctx, ctx->amb_F(1))), std::invalid_argument);
}

TEST_CASE("extended restriction of node classes") {
  auto ctx = get_ctx(3);
  auto stA = get_stratum(ctx, 0, SubsetsMode::Strict, PairCount::Ordered);
  const Poly psi = sv(*ctx, Ctx::st_psi());
  const Poly dA = sv(*ctx, ctx->st_delta(0));
  const Poly dB = sv(*ctx, ctx->st_delta(1));

  // Own node class restricts to psi delta.
  CHECK((stA->restrict_ext(av(*ctx, ctx->amb_F(0))) - stA->reduce(psi * dA)).is_zero());

  // Node of the partition {1,2}|{3} seen from the stratum of {1}|{2,3}:
  // psi delta_B + 2 delta_A delta_B + delta_B^2.
  const Poly want =
      stA->reduce(psi * dB + (dA * dB).scaled(Rat(2)) + dB * dB);
  CHECK((stA->restrict_ext(av(*ctx, ctx->amb_F(1))) - want).is_zero());

  // Crossing node classes restrict to zero (d = 4).
  auto ctx4 = get_ctx(4);
  const int p12 = ctx4->parts.index_of_side(side_of({1, 2}));
  const int p13 = ctx4->parts.index_of_side(side_of({1, 3}));
  auto st12 = get_stratum(ctx4, p12, SubsetsMode::Strict, PairCount::Ordered);
  CHECK(st12->restrict_ext(Poly::var(ctx4->amb_F(p13), ctx4->namb())).is_zero());
}

TEST_CASE("restriction is a ring map into the reduced algebra") {
  auto ctx = get_ctx(3);
  auto st = get_stratum(ctx, 1, SubsetsMode::Strict, PairCount::Ordered);
  const Poly x = av(*ctx, Ctx::amb_k2()) + av(*ctx, ctx->amb_D(0));
  const Poly y = av(*ctx, ctx->amb_D(1)) + av(*ctx, ctx->amb_D(2));
  const Poly lhs = st->restrict_amb(x * y);
  const Poly rhs = st->mul(st->restrict_amb(x), st->restrict_amb(y));
  CHECK((lhs - rhs).is_zero());
}
