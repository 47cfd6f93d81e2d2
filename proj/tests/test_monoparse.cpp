#include <doctest.h>

#include <stdexcept>

#include "tautring/monoparse.hpp"

using namespace tautring;

namespace {

Side side_of(std::initializer_list<int> elems) {
  Side s = 0;
  for (int e : elems) s |= Side(1u) << (e - 1);
  return s;
}

Poly mono(const Ctx& ctx, std::initializer_list<std::pair<int, int>> ve) {
  std::vector<std::uint8_t> e(ctx.namb(), 0);
  for (auto [v, k] : ve) e[size_t(v)] = std::uint8_t(k);
  return Poly::monomial(std::move(e), Rat(1));
}

}  // namespace

TEST_CASE("kappa monomials") {
  auto ctx = get_ctx(1);
  CHECK((parse_monomial(*ctx, "k2^4") - mono(*ctx, {{Ctx::amb_k2(), 4}})).is_zero());
  CHECK((parse_monomial(*ctx, "k2^2*k3") -
         mono(*ctx, {{Ctx::amb_k2(), 2}, {Ctx::amb_k3(), 1}}))
            .is_zero());
}

TEST_CASE("boundary monomials accept either side and the compact form") {
  auto ctx = get_ctx(3);
  const int b = ctx->parts.index_of_side(side_of({1, 3}));
  const Poly want = mono(*ctx, {{ctx->amb_D(b), 1}});
  CHECK((parse_monomial(*ctx, "D{1,3}") - want).is_zero());
  CHECK((parse_monomial(*ctx, "D{2}") - want).is_zero());
  CHECK((parse_monomial(*ctx, "D13") - want).is_zero());
  CHECK((parse_monomial(*ctx, "F{1,3}") - mono(*ctx, {{ctx->amb_F(b), 1}})).is_zero());
  CHECK((parse_monomial(*ctx, "D{1,3}^2*F{1,3}") -
         mono(*ctx, {{ctx->amb_D(b), 2}, {ctx->amb_F(b), 1}}))
            .is_zero());
}

TEST_CASE("node generators require the side containing one") {
  auto ctx = get_ctx(3);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx, "F{2}"),
                       doctest::Contains("F{1,3}"), std::invalid_argument);
}

TEST_CASE("malformed input is rejected with a readable message") {
  auto ctx3 = get_ctx(3);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx3, "k4"),
                       doctest::Contains("bad monomial"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx3, "k2^x"),
                       doctest::Contains("exponent"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx3, "D{1,2,3}"),
                       doctest::Contains("whole degree set"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx3, ""),
                       doctest::Contains("bad monomial"), std::invalid_argument);

  auto ctx1 = get_ctx(1);
  CHECK_THROWS_WITH_AS(parse_monomial(*ctx1, "D{1}"),
                       doctest::Contains("degree 1"), std::invalid_argument);
}
