#include <doctest.h>

#include <algorithm>

#include "tautring/cor35.hpp"
#include "tautring/symmetry.hpp"

using namespace tautring;

namespace {

bool same_conv(const Cor35Conventions& a, const Cor35Conventions& b) {
  return a.paircount == b.paircount && a.tau == b.tau && a.s2 == b.s2;
}

std::vector<long> invariant_hilbert(const Quotient& q, int maxdeg) {
  std::vector<long> h;
  for (int k = 0; k <= maxdeg; ++k) h.push_back(invariant_dim(q, k));
  return h;
}

}  // namespace

TEST_CASE("model table layout") {
  const VarTable tab = model_table();
  CHECK(tab.size() == 6);
  CHECK(tab.find("k2") == 0);
  CHECK(tab.find("sigma1") == 1);
  CHECK(tab.vars[size_t(tab.find("sigma1"))].degree == 1);
  CHECK(tab.vars[size_t(tab.find("rho"))].degree == 2);
  CHECK(tab.vars[size_t(tab.find("sigma2"))].degree == 2);
  CHECK(tab.vars[size_t(tab.find("tau"))].degree == 2);
  CHECK(tab.vars[size_t(tab.find("sigma3"))].degree == 3);
}

TEST_CASE("model images are invariant and homogeneous") {
  auto ctx = get_ctx(3);
  const Cor35Conventions conv;
  const auto images = model_images(*ctx, conv);
  REQUIRE(images.size() == 6);
  const int want_deg[] = {1, 1, 2, 2, 2, 3};
  for (size_t i = 0; i < images.size(); ++i) {
    const auto deg = images[i].homogeneous_degree(ctx->amb);
    REQUIRE(deg.has_value());
    CHECK(*deg == want_deg[i]);
    CHECK((reynolds(*ctx, images[i]) - images[i]).is_zero());
  }
}

TEST_CASE("fixed model relations select the pinned conventions") {
  const auto passing = conventions_passing_fixed_relations();
  REQUIRE_FALSE(passing.empty());
  const Cor35Conventions pinned;
  const bool found = std::any_of(passing.begin(), passing.end(), [&](const auto& c) {
    return same_conv(c, pinned);
  });
  CHECK(found);
}

TEST_CASE("model relations carry the expected labels") {
  const ModelBuild mb = build_model(1);
  REQUIRE(mb.relations.size() >= 3);
  CHECK(mb.relations[0].label == "model-fixed-tau-sigma3");
  CHECK(mb.relations[1].label == "model-fixed-rho-sigma3");
  CHECK(mb.relations[2].label == "model-fixed-tau-square");
  for (size_t i = 3; i < mb.relations.size(); ++i)
    CHECK(mb.relations[i].label.rfind("model-level-", 0) == 0);
  const VarTable tab = model_table();
  for (const auto& r : mb.relations) CHECK(r.poly.homogeneous_degree(tab).has_value());
}

TEST_CASE("model Hilbert sequence matches the invariant ring for the line") {
  const ModelBuild mb = build_model(1);
  const auto model = model_hilbert(mb, 4);

  Quotient q(build_presentation(1, 3));
  q.extend(4);
  CHECK(model == invariant_hilbert(q, 4));
}
