#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "tautring/cache.hpp"
#include "tautring/quotient.hpp"

using namespace tautring;

TEST_CASE("conics over the line: full ring dimensions") {
  Quotient q(build_presentation(1, 2));
  q.extend(4);
  CHECK(q.hilbert() == std::vector<long>{1, 1, 1, 0, 0});
}

TEST_CASE("degree-one rings match the independent slice computation") {
  for (int n : {2, 3, 4}) {
    const Presentation pres = build_presentation(n, 1);
    Quotient q(pres);
    q.extend(2 * n - 2);
    for (int k = 0; k <= 2 * n - 2; ++k) CHECK(q.dim(k) == slice_dimension(pres, k));
  }
  const Presentation p13 = build_presentation(1, 3);
  Quotient q13(p13);
  q13.extend(3);
  CHECK(q13.dim(3) == slice_dimension(p13, 3));
}

TEST_CASE("normal forms") {
  Quotient q(build_presentation(1, 2));
  q.extend(3);
  const Ctx& ctx = q.ctx();

  for (const auto& r : q.relations()) {
    const auto deg = r.poly.homogeneous_degree(ctx.amb);
    if (*deg <= 3) CHECK(q.is_zero_mod(r.poly));
  }

  const Poly x = Poly::var(ctx.amb_F(0), ctx.namb()) +
                 Poly::var(Ctx::amb_k2(), ctx.namb(), 2);
  const Poly n1 = q.nf(x);
  CHECK((q.nf(n1) - n1).is_zero());
  // Adding an ideal element does not change the normal form.
  for (const auto& r : q.relations()) {
    if (r.poly.homogeneous_degree(ctx.amb) == 2) {
      CHECK((q.nf(x + r.poly) - n1).is_zero());
      break;
    }
  }
}

TEST_CASE("standard monomials complement the ideal slice") {
  Quotient q(build_presentation(1, 3));
  q.extend(4);
  for (int k = 0; k <= 4; ++k) {
    CHECK(long(q.std_monos(k).size()) == q.dim(k));
    // Each standard monomial is its own normal form.
    for (const auto& e : q.std_monos(k)) {
      const Poly m = Poly::monomial(e, Rat(1));
      CHECK((q.nf(m) - m).is_zero());
    }
  }
}

TEST_CASE("worker count does not change results") {
  const Presentation pres = build_presentation(1, 3);
  Quotient a(pres), b(pres);
  a.extend(4, 1);
  b.extend(4, 4);
  CHECK(a.hilbert() == b.hilbert());
  const Poly probe = Poly::var(a.ctx().amb_F(0), a.ctx().namb(), 2);
  CHECK((a.nf(probe) - b.nf(probe)).is_zero());
}

TEST_CASE("slice cache round trip is byte identical") {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "tautring-cache-test";
  fs::remove_all(base);
  const Presentation pres = build_presentation(1, 2);

  auto run = [&](const fs::path& dir) {
    SliceCache cache(dir.string(), SliceCache::key_for(pres));
    Quotient q(pres);
    q.extend(3, 1, &cache);
    return q.hilbert();
  };
  const auto h1 = run(base / "a");
  const auto h2 = run(base / "b");
  CHECK(h1 == h2);

  // Same file names and same bytes in both directories.
  std::vector<fs::path> fa, fb;
  for (const auto& e : fs::recursive_directory_iterator(base / "a"))
    if (e.is_regular_file()) fa.push_back(e.path());
  for (const auto& e : fs::recursive_directory_iterator(base / "b"))
    if (e.is_regular_file()) fb.push_back(e.path());
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  REQUIRE_FALSE(fa.empty());
  REQUIRE(fa.size() == fb.size());
  for (size_t i = 0; i < fa.size(); ++i) {
    std::ifstream ia(fa[i], std::ios::binary), ib(fb[i], std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(ia)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(ib)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
  }

  // A warm quotient loading from the cache agrees with a cold one.
  SliceCache warm((base / "a").string(), SliceCache::key_for(pres));
  Quotient q(pres);
  q.extend(3, 1, &warm);
  CHECK(q.hilbert() == h1);
  fs::remove_all(base);
}

TEST_CASE("vanishing above the duality degree") {
  Quotient q(build_presentation(2, 2));  // dim 5
  q.extend(7);
  CHECK(q.dim(6) == 0);
  CHECK(q.dim(7) == 0);
  CHECK(q.dim(5) >= 1);
}
