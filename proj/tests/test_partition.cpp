#include <doctest.h>

#include <algorithm>

#include "tautring/partition.hpp"

using namespace tautring;

namespace {
Side side_of(std::initializer_list<int> elems) {
  Side s = 0;
  for (int e : elems) s |= Side(1u) << (e - 1);
  return s;
}
}  // namespace

TEST_CASE("partition enumeration and canonical sides") {
  PartTable t1(1);
  CHECK(t1.count() == 0);

  PartTable t2(2);
  REQUIRE(t2.count() == 1);
  CHECK(t2.part(0).canon == side_of({1}));
  CHECK(t2.part(0).other() == side_of({2}));

  PartTable t3(3);
  REQUIRE(t3.count() == 3);
  CHECK(t3.part(0).canon == side_of({1}));
  CHECK(t3.part(1).canon == side_of({1, 2}));
  CHECK(t3.part(2).canon == side_of({1, 3}));
  CHECK(t3.part(0).str() == "[1]|d=3");
  CHECK(t3.part(2).str() == "[1,3]|d=3");

  // Either side indexes the same partition.
  CHECK(t3.index_of_side(side_of({2}))== 2);
  CHECK(t3.index_of_side(side_of({3})) == 1);
  CHECK(t3.index_of_side(side_of({2, 3})) == 0);

  PartTable t4(4);
  CHECK(t4.count() == 7);
}

TEST_CASE("crossing pairs") {
  PartTable t3(3);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) CHECK_FALSE(t3.crossing(p, q));

  PartTable t4(4);
  int crossing_pairs = 0;
  for (int p = 0; p < t4.count(); ++p)
    for (int q = p + 1; q < t4.count(); ++q)
      if (t4.crossing(p, q)) ++crossing_pairs;
  CHECK(crossing_pairs == 3);  // exactly the three half-half partitions pairwise

  const int h12 = t4.index_of_side(side_of({1, 2}));
  const int h13 = t4.index_of_side(side_of({1, 3}));
  const int h1 = t4.index_of_side(side_of({1}));
  CHECK(t4.crossing(h12, h13));
  CHECK_FALSE(t4.crossing(h1, h12));
}

TEST_CASE("orientation and chain include the endpoints") {
  PartTable t3(3);
  const int a = t3.index_of_side(side_of({1}));      // {1}|{2,3}
  const int b = t3.index_of_side(side_of({1, 2}));   // {1,2}|{3}

  const Orientation o = t3.orientation(b, a);
  CHECK(o.hP == side_of({1, 2}));
  CHECK(o.hQ == side_of({2, 3}));

  std::vector<int> chain = t3.chain(b, a);
  std::sort(chain.begin(), chain.end());
  CHECK(chain == std::vector<int>{a, b});

  // At d = 4 a strictly longer chain appears: the sides g with
  // comp(hQ) = {1} <= g <= hP = {1,2,3} are {1}, {1,2}, {1,3}, {1,2,3}.
  PartTable t4(4);
  const int q4 = t4.index_of_side(side_of({1}));
  const int p4 = t4.index_of_side(side_of({1, 2, 3}));
  std::vector<int> chain4 = t4.chain(p4, q4);
  CHECK(chain4.size() == 4);
}

TEST_CASE("proper subsets ascending") {
  const auto subs = PartTable::proper_subsets(side_of({1, 3}));
  REQUIRE(subs.size() == 2);
  CHECK(subs[0] == side_of({1}));
  CHECK(subs[1] == side_of({3}));
  CHECK(PartTable::proper_subsets(side_of({2})).empty());
}

TEST_CASE("permutation action") {
  PartTable t3(3);
  const std::vector<int> swap12 = {2, 1, 3};
  const int a = t3.index_of_side(side_of({1}));
  const int img = t3.act(swap12, a);
  CHECK(t3.part(img).canon == side_of({1, 3}));  // {2}|{1,3} canonicalized
  CHECK(t3.act_side(swap12, side_of({1})) == side_of({2}));

  const auto perms = all_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == std::vector<int>{1, 2, 3});
  CHECK(perms.back() == std::vector<int>{3, 2, 1});
}
