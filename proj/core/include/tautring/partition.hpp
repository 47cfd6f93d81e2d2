#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tautring {

// A side of a degree partition, as a bitmask over {1,...,d}: bit (i-1) set
// means element i belongs to the side.
using Side = std::uint32_t;

int side_size(Side s);
std::vector<int> side_elements(Side s);
std::string side_str(Side s);  // "{1,3}"

// An unordered 2-partition {h, hbar} of {1..d} with both sides nonempty.
// The stored representative ("canonical side") is the side containing 1.
struct Partition {
  Side canon = 0;
  int d = 0;

  Side other() const { return (Side((1u << d) - 1)) & ~canon; }
  std::string str() const;  // "[1,3]|d=4"
};

// Oriented description of a non-crossing pair (P,Q): the unique choice of a
// side hP of P and a side hQ of Q with comp(hQ) subset of hP (equivalently
// hP union hQ = {1..d} and hP, hQ overlap).
struct Orientation {
  Side hP = 0;
  Side hQ = 0;
};

// All partitions for a fixed d, in lexicographic order of the canonical
// side's element list, plus the pairwise combinatorics the ring layer needs.
class PartTable {
 public:
  explicit PartTable(int d);

  int d() const { return d_; }
  Side full() const { return Side((1u << d_) - 1); }
  int count() const { return int(parts_.size()); }
  const Partition& part(int i) const { return parts_[i]; }
  const std::vector<Partition>& parts() const { return parts_; }

  // Index of the partition one of whose sides is `s`; -1 if `s` is empty or
  // full.
  int index_of_side(Side s) const;

  bool crossing(int p, int q) const { return crossing_[p * count() + q]; }

  // Requires p != q and !crossing(p, q).
  Orientation orientation(int p, int q) const;

  // Partition indices of all sides h'' with comp(hQ) <= h'' <= hP, endpoints
  // included; the endpoints are Q and P themselves.  Requires p != q and
  // !crossing(p, q).
  std::vector<int> chain(int p, int q) const;

  // Nonempty proper subsets of `s`, ascending as masks.
  static std::vector<Side> proper_subsets(Side s);

  // perm maps element i to perm[i-1] (1-based values).
  Side act_side(const std::vector<int>& perm, Side s) const;
  int act(const std::vector<int>& perm, int p) const;

 private:
  int d_ = 0;
  std::vector<Partition> parts_;
  std::vector<char> crossing_;
};

// All permutations of {1..d} in a fixed deterministic order (lexicographic).
std::vector<std::vector<int>> all_permutations(int d);

}  // namespace tautring
