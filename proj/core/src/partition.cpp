#include "tautring/partition.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tautring {

int side_size(Side s) { return __builtin_popcount(s); }

std::vector<int> side_elements(Side s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

std::string side_str(Side s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : side_elements(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int e : side_elements(canon)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << "]|d=" << d;
  return os.str();
}

namespace {

// Lexicographic order on element lists.
bool elems_lex_less(Side a, Side b) {
  auto ea = side_elements(a), eb = side_elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

PartTable::PartTable(int d) : d_(d) {
  assert(d >= 1 && d <= 20);
  const Side full = Side((1u << d) - 1);
  std::vector<Side> canons;
  for (Side s = 1; s < full; ++s)
    if ((s & 1u) && s != full) canons.push_back(s);
  std::sort(canons.begin(), canons.end(), elems_lex_less);
  for (Side s : canons) parts_.push_back(Partition{s, d});

  const int m = count();
  crossing_.assign(size_t(m) * m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      Side a = parts_[p].canon, ab = parts_[p].other();
      Side b = parts_[q].canon, bb = parts_[q].other();
      bool cross = (a & b) && (a & bb) && (ab & b) && (ab & bb);
      crossing_[size_t(p) * m + q] = cross ? 1 : 0;
    }
}

int PartTable::index_of_side(Side s) const {
  const Side full = Side((1u << d_) - 1);
  if (s == 0 || s == full || (s & ~full)) return -1;
  Side canon = (s & 1u) ? s : (full & ~s);
  for (int i = 0; i < count(); ++i)
    if (parts_[i].canon == canon) return i;
  return -1;
}

Orientation PartTable::orientation(int p, int q) const {
  assert(p != q && !crossing(p, q));
  const Side sidesP[2] = {parts_[p].canon, parts_[p].other()};
  const Side sidesQ[2] = {parts_[q].canon, parts_[q].other()};
  for (Side x : sidesP)
    for (Side y : sidesQ) {
      if ((x & y) == 0) {
        // Empty slot the side intersection: orient away from it.
        const Side full = Side((1u << d_) - 1);
        return Orientation{Side(full & ~x), Side(full & ~y)};
      }
    }
  assert(false && "non-crossing distinct pair must have an empty slot");
  return {};
}

std::vector<int> PartTable::chain(int p, int q) const {
  Orientation o = orientation(p, q);
  const Side full = Side((1u << d_) - 1);
  const Side lo = full & ~o.hQ;  // comp(hQ)
  const Side hi = o.hP;
  std::vector<int> out;
  // All sides h'' with lo <= h'' <= hi: lo plus any subset of hi\lo.
  Side extra = hi & ~lo;
  // Enumerate subsets of `extra` ascending.
  Side sub = 0;
  while (true) {
    Side h = lo | sub;
    int idx = index_of_side(h);
    assert(idx >= 0);
    out.push_back(idx);
    if (sub == extra) break;
    sub = (sub - extra) & extra;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Side> PartTable::proper_subsets(Side s) {
  std::vector<Side> out;
  for (Side sub = (s - 1) & s; sub; sub = (sub - 1) & s) out.push_back(sub);
  std::sort(out.begin(), out.end());
  return out;
}

Side PartTable::act_side(const std::vector<int>& perm, Side s) const {
  Side out = 0;
  for (int i = 0; i < d_; ++i)
    if (s & (1u << i)) out |= Side(1u << (perm[i] - 1));
  return out;
}

int PartTable::act(const std::vector<int>& perm, int p) const {
  int idx = index_of_side(act_side(perm, parts_[p].canon));
  assert(idx >= 0);
  return idx;
}

std::vector<std::vector<int>> all_permutations(int d) {
  std::vector<int> base(d);
  for (int i = 0; i < d; ++i) base[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace tautring
