#include "tautring/echelon.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace tautring {

std::uint64_t mod_p(const Rat& r, bool& ok) {
  const std::uint64_t p = kFilterPrime;
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class dm = den % pz;
  if (dm == 0) {
    ok = false;
    return 0;
  }
  mpz_class nm = num % pz;
  if (nm < 0) nm += pz;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pz.get_mpz_t()) == 0) {
    ok = false;
    return 0;
  }
  mpz_class res = (nm * inv) % pz;
  ok = true;
  return res.get_ui();
}

SRow row_axpy(const SRow& a, const Rat& c, const SRow& b) {
  SRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = c * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void Echelon::reduce(SRow& r) const {
  size_t pos = 0;
  while (pos < r.size()) {
    auto it = rows_.find(r[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rat c = -r[pos].second;
    r = row_axpy(r, c, it->second);
    // Entries left of `pos` are in non-pivot columns already; the eliminated
    // column vanished, so continue scanning from the same position.
  }
}

bool Echelon::insert(SRow r) {
  reduce(r);
  if (r.empty()) return false;
  Rat lead = r.front().second;
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    for (auto& e : r) e.second *= inv;
  }
  int pivot = r.front().first;
  // Back-substitute the new pivot out of all existing rows so every stored
  // row stays supported on its own pivot plus non-pivot columns; this keeps
  // rows sparse and makes reduce() touch each pivot at most once.
  for (auto& [q, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
    if (it == row.end() || it->first != pivot) continue;
    Rat c = -it->second;
    row = row_axpy(row, c, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

namespace {

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return std::uint64_t((__uint128_t(a) * b) % kFilterPrime);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kFilterPrime - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kFilterPrime - 2); }

}  // namespace

std::vector<int> modp_basis_rows(const std::vector<SRow>& rows, std::vector<int>& unfiltered) {
  std::vector<int> picked;
  std::unordered_map<int, ModRow> basis;  // pivot col -> reduced row
  for (int idx = 0; idx < int(rows.size()); ++idx) {
    ModRow r;
    r.reserve(rows[idx].size());
    bool ok = true;
    for (auto& [col, val] : rows[idx]) {
      std::uint64_t v = mod_p(val, ok);
      if (!ok) break;
      if (v) r.emplace_back(col, v);
    }
    if (!ok) {
      unfiltered.push_back(idx);
      continue;
    }
    size_t pos = 0;
    while (pos < r.size()) {
      auto it = basis.find(r[pos].first);
      if (it == basis.end()) {
        ++pos;
        continue;
      }
      std::uint64_t c = r[pos].second;
      const ModRow& b = it->second;
      ModRow out;
      out.reserve(r.size() + b.size());
      size_t i = 0, j = 0;
      while (i < r.size() || j < b.size()) {
        if (j == b.size() || (i < r.size() && r[i].first < b[j].first)) {
          out.push_back(r[i++]);
        } else if (i == r.size() || b[j].first < r[i].first) {
          std::uint64_t v = submod(0, mulmod(c, b[j].second));
          if (v) out.emplace_back(b[j].first, v);
          ++j;
        } else {
          std::uint64_t v = submod(r[i].second, mulmod(c, b[j].second));
          if (v) out.emplace_back(r[i].first, v);
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
    if (r.empty()) continue;
    std::uint64_t inv = invmod(r.front().second);
    for (auto& e : r) e.second = mulmod(e.second, inv);
    int pivot = r.front().first;
    for (auto& [q, row] : basis) {
      auto it = std::lower_bound(
          row.begin(), row.end(), pivot,
          [](const std::pair<int, std::uint64_t>& e, int col) { return e.first < col; });
      if (it == row.end() || it->first != pivot) continue;
      std::uint64_t c = it->second;
      ModRow out;
      out.reserve(row.size() + r.size());
      size_t i = 0, j = 0;
      while (i < row.size() || j < r.size()) {
        if (j == r.size() || (i < row.size() && row[i].first < r[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || r[j].first < row[i].first) {
          std::uint64_t v = submod(0, mulmod(c, r[j].second));
          if (v) out.emplace_back(r[j].first, v);
          ++j;
        } else {
          std::uint64_t v = submod(row[i].second, mulmod(c, r[j].second));
          if (v) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
    basis.emplace(pivot, std::move(r));
    picked.push_back(idx);
  }
  return picked;
}

}  // namespace tautring
