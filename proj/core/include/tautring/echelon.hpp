#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

// A sparse row over column indices, sorted ascending, nonzero coefficients.
using SRow = std::vector<std::pair<int, Rat>>;

SRow row_axpy(const SRow& a, const Rat& c, const SRow& b);  // a + c*b

// Forward-reduced echelon basis with deterministic pivoting: each stored row
// is normalized to leading coefficient 1 and fully reduced against all other
// pivots' columns encountered while scanning left to right.  Normal forms,
// ranks and pivot sets are canonical for a fixed column order regardless of
// insertion order of a spanning set.
class Echelon {
 public:
  // Reduce `r` in place against the basis; afterwards no entry of `r` sits in
  // a pivot column.
  void reduce(SRow& r) const;

  // Reduce and, if nonzero, adjoin as a new pivot row.  Returns true if the
  // rank grew.
  bool insert(SRow r);

  int rank() const { return int(rows_.size()); }
  const std::map<int, SRow>& rows() const { return rows_; }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

  // Trusted insertion of an already-reduced row during deserialization.
  void adopt(int pivot, SRow row) { rows_.emplace(pivot, std::move(row)); }

 private:
  std::map<int, SRow> rows_;  // pivot column -> row
};

// Rank of a set of rows modulo kFilterPrime; returns the indices of rows that
// were selected as pivots (a row basis candidate).  Rows whose coefficients
// cannot be reduced mod p (denominator divisible by p) are reported in
// `unfiltered` and must be handled exactly by the caller.
std::vector<int> modp_basis_rows(const std::vector<SRow>& rows, std::vector<int>& unfiltered);

}  // namespace tautring
