#pragma once

#include <vector>

#include "tautring/echelon.hpp"
#include "tautring/presentation.hpp"

namespace tautring {

class SliceCache;

// One graded piece of a polynomial ring together with the echelon basis of
// the ideal's slice.  Columns are the monomials of the degree in descending
// monomial order.
struct Slice {
  int degree = 0;
  std::vector<std::vector<std::uint8_t>> monos;
  Echelon ech;

  long ambient() const { return long(monos.size()); }
  long rank() const { return ech.rank(); }
  int col_of(const std::vector<std::uint8_t>& e) const;  // -1 if absent
};

// Graded quotient of a free graded-commutative polynomial ring by a
// homogeneous ideal, built degree by degree: the ideal's slice in degree k is
// spanned by the variables times the slice in the matching lower degree plus
// the relations of degree k.
class Quotient {
 public:
  explicit Quotient(Presentation pres);
  Quotient(VarTable table, std::vector<Relation> relations, int top_degree = -1);

  // Build all slices up to max_degree (idempotent).  `jobs` parallelizes row
  // preparation and the dependent-row verification; results are identical
  // for any job count.  If `cache` is given, finished slices are loaded from
  // and stored to it.
  void extend(int max_degree, int jobs = 1, SliceCache* cache = nullptr);

  int built_degree() const { return int(slices_.size()) - 1; }
  const Slice& slice(int k) const;
  long ambient_dim(int k) const { return slice(k).ambient(); }
  long ideal_rank(int k) const { return slice(k).rank(); }
  long dim(int k) const { return ambient_dim(k) - ideal_rank(k); }
  std::vector<long> hilbert() const;  // dimensions 0..built_degree()

  // Normal form of a homogeneous polynomial of built degree: the unique
  // representative supported on non-pivot columns.
  SRow nf_row(const Poly& x) const;
  Poly nf(const Poly& x) const;
  bool is_zero_mod(const Poly& x) const;

  // Monomials spanning the quotient slice (non-pivot columns, descending).
  std::vector<std::vector<std::uint8_t>> std_monos(int k) const;

  const VarTable& table() const { return tab_; }
  const std::vector<Relation>& relations() const { return rels_; }
  int top_degree() const { return top_degree_; }

  bool has_pres() const { return has_pres_; }
  const Presentation& pres() const;
  const Ctx& ctx() const { return *pres().ctx; }

 private:
  void build_slice(int k, int jobs, SliceCache* cache);

  VarTable tab_;
  std::vector<Relation> rels_;
  int top_degree_ = -1;
  bool has_pres_ = false;
  Presentation pres_;
  std::vector<Slice> slices_;
};

// Independent single-degree rank computation: spans the ideal slice directly
// by relation times complementary monomial, with no recycling and no shared
// state.  Safe to call concurrently; used to cross-check the engine.
long slice_dimension(const VarTable& table, const std::vector<Relation>& relations,
                     int degree);
long slice_dimension(const Presentation& pres, int degree);

}  // namespace tautring
