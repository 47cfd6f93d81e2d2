#include "tautring/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "tautring/cache.hpp"
#include "tautring/symmetry.hpp"

namespace tautring {

namespace {

using Exps = std::vector<std::uint8_t>;

Exps padded(const Exps& e, size_t n) {
  Exps out = e;
  out.resize(n, 0);
  return out;
}

// Row of a homogeneous polynomial over the slice columns.
SRow poly_to_row(const Slice& s, const Poly& x, int nvars) {
  SRow row;
  row.reserve(x.t.size());
  for (const auto& [e, c] : x.t) {
    int col = s.col_of(padded(e, nvars));
    if (col < 0) throw std::logic_error("poly_to_row: monomial missing from slice");
    row.emplace_back(col, c);
  }
  // Poly terms are in descending monomial order, which is ascending column
  // order already.
  return row;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

int Slice::col_of(const std::vector<std::uint8_t>& e) const {
  auto it = std::lower_bound(monos.begin(), monos.end(), e,
                             [](const Exps& a, const Exps& b) { return mono_greater(a, b); });
  if (it == monos.end() || *it != e) return -1;
  return int(it - monos.begin());
}

Quotient::Quotient(Presentation pres)
    : tab_(pres.ctx->amb),
      rels_(pres.relations),
      top_degree_(pres.dim),
      has_pres_(true),
      pres_(std::move(pres)) {}

Quotient::Quotient(VarTable table, std::vector<Relation> relations, int top_degree)
    : tab_(std::move(table)), rels_(std::move(relations)), top_degree_(top_degree) {}

const Presentation& Quotient::pres() const {
  if (!has_pres_) throw std::logic_error("pres: quotient was built from a bare table");
  return pres_;
}

const Slice& Quotient::slice(int k) const {
  if (k < 0 || k > built_degree()) throw std::out_of_range("slice: degree not built");
  return slices_[k];
}

void Quotient::extend(int max_degree, int jobs, SliceCache* cache) {
  for (int k = built_degree() + 1; k <= max_degree; ++k) build_slice(k, jobs, cache);
}

void Quotient::build_slice(int k, int jobs, SliceCache* cache) {
  Slice s;
  s.degree = k;
  s.monos = tab_.monomials(k);

  if (cache != nullptr && cache->load(k, s)) {
    slices_.push_back(std::move(s));
    return;
  }

  // Candidate generators of the ideal slice, in a fixed deterministic order:
  // the relations of this degree, then each variable times the pivot rows of
  // the matching lower slice.
  std::vector<SRow> cand;
  for (const Relation& r : rels_) {
    auto deg = r.poly.homogeneous_degree(tab_);
    if (!deg) throw std::runtime_error("build_slice: inhomogeneous relation " + r.label);
    if (*deg == k && !r.poly.is_zero()) cand.push_back(poly_to_row(s, r.poly, tab_.size()));
  }
  struct Recycled {
    int var;
    const SRow* row;
  };
  std::vector<Recycled> rec;
  for (int v = 0; v < tab_.size(); ++v) {
    int w = tab_.vars[v].degree;
    if (k - w < 0) continue;
    const Slice& low = slices_[k - w];
    for (const auto& [pivot, row] : low.ech.rows()) rec.push_back({v, &row});
  }
  size_t base = cand.size();
  cand.resize(base + rec.size());
  // Column translation: multiplying by one variable preserves the relative
  // monomial order, so each low column maps monotonically into this slice.
  std::vector<std::vector<int>> shift(tab_.size());
  for (int v = 0; v < tab_.size(); ++v) {
    int w = tab_.vars[v].degree;
    if (k - w < 0) continue;
    const Slice& low = slices_[k - w];
    shift[v].resize(low.monos.size());
    for (size_t c = 0; c < low.monos.size(); ++c) {
      Exps e = low.monos[c];
      e[v] = std::uint8_t(e[v] + 1);
      shift[v][c] = s.col_of(e);
      if (shift[v][c] < 0) throw std::logic_error("build_slice: shifted monomial missing");
    }
  }
  parallel_for(int(rec.size()), jobs, [&](int i) {
    const auto& [v, row] = rec[i];
    SRow out;
    out.reserve(row->size());
    for (const auto& [col, coeff] : *row) out.emplace_back(shift[v][col], coeff);
    cand[base + i] = std::move(out);
  });

  // Modular pre-rank pass picks the rows expected to grow the rank; those are
  // inserted exactly first, then the rest are verified exactly (and inserted
  // on the rare miss), so the result is exact regardless of the filter.
  std::vector<int> unfiltered;
  std::vector<int> picked = modp_basis_rows(cand, unfiltered);
  std::vector<char> handled(cand.size(), 0);
  for (int i : picked) {
    s.ech.insert(cand[i]);
    handled[i] = 1;
  }
  for (int i : unfiltered) {
    s.ech.insert(cand[i]);
    handled[i] = 1;
  }
  std::vector<int> leftovers;
  for (int i = 0; i < int(cand.size()); ++i)
    if (!handled[i]) leftovers.push_back(i);
  std::vector<char> nonzero(leftovers.size(), 0);
  parallel_for(int(leftovers.size()), jobs, [&](int j) {
    SRow r = cand[leftovers[j]];
    s.ech.reduce(r);
    nonzero[j] = r.empty() ? 0 : 1;
  });
  // Rows that reduced to zero stay dependent as the basis only grows; rows
  // with a nonzero residue are re-reduced inside insert, which also covers
  // interference between insertions of this batch.
  for (size_t j = 0; j < leftovers.size(); ++j)
    if (nonzero[j]) s.ech.insert(cand[leftovers[j]]);

  if (cache != nullptr) cache->store(k, s);
  slices_.push_back(std::move(s));
}

std::vector<long> Quotient::hilbert() const {
  std::vector<long> out;
  for (int k = 0; k <= built_degree(); ++k) out.push_back(dim(k));
  return out;
}

SRow Quotient::nf_row(const Poly& x) const {
  auto deg = x.homogeneous_degree(tab_);
  if (!deg) throw std::invalid_argument("nf_row: polynomial is not homogeneous");
  if (x.is_zero()) return {};
  const Slice& s = slice(*deg);
  SRow row = poly_to_row(s, x, tab_.size());
  s.ech.reduce(row);
  return row;
}

Poly Quotient::nf(const Poly& x) const {
  auto deg = x.homogeneous_degree(tab_);
  if (!deg) throw std::invalid_argument("nf: polynomial is not homogeneous");
  if (x.is_zero()) return x;
  const Slice& s = slice(*deg);
  SRow row = nf_row(x);
  Poly out = Poly::zero(tab_.size());
  for (const auto& [col, c] : row) out = out + Poly::monomial(s.monos[col], c);
  return out;
}

bool Quotient::is_zero_mod(const Poly& x) const { return nf_row(x).empty(); }

std::vector<std::vector<std::uint8_t>> Quotient::std_monos(int k) const {
  const Slice& s = slice(k);
  std::vector<Exps> out;
  for (size_t c = 0; c < s.monos.size(); ++c)
    if (!s.ech.has_pivot(int(c))) out.push_back(s.monos[c]);
  return out;
}

long slice_dimension(const VarTable& table, const std::vector<Relation>& relations,
                     int degree) {
  Slice s;
  s.degree = degree;
  s.monos = table.monomials(degree);
  Echelon ech;
  for (const Relation& r : relations) {
    auto deg = r.poly.homogeneous_degree(table);
    if (!deg) throw std::runtime_error("slice_dimension: inhomogeneous relation " + r.label);
    if (*deg > degree || r.poly.is_zero()) continue;
    for (const Exps& m : table.monomials(degree - *deg)) {
      Poly mono = Poly::monomial(m, Rat(1));
      ech.insert(poly_to_row(s, mono * r.poly, table.size()));
    }
  }
  return long(s.monos.size()) - ech.rank();
}

long slice_dimension(const Presentation& pres, int degree) {
  return slice_dimension(pres.ctx->amb, pres.relations, degree);
}

// ---- validate --------------------------------------------------------------

ValidateResult validate(const Presentation& pres) {
  ValidateResult res;
  const VarTable& tab = pres.ctx->amb;
  int maxdeg = 0;
  for (const Relation& r : pres.relations) {
    if (r.poly.is_zero()) {
      res.errors.push_back(r.label + ": relation is identically zero");
      continue;
    }
    auto deg = r.poly.homogeneous_degree(tab);
    if (!deg) {
      res.errors.push_back(r.label + ": relation is not homogeneous");
      continue;
    }
    if (*deg < 1) {
      res.errors.push_back(r.label + ": constant relation");
      continue;
    }
    maxdeg = std::max(maxdeg, *deg);
  }
  // The node quadratics of the two sides of one partition expand to the same
  // ambient polynomial (the substitution F -> -D^2 - F exchanges them while
  // fixing the relation).  Any sign or coefficient damage to one of the pair
  // breaks the match even when the relation is fixed by every transposition.
  {
    std::map<std::string, const Poly*> first_side;
    for (const Relation& r : pres.relations) {
      if (r.label.rfind("f-quad(", 0) != 0) continue;
      const auto cut = r.label.find_last_of(',');
      if (cut == std::string::npos) continue;
      const std::string key = r.label.substr(0, cut);
      auto [it, fresh] = first_side.emplace(key, &r.poly);
      if (!fresh && !(*it->second - r.poly).is_zero())
        res.errors.push_back(key + ",*): conjugate side quadratics disagree");
    }
  }
  if (!res.errors.empty()) {
    res.ok = false;
    return res;
  }

  Quotient q(pres);
  q.extend(maxdeg);
  if (q.dim(0) != 1) {
    res.ok = false;
    res.errors.push_back("ideal contains a constant");
    return res;
  }
  const int d = pres.d;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      std::vector<int> perm(d);
      for (int v = 0; v < d; ++v) perm[v] = v + 1;
      std::swap(perm[i - 1], perm[j - 1]);
      for (const Relation& r : pres.relations) {
        Poly img = act_on_poly(*pres.ctx, perm, r.poly);
        if (!q.is_zero_mod(img))
          res.errors.push_back(r.label + ": not stable under transposition (" +
                               std::to_string(i) + " " + std::to_string(j) + ")");
      }
    }
  res.ok = res.errors.empty();
  return res;
}

}  // namespace tautring
