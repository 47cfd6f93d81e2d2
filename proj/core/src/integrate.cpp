#include "tautring/integrate.hpp"

#include <stdexcept>

#include "tautring/symmetry.hpp"

namespace tautring {

std::vector<Rat> integrate_ratios(Quotient& q, const std::vector<Poly>& classes, int jobs) {
  const int top = q.pres().dim;
  if (top < 0) throw std::runtime_error("integrate_ratios: presentation has no top degree");
  q.extend(top, jobs);
  for (const Poly& x : classes) {
    auto deg = x.homogeneous_degree(q.ctx().amb);
    if (!deg || *deg != top)
      throw std::invalid_argument("integrate_ratios: class degree differs from top degree " +
                                  std::to_string(top));
  }
  std::vector<SRow> basis = invariant_basis(q, top);
  if (basis.size() != 1)
    throw std::runtime_error("integrate_ratios: top invariant slice is not one-dimensional");
  const SRow& w = basis[0];  // normalized, leading coefficient 1
  std::vector<Rat> out;
  for (const Poly& x : classes) {
    SRow v = q.nf_row(reynolds(q.ctx(), x));
    Rat lambda = 0;
    for (const auto& [col, val] : v)
      if (col == w.front().first) lambda = val;
    if (!row_axpy(v, -lambda, w).empty())
      throw std::runtime_error("integrate_ratios: class is not proportional to the volume line");
    out.push_back(lambda);
  }
  return out;
}

}  // namespace tautring
