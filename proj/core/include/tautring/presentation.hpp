#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tautring/context.hpp"
#include "tautring/vrecursion.hpp"

namespace tautring {

// How the degree-5 node-product relations are generated: Derived builds the
// homogeneous consequence of the chain and quadratic relations; AsPrinted
// adjoins the inhomogeneous textbook shape verbatim (which validation then
// rejects; kept for auditability).
enum class Rel5Mode { Derived, AsPrinted };

struct BuildFlags {
  Rel5Mode rel5 = Rel5Mode::Derived;
  SubsetsMode subsets = SubsetsMode::Strict;
  PairCount paircount = PairCount::Ordered;
};

struct Relation {
  std::string label;
  Poly poly;  // over the ambient table
};

struct Presentation {
  int n = 0;
  int d = 0;
  int dim = 0;  // top degree of the expected Poincare duality
  bool structural = false;
  BuildFlags flags;
  std::shared_ptr<const Ctx> ctx;
  std::vector<Relation> relations;
};

// Full presentation of the extended ring for maps of degree d to n-space:
// crossing, chain, quadratic and node-product relations plus the vanishing
// of the recursion level n+1.
Presentation build_presentation(int n, int d, BuildFlags flags = {});

// The target-independent part only (no vanishing-level relations); used for
// rewriting classes into invariant coordinates.
Presentation build_structural(int d, BuildFlags flags = {});

// Canonical JSON serialization (deterministic bytes for fixed inputs).
std::string presentation_json(const Presentation& pres);

// Deterministic fault injection for negative testing: flips the sign of the
// trailing term of the first relation with at least two terms.
void corrupt_presentation(Presentation& pres);

struct ValidateResult {
  bool ok = true;
  std::vector<std::string> errors;  // "label: message"
};

// Checks homogeneity and nonemptiness of every relation, absence of constants
// in the ideal, and stability of the ideal under all transpositions of the
// degree set (membership tested by normal form in the quotient built up to
// the maximal relation degree).
ValidateResult validate(const Presentation& pres);

}  // namespace tautring
