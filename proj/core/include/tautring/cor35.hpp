#pragma once

#include <string>
#include <vector>

#include "tautring/presentation.hpp"
#include "tautring/quotient.hpp"

namespace tautring {

// Conventions the invariant-model comparison depends on.  The printed model
// leaves three counting choices ambiguous; they are resolved empirically by
// conventions_passing_fixed_relations() and the winners are pinned as the
// defaults of Cor35Conventions.
//
//  - TauConv: whether the node sum defining tau runs over the node classes of
//    the two-element sides or of the singleton sides.
//  - S2Count: whether the codimension-two substratum class s2 counts each
//    unordered pair of distinct boundary divisors once or twice.
enum class TauConv { TwoElementSides, SingletonSides };
enum class S2Count { Unordered, Ordered };

struct Cor35Conventions {
  PairCount paircount = PairCount::Ordered;
  TauConv tau = TauConv::TwoElementSides;
  S2Count s2 = S2Count::Unordered;
};

std::string conventions_str(const Cor35Conventions& c);

// Variables of the invariant model for degree-3 maps:
// k2, sigma1, rho, sigma2, tau, sigma3 with weights 1, 1, 2, 2, 2, 3.
VarTable model_table();

// Ambient images of the model variables (indexed like model_table()).
std::vector<Poly> model_images(const Ctx& ctx, const Cor35Conventions& conv);

// Image of a model polynomial in the ambient ring of degree-3 maps.
Poly model_to_ambient(const Ctx& ctx, const Poly& x, const Cor35Conventions& conv);

// The target-independent model relations: tau*sigma3, rho*sigma3,
// tau^2 - rho*sigma2.
std::vector<Relation> model_fixed_relations();

// All convention combinations (in a fixed deterministic order) for which the
// images of the fixed relations vanish in the structural quotient.
std::vector<Cor35Conventions> conventions_passing_fixed_relations();

struct ModelBuild {
  int n = 0;
  Cor35Conventions conv;
  std::vector<Relation> relations;  // over model_table()
};

// Builds the invariant model presentation for maps to n-space: the fixed
// relations plus the five level-(n+1) vanishing classes (divisor times side
// kappa, psi times side kappa, side kappa, one-node kappa, plain kappa)
// rewritten through the model generators.
ModelBuild build_model(int n, const Cor35Conventions& conv = {});

// Hilbert sequence of the model quotient through max_degree.
std::vector<long> model_hilbert(const ModelBuild& mb, int max_degree);

}  // namespace tautring
