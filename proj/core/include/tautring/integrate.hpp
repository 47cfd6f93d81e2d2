#pragma once

#include "tautring/quotient.hpp"

namespace tautring {

// Evaluation ratios of top-degree classes.  The invariant part of the top
// slice must be one-dimensional; each class is symmetrized, normal-formed and
// expressed as a multiple of that line's generator.  The returned rationals
// are the integrals up to one common normalization.  Throws
// std::invalid_argument if a class has the wrong degree and std::runtime_error
// if the top invariant slice is not a line or a class is not proportional.
std::vector<Rat> integrate_ratios(Quotient& q, const std::vector<Poly>& classes,
                                  int jobs = 1);

}  // namespace tautring
