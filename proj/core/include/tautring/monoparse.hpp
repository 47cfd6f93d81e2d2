#pragma once

#include <string>
#include <vector>

#include "tautring/context.hpp"

namespace tautring {

// Parses one generator monomial, e.g. "k2^2*k3", "D{1,3}*F{1,3}^2" or the
// compact side form "D13".  Divisor sides may be given by either side of the
// partition; node generators must use the side containing 1.  Throws
// std::invalid_argument with a readable message on malformed input.
Poly parse_monomial(const Ctx& ctx, const std::string& text);

std::vector<Poly> parse_monomials(const Ctx& ctx, const std::vector<std::string>& texts);

}  // namespace tautring
