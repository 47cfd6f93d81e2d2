#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tautring {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// 61-bit Mersenne prime used for the modular pre-rank filter in the echelon
// engine.  Any coefficient whose denominator vanishes mod P is handled by the
// exact fallback path, so correctness never depends on the choice of prime.
inline constexpr std::uint64_t kFilterPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_p(const Rat& r, bool& ok);

}  // namespace tautring
