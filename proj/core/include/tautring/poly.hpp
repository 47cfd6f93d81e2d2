#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tautring/partition.hpp"
#include "tautring/rational.hpp"

namespace tautring {

enum class VK : std::uint8_t { Kappa2, Kappa3, D, F, Psi, Delta, Model };

struct GVar {
  std::string name;
  VK kind;
  int pidx;    // partition index for D/F/Delta, -1 otherwise
  int degree;  // grading weight
};

// An ordered list of graded variables.  Monomials are exponent vectors over
// this list; the monomial order is degree-first, then exponent-vector
// lexicographic with earlier variables weighted higher ("desc-lex").
struct VarTable {
  std::vector<GVar> vars;

  int size() const { return int(vars.size()); }
  int degree_of(const std::vector<std::uint8_t>& e) const;
  int find(const std::string& name) const;  // -1 if absent

  // All monomials of the given total degree, in descending monomial order.
  std::vector<std::vector<std::uint8_t>> monomials(int degree) const;
};

// Exponent-vector comparison: true if a > b in the monomial order
// (lexicographic on exponents, earlier variable more significant).
bool mono_greater(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);

struct Poly {
  // Terms sorted by descending monomial order; coefficients nonzero.
  std::vector<std::pair<std::vector<std::uint8_t>, Rat>> t;

  static Poly zero(int nvars);
  static Poly constant(const Rat& c, int nvars);
  static Poly var(int i, int nvars, int exp = 1);
  static Poly monomial(std::vector<std::uint8_t> e, const Rat& c);

  int nvars() const;
  bool is_zero() const { return t.empty(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly mul_var(int i, int exp = 1) const;
  Poly pow(int k) const;

  // Substitute variable i by `repl` (a polynomial over the same table).
  Poly substitute(int i, const Poly& repl) const;

  // Map each monomial through `f` (which returns a poly over a possibly
  // different table with `nvars_out` variables) and sum with coefficients.
  Poly map_monomials(int nvars_out,
                     const std::function<Poly(const std::vector<std::uint8_t>&)>& f) const;

  std::optional<int> homogeneous_degree(const VarTable& tab) const;
  std::string str(const VarTable& tab) const;
};

Poly poly_sum(const std::vector<Poly>& ps, int nvars);

}  // namespace tautring
