#pragma once

#include <memory>
#include <string>

#include "tautring/partition.hpp"
#include "tautring/poly.hpp"

namespace tautring {

// Shared combinatorial data and variable tables for a fixed curve degree d.
//
// Ambient table layout: [k2, k3, D_0.., D_{m-1}, F_0.., F_{m-1}] where m is
// the partition count and F_i is the node cotangent class supported on
// partition i's canonical side (the complement side's class is eliminated via
// F_h + F_hbar = -D^2).  For d = 1 the table is just [k2, k3].
//
// Stratum table layout (per partition, shared shape): [psi, k2, k3,
// delta_0.., delta_{m-1}] where psi is the node cotangent on the canonical
// side and delta_j restricts D_j.
struct Ctx {
  int d;
  PartTable parts;
  VarTable amb;    // ambient generators
  VarTable strat;  // stratum generators

  explicit Ctx(int d_);

  int nparts() const { return parts.count(); }
  int namb() const { return amb.size(); }
  int nstrat() const { return strat.size(); }
  int amb_D(int p) const { return 2 + p; }
  int amb_F(int p) const { return 2 + nparts() + p; }
  static int amb_k2() { return 0; }
  static int amb_k3() { return 1; }

  static int st_psi() { return 0; }
  static int st_k2() { return 1; }
  static int st_k3() { return 2; }
  int st_delta(int p) const { return 3 + p; }
};

std::shared_ptr<const Ctx> get_ctx(int d);

std::string d_var_name(const Partition& p);  // "D{1,3}"
std::string f_var_name(const Partition& p);  // "F{1,3}"

}  // namespace tautring
