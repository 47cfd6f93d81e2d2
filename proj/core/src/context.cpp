#include "tautring/context.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace tautring {

namespace {

std::string braced(Side s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : side_elements(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string d_var_name(const Partition& p) { return "D" + braced(p.canon); }
std::string f_var_name(const Partition& p) { return "F" + braced(p.canon); }

Ctx::Ctx(int d_) : d(d_), parts(d_) {
  amb.vars.push_back(GVar{"k2", VK::Kappa2, -1, 1});
  amb.vars.push_back(GVar{"k3", VK::Kappa3, -1, 2});
  for (int i = 0; i < parts.count(); ++i)
    amb.vars.push_back(GVar{d_var_name(parts.part(i)), VK::D, i, 1});
  for (int i = 0; i < parts.count(); ++i)
    amb.vars.push_back(GVar{f_var_name(parts.part(i)), VK::F, i, 2});

  strat.vars.push_back(GVar{"psi", VK::Psi, -1, 1});
  strat.vars.push_back(GVar{"k2", VK::Kappa2, -1, 1});
  strat.vars.push_back(GVar{"k3", VK::Kappa3, -1, 2});
  for (int i = 0; i < parts.count(); ++i) {
    std::string nm = "d" + braced(parts.part(i).canon);
    strat.vars.push_back(GVar{nm, VK::Delta, i, 1});
  }
}

std::shared_ptr<const Ctx> get_ctx(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Ctx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const Ctx>(d);
  cache.emplace(d, ctx);
  return ctx;
}

}  // namespace tautring
