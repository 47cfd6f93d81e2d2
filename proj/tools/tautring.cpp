// Command-line interface: presentation export, Hilbert tables, the
// verification suites and top-degree integral ratios.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 presentation validation failure, 4 integrand degree mismatch.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautring/cache.hpp"
#include "tautring/cor35.hpp"
#include "tautring/integrate.hpp"
#include "tautring/monoparse.hpp"
#include "tautring/presentation.hpp"
#include "tautring/quotient.hpp"
#include "tautring/symmetry.hpp"
#include "tautring/verify.hpp"
#include "tautring/version.hpp"

namespace {

using tautring::BuildFlags;
using tautring::Presentation;
using tautring::Quotient;
using tautring::Rat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDegreeMismatch = 4;

struct CommonArgs {
  int n = 0;
  int d = 0;
  int jobs = 1;
  int max_degree = -1;
  bool invariant = false;
  std::string rel5 = "derived";
  std::string subsets = "strict";
  std::string format = "json";
  std::string cache_dir;
  std::string suite = "all";
  bool corrupt = false;
  std::vector<std::string> monomials;
};

BuildFlags flags_of(const CommonArgs& a) {
  BuildFlags fl;
  fl.rel5 = (a.rel5 == "as-printed") ? tautring::Rel5Mode::AsPrinted : tautring::Rel5Mode::Derived;
  fl.subsets =
      (a.subsets == "inclusive") ? tautring::SubsetsMode::Inclusive : tautring::SubsetsMode::Strict;
  return fl;
}

// Builds and validates; on validation failure reports the offending labels on
// stderr and exits with the dedicated code.
int checked_presentation(const CommonArgs& a, Presentation& out) {
  if (a.n < 1 || a.d < 1) {
    std::cerr << "error: --n and --d must be at least 1\n";
    return kExitInvalidArgs;
  }
  out = tautring::build_presentation(a.n, a.d, flags_of(a));
  const tautring::ValidateResult vr = tautring::validate(out);
  if (!vr.ok) {
    for (const auto& e : vr.errors) std::cerr << "invalid relation: " << e << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

void extend_cached(Quotient& q, int deg, const CommonArgs& a) {
  if (!a.cache_dir.empty()) {
    tautring::SliceCache cache(a.cache_dir, tautring::SliceCache::key_for(q.pres()));
    q.extend(deg, a.jobs, &cache);
  } else {
    q.extend(deg, a.jobs);
  }
}

int cmd_present(const CommonArgs& a) {
  Presentation pres;
  const int rc = checked_presentation(a, pres);
  if (rc != kExitOk) return rc;
  std::cout << tautring::presentation_json(pres);
  return kExitOk;
}

int cmd_hilbert(const CommonArgs& a) {
  Presentation pres;
  const int rc = checked_presentation(a, pres);
  if (rc != kExitOk) return rc;
  const int dim = pres.dim;
  const int maxdeg = (a.max_degree >= 0) ? a.max_degree : dim;
  const bool truncated = maxdeg < dim;

  Quotient q(pres);
  extend_cached(q, maxdeg, a);

  std::vector<long> inv;
  if (a.invariant)
    for (int k = 0; k <= maxdeg; ++k) inv.push_back(tautring::invariant_dim(q, k));

  // Duality is a statement about the invariant sequence (which the plain
  // sequence equals when d = 1); it needs the range through dim to be
  // meaningful and through dim+2 to also check vanishing.
  const bool can_check = (a.invariant || a.d == 1) && !truncated;
  bool duality_ok = true;
  if (can_check) {
    const std::vector<long>& s = a.invariant ? inv : q.hilbert();
    duality_ok = s[0] == 1 && s[dim] == 1;
    for (int k = 0; k <= dim; ++k) duality_ok = duality_ok && s[k] == s[dim - k];
    for (int k = dim + 1; k <= maxdeg; ++k) duality_ok = duality_ok && s[k] == 0;
  }
  const std::string duality = can_check ? (duality_ok ? "ok" : "fail") : "not-evaluated";

  if (a.format == "csv") {
    if (truncated) std::cout << "# warning: max-degree " << maxdeg << " is below dim " << dim << "\n";
    std::cout << "degree,ambient,ideal_rank,quotient" << (a.invariant ? ",invariant" : "") << "\n";
    for (int k = 0; k <= maxdeg; ++k) {
      std::cout << k << "," << q.ambient_dim(k) << "," << q.ideal_rank(k) << "," << q.dim(k);
      if (a.invariant) std::cout << "," << inv[k];
      std::cout << "\n";
    }
    std::cout << "# duality: " << duality << "\n";
  } else {
    ordered_json j;
    j["n"] = a.n;
    j["d"] = a.d;
    j["dim"] = dim;
    j["max_degree"] = maxdeg;
    j["truncated_below_dim"] = truncated;
    j["rows"] = ordered_json::array();
    for (int k = 0; k <= maxdeg; ++k) {
      ordered_json row;
      row["degree"] = k;
      row["ambient"] = q.ambient_dim(k);
      row["ideal_rank"] = q.ideal_rank(k);
      row["quotient"] = q.dim(k);
      if (a.invariant) row["invariant"] = inv[k];
      j["rows"].push_back(row);
    }
    j["duality"] = duality;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const CommonArgs& a) {
  tautring::VerifyOptions opts;
  opts.jobs = a.jobs;
  opts.corrupt = a.corrupt;
  opts.cache_dir = a.cache_dir;
  tautring::VerifyReport rep;
  try {
    rep = tautring::run_suite(a.suite, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  }
  std::cout << rep.to_json();
  return rep.all_pass() ? kExitOk : kExitVerifyFailure;
}

// Scales the ratio vector to coprime integers with a positive leading entry.
std::vector<Rat> normalized_ratios(std::vector<Rat> v) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Rat& x : v) {
    if (x == 0) continue;
    num_gcd = gcd(num_gcd, mpz_class(x.get_num()));
    den_lcm = lcm(den_lcm, mpz_class(x.get_den()));
  }
  if (num_gcd == 0) return v;
  Rat g(num_gcd, den_lcm);
  g.canonicalize();
  for (Rat& x : v) x /= g;
  for (const Rat& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Rat& y : v) y = -y;
    break;
  }
  return v;
}

int cmd_integrate(const CommonArgs& a) {
  Presentation pres;
  const int rc = checked_presentation(a, pres);
  if (rc != kExitOk) return rc;

  // Monomial arguments may be quoted as one whitespace-separated string or
  // given as separate arguments.
  std::vector<std::string> words;
  for (const auto& chunk : a.monomials) {
    std::istringstream is(chunk);
    std::string w;
    while (is >> w) words.push_back(w);
  }
  if (words.empty()) {
    std::cerr << "error: no monomials given\n";
    return kExitInvalidArgs;
  }

  std::vector<tautring::Poly> classes;
  try {
    classes = tautring::parse_monomials(*pres.ctx, words);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  }

  Quotient q(pres);
  extend_cached(q, q.pres().dim, a);
  std::vector<Rat> lam;
  try {
    lam = tautring::integrate_ratios(q, classes, a.jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegreeMismatch;
  }
  const std::vector<Rat> out = normalized_ratios(std::move(lam));
  for (std::size_t i = 0; i < out.size(); ++i)
    std::cout << (i ? " " : "") << tautring::rat_str(out[i]);
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection calculus for spaces of rational curves"};
  app.set_version_flag("--version", tautring::kEngineVersion);
  app.require_subcommand(1);
  CommonArgs a;

  auto add_build_opts = [&](CLI::App* c) {
    c->add_option("--rel5", a.rel5, "node-product relation mode")
        ->check(CLI::IsMember({"derived", "as-printed"}));
    c->add_option("--subsets", a.subsets, "coefficient subset-sum mode")
        ->check(CLI::IsMember({"strict", "inclusive"}));
  };
  auto add_nd = [&](CLI::App* c) {
    c->add_option("--n", a.n, "target projective space dimension")->required();
    c->add_option("--d", a.d, "curve degree")->required();
  };
  auto add_cache_jobs = [&](CLI::App* c) {
    c->add_option("--cache-dir", a.cache_dir, "slice cache directory")->envname("TAUTRING_CACHE");
    c->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* present = app.add_subcommand("present", "write the presentation as JSON");
  add_nd(present);
  add_build_opts(present);
  add_cache_jobs(present);

  CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimension table");
  add_nd(hilbert);
  add_build_opts(hilbert);
  add_cache_jobs(hilbert);
  hilbert->add_flag("--invariant", a.invariant, "include invariant-subring dimensions");
  hilbert->add_option("--max-degree", a.max_degree, "top degree of the table");
  hilbert->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", a.suite, "suite name");
  add_cache_jobs(verify);
  verify->add_flag("--corrupt", a.corrupt)->group("");  // hidden fault injection

  CLI::App* integrate = app.add_subcommand("integrate", "top-degree integral ratios");
  add_nd(integrate);
  add_build_opts(integrate);
  add_cache_jobs(integrate);
  integrate->add_option("monomials", a.monomials, "kappa/divisor monomials")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidArgs;
  }

  try {
    if (present->parsed()) return cmd_present(a);
    if (hilbert->parsed()) return cmd_hilbert(a);
    if (verify->parsed()) return cmd_verify(a);
    if (integrate->parsed()) return cmd_integrate(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitInvalidArgs;
}
