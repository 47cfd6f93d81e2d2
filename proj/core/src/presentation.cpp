#include "tautring/presentation.hpp"

#include <array>
#include <json.hpp>
#include <stdexcept>

namespace tautring {

namespace {

// Node class of partition p supported on side `s` as an ambient polynomial:
// the canonical side's class is the generator F_p, the other side's class is
// -D_p^2 - F_p.
Poly node_class(const Ctx& ctx, int p, Side s) {
  const int nv = ctx.namb();
  const Partition& part = ctx.parts.part(p);
  if (s == part.canon) return Poly::var(ctx.amb_F(p), nv);
  if (s == part.other())
    return -Poly::var(ctx.amb_D(p), nv, 2) - Poly::var(ctx.amb_F(p), nv);
  throw std::invalid_argument("node_class: side does not belong to partition");
}

std::string side_tag(const Ctx& ctx, int p, Side s) {
  return s == ctx.parts.part(p).canon ? "h" : "hbar";
}

void add_crossing_relations(const Ctx& ctx, std::vector<Relation>& out) {
  const int nv = ctx.namb();
  for (int p = 0; p < ctx.nparts(); ++p)
    for (int q = p + 1; q < ctx.nparts(); ++q) {
      if (!ctx.parts.crossing(p, q)) continue;
      Relation r;
      r.label = "dd-crossing(" + ctx.parts.part(p).str() + "," + ctx.parts.part(q).str() + ")";
      r.poly = Poly::var(ctx.amb_D(p), nv) * Poly::var(ctx.amb_D(q), nv);
      out.push_back(std::move(r));
    }
}

Poly chain_divisor_sum(const Ctx& ctx, int p, int q) {
  Poly s = Poly::zero(ctx.namb());
  for (int r : ctx.parts.chain(p, q)) s = s + Poly::var(ctx.amb_D(r), ctx.namb());
  return s;
}

void add_chain_relations(const Ctx& ctx, std::vector<Relation>& out) {
  const int nv = ctx.namb();
  for (int p = 0; p < ctx.nparts(); ++p)
    for (int q = p + 1; q < ctx.nparts(); ++q) {
      if (ctx.parts.crossing(p, q)) continue;
      Orientation ori = ctx.parts.orientation(p, q);
      Relation r;
      r.label = "fd-chain(" + ctx.parts.part(p).str() + "," + ctx.parts.part(q).str() + ")";
      r.poly = node_class(ctx, p, ori.hP) * Poly::var(ctx.amb_D(q), nv) +
               node_class(ctx, q, ori.hQ) * Poly::var(ctx.amb_D(p), nv) -
               Poly::var(ctx.amb_D(p), nv) * Poly::var(ctx.amb_D(q), nv) *
                   chain_divisor_sum(ctx, p, q);
      out.push_back(std::move(r));
    }
}

void add_quadratic_relations(const Ctx& ctx, const BuildFlags& flags,
                             std::vector<Relation>& out) {
  const int nv = ctx.namb();
  for (int p = 0; p < ctx.nparts(); ++p) {
    const Partition& part = ctx.parts.part(p);
    for (Side s : {part.canon, part.other()}) {
      Relation r;
      r.label = "f-quad(" + part.str() + "," + side_tag(ctx, p, s) + ")";
      Poly f = node_class(ctx, p, s);
      Poly dp = Poly::var(ctx.amb_D(p), nv);
      r.poly = f.pow(2) + b_poly(ctx, p, s, flags.subsets) * f * dp +
               c_poly(ctx, p, s, flags.subsets, flags.paircount) * dp.pow(2);
      out.push_back(std::move(r));
    }
  }
}

void add_node_product_relations(const Ctx& ctx, const BuildFlags& flags,
                                std::vector<Relation>& out) {
  const int nv = ctx.namb();
  for (int p = 0; p < ctx.nparts(); ++p)
    for (int q = 0; q < ctx.nparts(); ++q) {
      if (p == q || ctx.parts.crossing(p, q)) continue;
      Orientation ori = ctx.parts.orientation(p, q);
      Poly fp = node_class(ctx, p, ori.hP);
      Poly fq = node_class(ctx, q, ori.hQ);
      Poly dp = Poly::var(ctx.amb_D(p), nv);
      Poly dq = Poly::var(ctx.amb_D(q), nv);
      Poly b = b_poly(ctx, p, ori.hP, flags.subsets);
      Poly c = c_poly(ctx, p, ori.hP, flags.subsets, flags.paircount);
      Relation r;
      r.label = "ff-chain(" + ctx.parts.part(p).str() + "," + ctx.parts.part(q).str() + ")";
      if (flags.rel5 == Rel5Mode::Derived) {
        // Multiply the chain relation by the node class of p's oriented side
        // and eliminate its square by the quadratic relation.
        r.poly = fq * fp * dp - fp * dp * dq * chain_divisor_sum(ctx, p, q) -
                 b * fp * dp * dq - c * dp.pow(2) * dq;
      } else {
        // Verbatim textbook shape; mixes degrees 4 and 5 and is rejected by
        // validation.
        r.poly = fp * fq - b * dp * dq * fp - chain_divisor_sum(ctx, p, q) * dq * fp -
                 c * dp.pow(2);
      }
      out.push_back(std::move(r));
    }
}

// A three-part split of the degree set corresponds to a stratum whose middle
// component is contracted with exactly three special points, so the cotangent
// class at any of its nodes vanishes on the composite side: the node class of
// one part, taken on the side containing the other two, dies against their
// divisors.
void add_star_relations(const Ctx& ctx, std::vector<Relation>& out) {
  const int d = ctx.d;
  if (d < 3) return;
  const Side full = (Side(1u) << d) - 1;
  std::vector<std::array<Side, 3>> splits;
  for (Side a = 1; a <= full; ++a) {
    if (!(a & 1u) || a == full) continue;  // block containing element 1
    const Side rest = full & ~a;
    const Side low = rest & (~rest + 1u);  // lowest remaining element
    for (Side b = 1; b < rest; ++b) {
      if ((b & rest) != b || !(b & low)) continue;
      const Side c = rest & ~b;
      if (c == 0) continue;
      splits.push_back({a, b, c});
    }
  }
  for (const auto& parts : splits)
    for (int i = 0; i < 3; ++i) {
      const Side leg = parts[i];
      const int p = ctx.parts.index_of_side(leg);
      Relation r;
      r.label = "fdd-star(" + ctx.parts.part(p).str() + ";" +
                ctx.parts.part(ctx.parts.index_of_side(parts[(i + 1) % 3])).str() + "," +
                ctx.parts.part(ctx.parts.index_of_side(parts[(i + 2) % 3])).str() + ")";
      r.poly = node_class(ctx, p, full & ~leg);
      for (int j = 0; j < 3; ++j)
        if (j != i)
          r.poly = r.poly.mul_var(ctx.amb_D(ctx.parts.index_of_side(parts[j])));
      out.push_back(std::move(r));
    }
}

void add_vanishing_level(const Ctx& ctx, int n, const BuildFlags& flags,
                         std::vector<Relation>& out) {
  VRecursion rec(get_ctx(ctx.d), flags.subsets, flags.paircount);
  VData v = rec.at_level(n + 1);
  out.push_back({"v-top", v.top});
  out.push_back({"v-open", v.open});
  for (int p = 0; p < ctx.nparts(); ++p) {
    const Partition& part = ctx.parts.part(p);
    for (int i = 0; i < 2; ++i) {
      Side s = i == 0 ? part.canon : part.other();
      out.push_back({"v-k(" + part.str() + "," + side_tag(ctx, p, s) + ")",
                     rec.stratum(p).push(v.gamma[p][i])});
      out.push_back({"v-psik(" + part.str() + "," + side_tag(ctx, p, s) + ")",
                     rec.stratum(p).push(v.psik[p][i])});
    }
  }
}

Presentation build_common(int n, int d, BuildFlags flags, bool structural) {
  if (d < 1) throw std::invalid_argument("build: d must be >= 1");
  if (!structural && n < 1) throw std::invalid_argument("build: n must be >= 1");
  Presentation pres;
  pres.n = n;
  pres.d = d;
  pres.dim = structural ? -1 : n * d + n + d - 3;
  pres.structural = structural;
  pres.flags = flags;
  pres.ctx = get_ctx(d);
  add_crossing_relations(*pres.ctx, pres.relations);
  add_chain_relations(*pres.ctx, pres.relations);
  add_quadratic_relations(*pres.ctx, flags, pres.relations);
  add_node_product_relations(*pres.ctx, flags, pres.relations);
  add_star_relations(*pres.ctx, pres.relations);
  if (!structural) add_vanishing_level(*pres.ctx, n, flags, pres.relations);
  return pres;
}

}  // namespace

Presentation build_presentation(int n, int d, BuildFlags flags) {
  return build_common(n, d, flags, false);
}

Presentation build_structural(int d, BuildFlags flags) {
  return build_common(-1, d, flags, true);
}

std::string presentation_json(const Presentation& pres) {
  nlohmann::ordered_json j;
  j["n"] = pres.n;
  j["d"] = pres.d;
  j["dim"] = pres.dim;
  j["vars"] = nlohmann::ordered_json::array();
  for (const GVar& v : pres.ctx->amb.vars) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name;
    switch (v.kind) {
      case VK::Kappa2:
      case VK::Kappa3:
        jv["kind"] = "kappa";
        break;
      case VK::D:
        jv["kind"] = "divisor";
        break;
      case VK::F:
        jv["kind"] = "node";
        break;
      default:
        jv["kind"] = "other";
        break;
    }
    jv["degree"] = v.degree;
    j["vars"].push_back(std::move(jv));
  }
  j["relations"] = nlohmann::ordered_json::array();
  for (const Relation& r : pres.relations) {
    nlohmann::ordered_json jr;
    jr["label"] = r.label;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : r.poly.t) {
      nlohmann::ordered_json term = nlohmann::ordered_json::array();
      if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
        throw std::overflow_error("presentation_json: coefficient exceeds int64");
      term.push_back(static_cast<std::int64_t>(c.get_num().get_si()));
      term.push_back(static_cast<std::int64_t>(c.get_den().get_si()));
      nlohmann::ordered_json exps = nlohmann::ordered_json::array();
      for (size_t i = 0; i < size_t(pres.ctx->namb()); ++i)
        exps.push_back(i < e.size() ? int(e[i]) : 0);
      term.push_back(std::move(exps));
      terms.push_back(std::move(term));
    }
    jr["poly"] = std::move(terms);
    j["relations"].push_back(std::move(jr));
  }
  j["flags"] = nlohmann::ordered_json::object();
  j["flags"]["rel5"] = pres.flags.rel5 == Rel5Mode::Derived ? "derived" : "as-printed";
  j["flags"]["subsets"] = pres.flags.subsets == SubsetsMode::Strict ? "strict" : "inclusive";
  j["flags"]["paircount"] =
      pres.flags.paircount == PairCount::Ordered ? "ordered" : "unordered";
  j["flags"]["structural"] = pres.structural;
  return j.dump(2) + "\n";
}

void corrupt_presentation(Presentation& pres) {
  for (Relation& r : pres.relations) {
    if (r.poly.t.size() < 2) continue;
    r.poly.t.back().second = -r.poly.t.back().second;
    return;
  }
  throw std::logic_error("corrupt_presentation: no multi-term relation to corrupt");
}

}  // namespace tautring
