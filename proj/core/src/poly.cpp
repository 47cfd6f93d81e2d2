#include "tautring/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace tautring {

int VarTable::degree_of(const std::vector<std::uint8_t>& e) const {
  int deg = 0;
  for (size_t i = 0; i < e.size(); ++i) deg += int(e[i]) * vars[i].degree;
  return deg;
}

int VarTable::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vars[i].name == name) return i;
  return -1;
}

std::vector<std::vector<std::uint8_t>> VarTable::monomials(int degree) const {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(vars.size(), 0);
  // Recursive enumeration; variable 0 varies outermost so that emitting
  // higher exponents first yields descending monomial order directly.
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == int(vars.size())) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int w = vars[i].degree;
    int maxe = rem / w;
    for (int e = maxe; e >= 0; --e) {
      cur[i] = std::uint8_t(e);
      rec(i + 1, rem - e * w);
    }
    cur[i] = 0;
  };
  if (degree >= 0) rec(0, degree);
  return out;
}

bool mono_greater(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::zero(int) { return Poly{}; }

Poly Poly::constant(const Rat& c, int nvars) {
  Poly p;
  if (!tautring::is_zero(c)) p.t.emplace_back(std::vector<std::uint8_t>(nvars, 0), c);
  return p;
}

Poly Poly::var(int i, int nvars, int exp) {
  Poly p;
  std::vector<std::uint8_t> e(nvars, 0);
  e[i] = std::uint8_t(exp);
  p.t.emplace_back(std::move(e), Rat(1));
  return p;
}

Poly Poly::monomial(std::vector<std::uint8_t> e, const Rat& c) {
  Poly p;
  if (!tautring::is_zero(c)) p.t.emplace_back(std::move(e), c);
  return p;
}

int Poly::nvars() const { return t.empty() ? 0 : int(t.front().first.size()); }

namespace {

Poly from_map(std::map<std::vector<std::uint8_t>, Rat>& m) {
  Poly p;
  p.t.reserve(m.size());
  for (auto& kv : m)
    if (!is_zero(kv.second)) p.t.emplace_back(kv.first, kv.second);
  // std::map iterates ascending; we want descending monomial order.
  std::reverse(p.t.begin(), p.t.end());
  return p;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  size_t n = 0;
  for (auto& [e, c] : t) n = std::max(n, e.size());
  for (auto& [e, c] : o.t) n = std::max(n, e.size());
  std::map<std::vector<std::uint8_t>, Rat> m;
  auto padded = [n](std::vector<std::uint8_t> e) {
    e.resize(n, 0);
    return e;
  };
  for (auto& [e, c] : t) m[padded(e)] += c;
  for (auto& [e, c] : o.t) m[padded(e)] += c;
  return from_map(m);
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rat(-1)); }

Poly Poly::operator-() const { return scaled(Rat(-1)); }

Poly Poly::scaled(const Rat& c) const {
  if (tautring::is_zero(c)) return Poly{};
  Poly p = *this;
  for (auto& term : p.t) term.second *= c;
  return p;
}

Poly Poly::mul_var(int i, int exp) const {
  Poly p = *this;
  for (auto& term : p.t) {
    if (int(term.first.size()) <= i) term.first.resize(i + 1, 0);
    term.first[i] = std::uint8_t(term.first[i] + exp);
  }
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  std::map<std::vector<std::uint8_t>, Rat> m;
  for (auto& [ea, ca] : t)
    for (auto& [eb, cb] : o.t) {
      std::vector<std::uint8_t> e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      m[e] += ca * cb;
    }
  return from_map(m);
}

Poly Poly::pow(int k) const {
  assert(k >= 0);
  Poly r = Poly::constant(Rat(1), nvars());
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::substitute(int i, const Poly& repl) const {
  std::map<std::vector<std::uint8_t>, Rat> m;
  for (auto& [e, c] : t) {
    if (i >= int(e.size()) || e[i] == 0) {
      m[e] += c;
      continue;
    }
    std::vector<std::uint8_t> rest = e;
    int k = rest[i];
    rest[i] = 0;
    Poly contrib = repl.pow(k);
    for (auto& [er, cr] : contrib.t) {
      std::vector<std::uint8_t> eo(std::max(rest.size(), er.size()), 0);
      for (size_t j = 0; j < rest.size(); ++j) eo[j] += rest[j];
      for (size_t j = 0; j < er.size(); ++j) eo[j] += er[j];
      m[eo] += c * cr;
    }
  }
  return from_map(m);
}

Poly Poly::map_monomials(
    int nvars_out, const std::function<Poly(const std::vector<std::uint8_t>&)>& f) const {
  Poly acc = Poly::zero(nvars_out);
  for (auto& [e, c] : t) acc = acc + f(e).scaled(c);
  return acc;
}

std::optional<int> Poly::homogeneous_degree(const VarTable& tab) const {
  if (t.empty()) return 0;
  int deg = tab.degree_of(t.front().first);
  for (auto& [e, c] : t)
    if (tab.degree_of(e) != deg) return std::nullopt;
  return deg;
}

std::string Poly::str(const VarTable& tab) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t) {
    if (!first) os << " + ";
    os << rat_str(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) {
        os << '*' << tab.vars[i].name;
        if (e[i] > 1) os << '^' << int(e[i]);
      }
    first = false;
  }
  return os.str();
}

Poly poly_sum(const std::vector<Poly>& ps, int nvars) {
  Poly acc = Poly::zero(nvars);
  for (const Poly& p : ps) acc = acc + p;
  return acc;
}

}  // namespace tautring
