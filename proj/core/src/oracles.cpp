#include "tautring/oracles.hpp"

#include <array>
#include <stdexcept>

#include "tautring/echelon.hpp"

namespace tautring {

namespace {

using IPoly = std::vector<long>;  // coefficients, index = q-power

IPoly imul(const IPoly& a, const IPoly& b) {
  IPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division; throws if the remainder is nonzero.
IPoly idiv(IPoly num, const IPoly& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  IPoly d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::invalid_argument("idiv: zero divisor");
  if (num.size() < d.size()) throw std::logic_error("idiv: inexact division");
  IPoly q(num.size() - d.size() + 1, 0);
  for (int i = int(q.size()) - 1; i >= 0; --i) {
    long lead = num[i + d.size() - 1];
    if (lead % d.back() != 0) throw std::logic_error("idiv: inexact division");
    long c = lead / d.back();
    q[i] = c;
    for (size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
  }
  for (long c : num)
    if (c != 0) throw std::logic_error("idiv: inexact division");
  return q;
}

IPoly one_minus_qk(int k) {
  IPoly p(k + 1, 0);
  p[0] = 1;
  p[k] = -1;
  return p;
}

}  // namespace

std::vector<long> gaussian_binomial_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("gaussian_binomial_coeffs: n must be >= 1");
  IPoly num = imul(one_minus_qk(n + 1), one_minus_qk(n));
  IPoly den = imul(one_minus_qk(1), one_minus_qk(2));
  return idiv(num, den);
}

std::vector<mpz_class> kontsevich_numbers(int dmax) {
  std::vector<mpz_class> n(dmax + 1);
  if (dmax >= 1) n[1] = 1;
  auto binom = [](long top, long bot) {
    mpz_class r;
    if (bot < 0 || bot > top) return mpz_class(0);
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bot));
    return r;
  };
  for (int d = 2; d <= dmax; ++d) {
    mpz_class acc = 0;
    for (int a = 1; a < d; ++a) {
      int b = d - a;
      mpz_class aa = a, bb = b;
      acc += n[a] * n[b] *
             (aa * aa * bb * bb * binom(3 * d - 4, 3 * a - 2) -
              aa * aa * aa * bb * binom(3 * d - 4, 3 * a - 1));
    }
    n[d] = acc;
  }
  std::vector<mpz_class> out;
  for (int d = 1; d <= dmax; ++d) out.push_back(n[d]);
  return out;
}

std::array<long, 3> grassmann_line_integrals() {
  // Basis: 1, s1, s2, s11, s21, s22 (by codimension 0,1,2,2,3,4).
  constexpr int N = 6;
  using Vec = std::array<long, N>;
  auto mul_s1 = [](const Vec& v) {
    Vec out{};
    out[1] += v[0];              // 1 -> s1
    out[2] += v[1];              // s1 -> s2 + s11
    out[3] += v[1];
    out[4] += v[2];              // s2 -> s21
    out[4] += v[3];              // s11 -> s21
    out[5] += v[4];              // s21 -> s22
    return out;
  };
  auto mul_s2 = [](const Vec& v) {
    Vec out{};
    out[2] += v[0];  // 1 -> s2
    out[4] += v[1];  // s1 -> s21
    out[5] += v[2];  // s2 -> s22
    return out;      // s11, s21, s22 times s2 vanish
  };
  Vec unit{};
  unit[0] = 1;
  Vec s1_4 = mul_s1(mul_s1(mul_s1(mul_s1(unit))));
  Vec s1_2s2 = mul_s2(mul_s1(mul_s1(unit)));
  Vec s2_2 = mul_s2(mul_s2(unit));
  return {s1_4[5], s1_2s2[5], s2_2[5]};
}

namespace {

// Linear form c + sum_i coeff_i * u_i over the five degree-two unknowns.
struct LinForm {
  std::array<Rat, 6> a{};  // index 5 is the constant
  bool is_const() const {
    for (int i = 0; i < 5; ++i)
      if (!is_zero(a[i])) return false;
    return true;
  }
};

LinForm lf_zero() { return LinForm{}; }

LinForm lf_const(const Rat& c) {
  LinForm f;
  f.a[5] = c;
  return f;
}

LinForm lf_unknown(int i) {
  LinForm f;
  f.a[i] = 1;
  return f;
}

LinForm lf_add(const LinForm& x, const LinForm& y) {
  LinForm out;
  for (int i = 0; i < 6; ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

LinForm lf_scale(const LinForm& x, const Rat& c) {
  LinForm out;
  for (int i = 0; i < 6; ++i) out.a[i] = x.a[i] * c;
  return out;
}

LinForm lf_mul(const LinForm& x, const LinForm& y) {
  if (x.is_const()) return lf_scale(y, x.a[5]);
  if (y.is_const()) return lf_scale(x, y.a[5]);
  throw std::logic_error("lf_mul: bilinear term in associativity expansion");
}

int unknown_index(int p, int q) {
  // (8,0) (6,1) (4,2) (2,3) (0,4) -> 0..4, keyed by q.
  if (p + 2 * q != 8 || q < 0 || q > 4) return -1;
  return q;
}

// Correlator with c1 divisor insertions removed and only incidence (p) and
// point (q) conditions left, for maps of degree d >= 1.
LinForm core_correlator(int d, int p, int q, const std::array<mpz_class, 3>& line_seeds) {
  if (p < 0 || q < 0) return lf_zero();
  if (p + 2 * q != 4 * d) return lf_zero();
  if (d == 1) {
    if (p == 4 && q == 0) return lf_const(Rat(line_seeds[0]));
    if (p == 2 && q == 1) return lf_const(Rat(line_seeds[1]));
    if (p == 0 && q == 2) return lf_const(Rat(line_seeds[2]));
    return lf_zero();
  }
  int idx = unknown_index(p, q);
  return idx >= 0 ? lf_unknown(idx) : lf_zero();
}

// Full correlator of degree d with class multiset given by counts of the
// codimension-0..3 generators.
LinForm correlator(int d, const std::array<int, 4>& c,
                   const std::array<mpz_class, 3>& line_seeds) {
  int m = c[0] + c[1] + c[2] + c[3];
  int codim = c[1] + 2 * c[2] + 3 * c[3];
  if (d == 0) {
    // Classical triple intersections only.
    return (m == 3 && codim == 3) ? lf_const(Rat(1)) : lf_zero();
  }
  if (codim != 4 * d + m) return lf_zero();
  if (c[0] > 0) return lf_zero();  // fundamental-class insertion
  Rat scale = 1;
  for (int i = 0; i < c[1]; ++i) scale *= d;  // divisor insertions
  return lf_scale(core_correlator(d, c[2], c[3], line_seeds), scale);
}

}  // namespace

std::array<mpz_class, 5> p3_degree2_counts() {
  const auto g = grassmann_line_integrals();
  const std::array<mpz_class, 3> seeds = {g[0], g[1], g[2]};

  auto choose = [](int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rat(r);
  };

  // One side of the associativity identity for the ordering (i,j | k,l) with
  // extra incidence/point insertions (P,Q) distributed over the two factors.
  auto side = [&](int i, int j, int k, int l, int P, int Q) {
    LinForm acc = lf_zero();
    for (int d1 = 0; d1 <= 2; ++d1) {
      int d2 = 2 - d1;
      for (int p1 = 0; p1 <= P; ++p1)
        for (int q1 = 0; q1 <= Q; ++q1) {
          Rat mult = choose(P, p1) * choose(Q, q1);
          for (int e = 0; e <= 3; ++e) {
            std::array<int, 4> left{};
            left[i]++;
            left[j]++;
            left[e]++;
            left[2] += p1;
            left[3] += q1;
            std::array<int, 4> right{};
            right[3 - e]++;
            right[k]++;
            right[l]++;
            right[2] += P - p1;
            right[3] += Q - q1;
            LinForm a = correlator(d1, left, seeds);
            if (a.is_const() && is_zero(a.a[5])) continue;
            LinForm b = correlator(d2, right, seeds);
            acc = lf_add(acc, lf_scale(lf_mul(a, b), mult));
          }
        }
    }
    return acc;
  };

  Echelon system;  // columns 0..4 unknowns, 5 the constant
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          if (j == k) continue;
          for (int P = 0; P <= 8; ++P)
            for (int Q = 0; Q <= 4; ++Q) {
              LinForm eq = lf_add(side(i, j, k, l, P, Q),
                                  lf_scale(side(i, k, j, l, P, Q), Rat(-1)));
              SRow row;
              for (int col = 0; col < 6; ++col)
                if (!is_zero(eq.a[col])) row.emplace_back(col, eq.a[col]);
              if (!row.empty()) system.insert(std::move(row));
            }
        }

  if (system.has_pivot(5))
    throw std::logic_error("p3_degree2_counts: inconsistent associativity system");
  if (system.rank() != 5)
    throw std::logic_error("p3_degree2_counts: underdetermined associativity system");

  std::array<mpz_class, 5> out;
  for (const auto& [pivot, row] : system.rows()) {
    // Fully reduced rows: unit pivot plus the constant column.
    Rat value = 0;
    for (const auto& [col, v] : row)
      if (col == 5) value = -v;
    if (value.get_den() != 1)
      throw std::logic_error("p3_degree2_counts: non-integral solution");
    out[pivot] = value.get_num();
  }
  return out;
}

}  // namespace tautring
