#pragma once

// Independent oracle for characteristic classes of bundles on P^n whose Chern
// classes are multiples of powers of H.
//
// A degree-d class that is symmetric in each group of Chern roots is a
// polynomial in the elementary symmetric functions of the groups. The oracle
// finds that polynomial by evaluating a closed-form root expression at random
// rational points and solving the resulting linear system, then substitutes
// e_i = gamma_i (the c_i = gamma_i H^i coefficients). It shares nothing with
// the splitting ring or the Newton identities of the library, only the exact
// Rational type.

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "spencer/rational.hpp"

namespace oracle {

using spencer::Rational;
using Roots = std::vector<Rational>;
using Series = std::vector<Rational>;  // coefficients of H^0..H^n

inline Rational elementary(const Roots& x, int k) {
  std::vector<Rational> e(x.size() + 1);
  e[0] = Rational(1);
  for (const auto& xi : x)
    for (std::size_t j = x.size(); j >= 1; --j) e[j] += e[j - 1] * xi;
  return k >= 0 && static_cast<std::size_t>(k) <= x.size() ? e[static_cast<std::size_t>(k)] : Rational(0);
}

inline Rational pow(const Rational& b, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

inline Rational fact(int n) {
  Rational out(1);
  for (int i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

// Exponent vectors alpha (per group, parts 1..rank) with sum_i i*alpha_i = d overall.
using Monomial = std::vector<std::vector<int>>;

inline void enumerate(const std::vector<int>& ranks, std::size_t g, int part, int budget, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (g == ranks.size()) {
    if (budget == 0) out.push_back(cur);
    return;
  }
  if (part > ranks[g]) {
    enumerate(ranks, g + 1, 1, budget, cur, out);
    return;
  }
  for (int a = 0; a * part <= budget; ++a) {
    cur[g][static_cast<std::size_t>(part - 1)] = a;
    enumerate(ranks, g, part + 1, budget - a * part, cur, out);
  }
  cur[g][static_cast<std::size_t>(part - 1)] = 0;
}

inline Rational monomial_value(const Monomial& m, const std::vector<std::vector<Rational>>& e) {
  Rational out(1);
  for (std::size_t g = 0; g < m.size(); ++g)
    for (std::size_t i = 0; i < m[g].size(); ++i) out *= pow(e[g][i], m[g][i]);
  return out;
}

// Solves a (possibly overdetermined, consistent) system exactly.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != cols) throw std::logic_error("oracle: sample points do not determine the polynomial");
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) throw std::logic_error("oracle: expression is not symmetric in the groups");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = b[i] / a[i][pivots[i]];
  return x;
}

// Degree-d component of a root expression f, rewritten in the Chern numbers
// gamma[g][i-1] of each group. f receives one root vector per group.
inline Rational class_component(const std::vector<int>& ranks, int d,
                                const std::function<Rational(const std::vector<Roots>&)>& f,
                                const std::vector<std::vector<Rational>>& gamma, unsigned seed = 7) {
  std::vector<Monomial> basis;
  Monomial cur;
  for (int r : ranks) cur.emplace_back(static_cast<std::size_t>(r), 0);
  enumerate(ranks, 0, 1, d, cur, basis);
  if (basis.empty()) return Rational(0);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t s = 0; s < basis.size() + 4; ++s) {
    std::vector<Roots> pts;
    std::vector<std::vector<Rational>> e;
    for (int r : ranks) {
      Roots x;
      for (int i = 0; i < r; ++i) x.emplace_back(num(rng), den(rng));
      std::vector<Rational> es;
      for (int i = 1; i <= r; ++i) es.push_back(elementary(x, i));
      pts.push_back(std::move(x));
      e.push_back(std::move(es));
    }
    std::vector<Rational> row;
    for (const auto& m : basis) row.push_back(monomial_value(m, e));
    rows.push_back(std::move(row));
    rhs.push_back(f(pts));
  }
  const std::vector<Rational> coeff = solve(std::move(rows), std::move(rhs));
  Rational out(0);
  for (std::size_t i = 0; i < basis.size(); ++i) out += coeff[i] * monomial_value(basis[i], gamma);
  return out;
}

// Full class sum_d component_d H^d for d = 0..n, where f(d, roots) is the
// degree-d part of the root expression.
inline Series class_series(int n, const std::vector<int>& ranks,
                           const std::function<Rational(int, const std::vector<Roots>&)>& f,
                           const std::vector<std::vector<Rational>>& gamma) {
  Series out;
  for (int d = 0; d <= n; ++d)
    out.push_back(class_component(ranks, d, [&](const std::vector<Roots>& x) { return f(d, x); }, gamma));
  return out;
}

// Degree-d part of exp(s): s^d / d!.
inline Rational exp_part(const Rational& s, int d) { return pow(s, d) / fact(d); }

// ch of a bundle: sum_i x_i^d / d!.
inline Rational ch_part(int d, const Roots& x) {
  Rational out(0);
  for (const auto& xi : x) out += exp_part(xi, d);
  return out;
}

// ch(Sym^k): sum over multisets i_1 <= ... <= i_k of (x_{i_1}+...+x_{i_k})^d / d!.
inline Rational sym_part(int d, const Roots& x, int k) {
  Rational out(0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  if (k == 0) return d == 0 ? Rational(1) : Rational(0);
  if (x.empty()) return Rational(0);
  while (true) {
    Rational s(0);
    for (auto i : idx) s += x[i];
    out += exp_part(s, d);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == x.size() - 1) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(pos)];
  }
  return out;
}

// ch(Lambda^k): sum over subsets of size k.
inline Rational ext_part(int d, const Roots& x, int k) {
  Rational out(0);
  const std::size_t r = x.size();
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    Rational s(0);
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1UL) s += x[i];
    out += exp_part(s, d);
  }
  return out;
}

// Truncated product in Q[H]/(H^{n+1}).
inline Series mul(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// x / (1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ..., enough for n <= 4.
inline const std::vector<Rational>& todd_series() {
  static const std::vector<Rational> t = {Rational(1), Rational(1, 2), Rational(1, 12), Rational(0), Rational(-1, 720)};
  return t;
}

// td(P^n) = (H/(1-e^{-H}))^{n+1}.
inline Series todd_projective(int n) {
  if (n > 4) throw std::logic_error("oracle todd series only goes to degree 4");
  Series one(static_cast<std::size_t>(n) + 1), t(static_cast<std::size_t>(n) + 1);
  one[0] = Rational(1);
  for (int d = 0; d <= n; ++d) t[static_cast<std::size_t>(d)] = todd_series()[static_cast<std::size_t>(d)];
  Series out = one;
  for (int i = 0; i <= n; ++i) out = mul(out, t);
  return out;
}

// exp(m H) truncated at H^n.
inline Series exp_h(int n, const Rational& m) {
  Series out;
  for (int d = 0; d <= n; ++d) out.push_back(exp_part(m, d));
  return out;
}

// ch(Lambda^k Omega_{P^n}) from the Euler sequence:
// sum_{j=0}^{k} (-1)^j C(n+1, k-j) e^{-(k-j)H}.
inline Series ch_forms(int n, int k) {
  Series out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= k; ++j) {
    const int m = k - j;
    Rational binom(1);
    for (int i = 0; i < m; ++i) binom = binom * Rational(n + 1 - i) / Rational(i + 1);
    const Series e = exp_h(n, Rational(-m));
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += (j % 2 == 0 ? binom : -binom) * e[d];
  }
  return out;
}

// chi(P^n, O(d)) = C(n+d, n), extended to negative d.
inline Rational hrr_closed_form(int n, long d) {
  Rational out(1);
  for (int i = 1; i <= n; ++i) out = out * Rational(d + i) / Rational(i);
  return out;
}

// The rank 3 bundle with c_1 = 0, c_2 = a H^2, c_3 = 0.
inline std::vector<std::vector<Rational>> psu2_gamma(const Rational& a) { return {{Rational(0), a, Rational(0)}}; }

// chi^k for P^2 and the rank 3 bundle above: integral of ch(Lambda^k Omega) ch(Sym^k G) td.
inline Rational spencer_chi(int k, const Rational& a) {
  const Series sym = class_series(2, {3}, [k](int d, const std::vector<Roots>& x) { return sym_part(d, x[0], k); },
                                  psu2_gamma(a));
  return mul(mul(ch_forms(2, k), sym), todd_projective(2))[2];
}

}  // namespace oracle
