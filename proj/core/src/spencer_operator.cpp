#include "spencer/spencer_operator.hpp"

#include <algorithm>
#include <numeric>

#include "spencer/hodge.hpp"

namespace spencer {

namespace {

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = Rational(1);
  return v;
}

void accumulate(SymElement& into, SymBasis::Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = into.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

// s (.) t for sparse symmetric tensors: multiset union of monomials.
SymElement sym_product(const SymElement& s, const SymElement& t) {
  SymElement out;
  for (const auto& [ms, cs] : s)
    for (const auto& [mt, ct] : t) {
      SymBasis::Monomial m = ms;
      m.insert(m.end(), mt.begin(), mt.end());
      accumulate(out, std::move(m), cs * ct);
    }
  return out;
}

SymElement as_element(const SymBasis::Monomial& m) { return SymElement{{m, Rational(1)}}; }

SymElement column_element(const Matrix& matrix, const SymBasis& codomain, std::size_t column) {
  SymElement out;
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    if (!matrix(r, column).is_zero()) out.emplace(codomain[r], matrix(r, column));
  return out;
}

// Images of every degree-p monomial under delta, cached per degree.
class DeltaTable {
 public:
  DeltaTable(const DualWeight& lambda, LeibnizConvention convention) : lambda_(lambda), convention_(convention) {}

  SymElement apply(const SymBasis::Monomial& m) {
    const std::size_t p = m.size();
    auto it = matrices_.find(p);
    if (it == matrices_.end()) it = matrices_.emplace(p, delta_matrix(lambda_, p, convention_)).first;
    const SymBasis domain(lambda_.algebra.dim(), p);
    return it->second.image_of(domain.index_of(m));
  }

 private:
  const DualWeight& lambda_;
  LeibnizConvention convention_;
  std::map<std::size_t, OperatorMatrix> matrices_;
};

Rational permanent(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational out(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

const char* to_string(LeibnizConvention c) {
  return c == LeibnizConvention::unsigned_derivation ? "unsigned-derivation" : "signed-ordered";
}

LeibnizConvention parse_convention(const std::string& name) {
  if (name == "unsigned-derivation" || name == "unsigned") return LeibnizConvention::unsigned_derivation;
  if (name == "signed-ordered" || name == "signed") return LeibnizConvention::signed_ordered;
  throw ValidationError("unknown Leibniz convention '" + name + "'");
}

std::string format_sym_element(const SymElement& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : s) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != Rational(1) || m.empty()) out += mag.to_string() + (m.empty() ? "" : "*");
    if (!m.empty()) out += SymBasis::label(m);
  }
  return out;
}

SymElement OperatorMatrix::image_of(std::size_t column) const {
  return column_element(matrix, codomain_basis(), column);
}

Matrix delta_generator_form(const DualWeight& lambda, std::size_t generator) {
  const LieAlgebraData& alg = lambda.algebra;
  const std::size_t n = alg.dim();
  if (generator >= n) throw ValidationError("generator index out of range");
  const std::vector<Rational> v = unit(n, generator);
  // inner[b] = [e_b, v]
  std::vector<std::vector<Rational>> inner(n);
  for (std::size_t b = 0; b < n; ++b) inner[b] = alg.bracket(unit(n, b), v);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational ab = lambda.pair(alg.bracket(unit(n, a), inner[b]));
      const Rational ba = lambda.pair(alg.bracket(unit(n, b), inner[a]));
      s(a, b) = (ab + ba) / Rational(2);
    }
  return s;
}

SymElement delta_on_generator(const DualWeight& lambda, std::size_t generator) {
  const Matrix s = delta_generator_form(lambda, generator);
  SymElement out;
  for (std::size_t a = 0; a < s.rows(); ++a) {
    accumulate(out, {a, a}, s(a, a));
    for (std::size_t b = a + 1; b < s.cols(); ++b) accumulate(out, {a, b}, Rational(2) * s(a, b));
  }
  return out;
}

OperatorMatrix delta_matrix(const DualWeight& lambda, std::size_t k, LeibnizConvention convention) {
  const std::size_t n = lambda.algebra.dim();
  const SymBasis domain(n, k);
  const SymBasis codomain(n, k + 1);
  OperatorMatrix out{n, k, k + 1, Matrix(codomain.size(), domain.size())};
  if (k == 0) return out;

  std::vector<SymElement> generator_images(n);
  for (std::size_t v = 0; v < n; ++v) generator_images[v] = delta_on_generator(lambda, v);

  for (std::size_t col = 0; col < domain.size(); ++col) {
    const SymBasis::Monomial& m = domain[col];
    SymElement image;
    for (std::size_t i = 0; i < m.size(); ++i) {
      SymBasis::Monomial rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const bool negate = convention == LeibnizConvention::signed_ordered && i % 2 == 1;
      for (const auto& [pair, c] : generator_images[m[i]]) {
        SymBasis::Monomial merged = rest;
        merged.insert(merged.end(), pair.begin(), pair.end());
        accumulate(image, std::move(merged), negate ? -c : c);
      }
    }
    for (const auto& [mono, c] : image) out.matrix(codomain.index_of(mono), col) = c;
  }
  return out;
}

Rational leibniz_obstruction(const DualWeight& lambda, std::size_t k, LeibnizConvention convention) {
  if (k < 2) throw ValidationError("Leibniz obstruction needs degree k >= 2");
  const SymBasis basis(lambda.algebra.dim(), k);
  DeltaTable delta(lambda, convention);
  const bool signed_rule = convention == LeibnizConvention::signed_ordered;

  auto rule = [&](const SymBasis::Monomial& s1, const SymBasis::Monomial& s2) {
    SymElement out = sym_product(delta.apply(s1), as_element(s2));
    const Rational sign = signed_rule && s1.size() % 2 == 1 ? Rational(-1) : Rational(1);
    for (const auto& [m, c] : sym_product(as_element(s1), delta.apply(s2))) accumulate(out, m, sign * c);
    return out;
  };

  Rational worst(0);
  for (const auto& m : basis.monomials()) {
    // Every sub-multiset s1 of m with 0 < |s1| < k, visited once via bitmasks
    // restricted to canonical (leftmost-run) choices.
    const std::size_t total = std::size_t{1} << k;
    for (std::size_t mask = 1; mask + 1 < total; ++mask) {
      bool canonical = true;
      for (std::size_t i = 1; i < k && canonical; ++i)
        if (m[i] == m[i - 1] && ((mask >> i) & 1U) && !((mask >> (i - 1)) & 1U)) canonical = false;
      if (!canonical) continue;
      SymBasis::Monomial s1, s2;
      for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1U ? s1 : s2).push_back(m[i]);
      SymElement diff = rule(s1, s2);
      for (const auto& [mono, c] : rule(s2, s1)) accumulate(diff, mono, -c);
      for (const auto& [mono, c] : diff)
        if (c.abs() > worst) worst = c.abs();
    }
  }
  return worst;
}

bool NilpotencyReport::claim_holds() const {
  return std::all_of(entries.begin(), entries.end(), [](const NilpotencyEntry& e) { return e.vanishes; });
}

NilpotencyReport nilpotency_report(const DualWeight& lambda, std::size_t k_max) {
  NilpotencyReport report;
  OperatorMatrix current = delta_matrix(lambda, 0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    OperatorMatrix next = delta_matrix(lambda, k + 1);
    NilpotencyEntry e;
    e.degree = k;
    e.composite = next.matrix * current.matrix;
    e.max_abs_entry = e.composite.max_abs_entry();
    e.vanishes = e.composite.is_zero();
    report.entries.push_back(std::move(e));
    current = std::move(next);
  }
  return report;
}

OperatorMatrix spencer_differential_point_model(const DualWeight& lambda, std::size_t k, LeibnizConvention convention) {
  OperatorMatrix d = delta_matrix(lambda, k, convention);
  if (k % 2 == 1) d.matrix = -d.matrix;
  return d;
}

OperatorMatrix operator_difference(const DualWeight& lambda, std::size_t k, LeibnizConvention convention) {
  const OperatorMatrix plus = spencer_differential_point_model(lambda, k, convention);
  const OperatorMatrix minus = spencer_differential_point_model(-lambda, k, convention);
  OperatorMatrix r{plus.algebra_dim, k, k + 1, minus.matrix - plus.matrix};
  const Rational factor = k % 2 == 0 ? Rational(-2) : Rational(2);
  if (r.matrix != factor * delta_matrix(lambda, k, convention).matrix)
    throw InternalError("operator difference R^" + std::to_string(k) + " != -2(-1)^k delta");
  return r;
}

Matrix sym_gram(const LieAlgebraData& algebra, std::size_t k) {
  const Matrix g = -killing_form(algebra);
  if (!g.is_positive_definite())
    throw ValidationError("Sym inner product needs a negative definite Killing form (compact real form)");
  const SymBasis basis(algebra.dim(), k);
  const Rational inv_fact = factorial(static_cast<long>(k)).inverse();
  Matrix out(basis.size(), basis.size());
  Matrix block(k, k);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) block(a, b) = g(basis[i][a], basis[j][b]);
      const Rational v = permanent(block) * inv_fact;
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

PerturbationReport perturbation_check(const DualWeight& lambda, std::size_t k, LeibnizConvention convention) {
  const Rational w = weight_function(lambda);
  std::vector<Matrix> grams;
  std::vector<Matrix> d_plus, d_minus, r;
  for (std::size_t j = 0; j <= k + 1; ++j) grams.push_back(w * sym_gram(lambda.algebra, j));
  for (std::size_t j = 0; j <= k; ++j) {
    d_plus.push_back(spencer_differential_point_model(lambda, j, convention).matrix);
    d_minus.push_back(spencer_differential_point_model(-lambda, j, convention).matrix);
    r.push_back(operator_difference(lambda, j, convention).matrix);
  }

  PerturbationReport report;
  report.degree = k;
  report.direct = laplacian_chain(d_minus, grams, k) - laplacian_chain(d_plus, grams, k);

  auto adj = [&](const Matrix& a, std::size_t j) { return adjoint(a, grams[j], grams[j + 1]); };
  const Matrix& dk = d_plus[k];
  const Matrix& rk = r[k];
  Matrix expanded = adj(rk, k) * dk + adj(dk, k) * rk + adj(rk, k) * rk;
  if (k >= 1) {
    const Matrix& dp = d_plus[k - 1];
    const Matrix& rp = r[k - 1];
    expanded += dp * adj(rp, k - 1) + rp * adj(dp, k - 1) + rp * adj(rp, k - 1);
  }
  report.expanded = std::move(expanded);
  report.agree = report.direct == report.expanded;
  return report;
}

}  // namespace spencer
