#include "spencer/samples.hpp"

#include <algorithm>

namespace spencer::samples {

long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  return Rational(random_int(rng, -max_num, max_num), random_int(rng, 1, max_den));
}

GradedElement random_graded(Rng& rng, RingDescriptor ring) {
  std::vector<ParamPoly> coeffs;
  for (int d = 0; d <= ring.dim; ++d) coeffs.emplace_back(random_rational(rng));
  return GradedElement(ring, std::move(coeffs));
}

BundleClass random_bundle(Rng& rng, RingDescriptor ring, int max_rank) {
  const int rank = static_cast<int>(random_int(rng, 1, max_rank));
  std::vector<ParamPoly> classes;
  for (int i = 1; i <= std::min(rank, ring.dim); ++i) classes.emplace_back(Rational(random_int(rng, -3, 3)));
  return BundleClass::from_chern_numbers(ring, rank, classes);
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n), d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(random_int(rng, -2, 2));
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Rational(random_int(rng, -2, 2));
    long s = 0;
    while (s == 0) s = random_int(rng, -2, 2);
    d(i, i) = Rational(s);
  }
  return l * u * d;
}

LieAlgebraData change_basis(const LieAlgebraData& algebra, const Matrix& p) {
  const std::size_t n = algebra.dim();
  const Matrix q = p.inverse();
  LieAlgebraData out(n);
  // g(k, a, b) = sum_{i,j} f(k, i, j) p(i, a) p(j, b)
  std::vector<Rational> g(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& f = algebra.f(k, i, j);
        if (f.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (p(i, a).is_zero()) continue;
          const Rational fa = f * p(i, a);
          for (std::size_t b = 0; b < n; ++b) g[(k * n + a) * n + b] += fa * p(j, b);
        }
      }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += q(c, k) * g[(k * n + a) * n + b];
        out.f(c, a, b) = acc;
      }
  out.compact_flag = algebra.compact_flag;
  out.trivial_center_flag = algebra.trivial_center_flag;
  return out;
}

LieAlgebraData sl2() {
  // h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
  LieAlgebraData out(3);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long r) {
    out.f(c, a, b) = Rational(r);
    out.f(c, b, a) = Rational(-r);
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  out.trivial_center_flag = true;
  return out;
}

LieAlgebraData heisenberg() {
  LieAlgebraData out(3);
  out.f(2, 0, 1) = Rational(1);
  out.f(2, 1, 0) = Rational(-1);
  return out;
}

LieAlgebraData su2_sum_su2() {
  const LieAlgebraData s = LieAlgebraData::su2();
  LieAlgebraData out(6);
  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) out.f(3 * block + c, 3 * block + a, 3 * block + b) = s.f(c, a, b);
  out.compact_flag = true;
  out.trivial_center_flag = true;
  return out;
}

std::vector<NamedAlgebra> random_algebras(Rng& rng) {
  std::vector<NamedAlgebra> out;
  auto add = [&](std::string name, const LieAlgebraData& alg, bool compact) {
    out.push_back({std::move(name), change_basis(alg, random_invertible(rng, alg.dim())), compact});
  };
  add("su2", LieAlgebraData::su2(), true);
  add("su2+su2", su2_sum_su2(), true);
  Matrix scale = Matrix::identity(3) * Rational(random_int(rng, 2, 4));
  add("scaled su2", change_basis(LieAlgebraData::su2(), scale), true);
  add("sl2", sl2(), false);
  add("heisenberg", heisenberg(), false);
  add("abelian", LieAlgebraData(static_cast<std::size_t>(random_int(rng, 1, 4))), false);
  return out;
}

Matrix random_gram(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(random_int(rng, -2, 2));
  return m.transpose() * m + Matrix::identity(n);
}

ExactComplex random_exact_complex(Rng& rng, std::size_t length, std::size_t max_dim) {
  std::vector<std::size_t> dims(length), ranks(length > 0 ? length - 1 : 0);
  for (auto& d : dims) d = static_cast<std::size_t>(random_int(rng, 1, static_cast<long>(max_dim)));
  std::size_t prev = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const std::size_t hi = std::min(dims[k] - prev, dims[k + 1]);
    ranks[k] = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(hi)));
    prev = ranks[k];
  }
  std::vector<Matrix> s;
  for (auto d : dims) s.push_back(random_invertible(rng, d));

  ExactComplex out;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const std::size_t offset = k == 0 ? 0 : ranks[k - 1];
    Matrix e(dims[k + 1], dims[k]);
    for (std::size_t i = 0; i < ranks[k]; ++i) e(i, offset + i) = Rational(1);
    out.ops.push_back(s[k + 1] * e * s[k].inverse());
  }
  for (std::size_t k = 0; k < length; ++k) {
    out.grams.push_back(random_gram(rng, dims[k]));
    const std::size_t in = k == 0 ? 0 : ranks[k - 1];
    const std::size_t outr = k < ranks.size() ? ranks[k] : 0;
    out.betti.push_back(dims[k] - in - outr);
  }
  return out;
}

}  // namespace spencer::samples
