#include "spencer/lie_algebra.hpp"

#include <algorithm>
#include <functional>

namespace spencer {

LieAlgebraData::LieAlgebraData(std::size_t dim) : dim_(dim), constants_(dim * dim * dim) {
  if (dim == 0) throw ValidationError("Lie algebra dimension must be positive");
}

LieAlgebraData LieAlgebraData::su2() {
  LieAlgebraData out(3);
  // epsilon_{abc}: +1 on cyclic permutations of (0,1,2)
  const std::size_t cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : cyc) {
    out.f(p[2], p[0], p[1]) = Rational(1);
    out.f(p[2], p[1], p[0]) = Rational(-1);
  }
  out.compact_flag = true;
  out.trivial_center_flag = true;
  return out;
}

std::size_t LieAlgebraData::index(std::size_t c, std::size_t a, std::size_t b) const {
  if (c >= dim_ || a >= dim_ || b >= dim_) throw ValidationError("structure constant index out of range");
  return (c * dim_ + a) * dim_ + b;
}

std::vector<Rational> LieAlgebraData::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ValidationError("bracket argument has the wrong length");
  std::vector<Rational> out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      const Rational xy = x[a] * y[b];
      for (std::size_t c = 0; c < dim_; ++c)
        if (!f(c, a, b).is_zero()) out[c] += xy * f(c, a, b);
    }
  }
  return out;
}

Matrix LieAlgebraData::ad(std::size_t a) const {
  Matrix out(dim_, dim_);
  for (std::size_t c = 0; c < dim_; ++c)
    for (std::size_t d = 0; d < dim_; ++d) out(c, d) = f(c, a, d);
  return out;
}

Matrix killing_form(const LieAlgebraData& algebra) {
  const std::size_t n = algebra.dim();
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational acc(0);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) acc += algebra.f(c, a, d) * algebra.f(d, b, c);
      out(a, b) = acc;
    }
  return out;
}

LieValidity validate_lie(const LieAlgebraData& algebra) {
  const std::size_t n = algebra.dim();
  auto name = [](std::size_t i) { return "e" + std::to_string(i + 1); };

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        if (algebra.f(c, a, b) != -algebra.f(c, b, a))
          throw LieStructureError(LieStructureError::Kind::antisymmetry, {c, a, b},
                                  "antisymmetry violated: f[" + std::to_string(c + 1) + "][" + std::to_string(a + 1) +
                                      "][" + std::to_string(b + 1) + "] != -f[" + std::to_string(c + 1) + "][" +
                                      std::to_string(b + 1) + "][" + std::to_string(a + 1) + "]");

  auto unit = [n](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = Rational(1);
    return v;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto ea = unit(a), eb = unit(b), ec = unit(c);
        std::vector<Rational> sum = algebra.bracket(ea, algebra.bracket(eb, ec));
        const auto t2 = algebra.bracket(eb, algebra.bracket(ec, ea));
        const auto t3 = algebra.bracket(ec, algebra.bracket(ea, eb));
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          sum[i] += t2[i] + t3[i];
          if (!sum[i].is_zero()) ok = false;
        }
        if (!ok)
          throw LieStructureError(LieStructureError::Kind::jacobi, {a, b, c},
                                  "Jacobi identity fails for (" + name(a) + ", " + name(b) + ", " + name(c) + ")");
      }

  LieValidity out;
  out.killing = killing_form(algebra);
  out.killing_determinant = out.killing.determinant();
  out.semisimple = !out.killing_determinant.is_zero();
  out.negative_definite = (-out.killing).is_positive_definite();
  return out;
}

DualWeight::DualWeight(LieAlgebraData alg, std::vector<Rational> c) : algebra(std::move(alg)), coords(std::move(c)) {
  if (coords.size() != algebra.dim())
    throw ValidationError("lambda has " + std::to_string(coords.size()) + " coordinates but the algebra has dimension " +
                          std::to_string(algebra.dim()));
}

DualWeight DualWeight::operator-() const { return scaled(Rational(-1)); }

DualWeight DualWeight::scaled(const Rational& s) const {
  std::vector<Rational> c = coords;
  for (auto& x : c) x *= s;
  return DualWeight(algebra, std::move(c));
}

Rational DualWeight::pair(const std::vector<Rational>& x) const {
  if (x.size() != coords.size()) throw ValidationError("pairing with a vector of the wrong length");
  Rational out(0);
  for (std::size_t i = 0; i < x.size(); ++i) out += coords[i] * x[i];
  return out;
}

Rational weight_function(const DualWeight& lambda) {
  const Matrix neg_b = -killing_form(lambda.algebra);
  if (neg_b.determinant().is_zero()) throw ValidationError("weight function needs a nondegenerate Killing form");
  const std::vector<Rational> v = neg_b.inverse() * lambda.coords;
  return Rational(1) + lambda.pair(v);
}

SymBasis::SymBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  Monomial m(degree);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == degree) {
      index_.emplace(m, monomials_.size());
      monomials_.push_back(m);
      return;
    }
    for (std::size_t i = start; i < dim; ++i) {
      m[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

std::size_t SymBasis::index_of(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = index_.find(m);
  if (it == index_.end()) throw ValidationError("monomial " + label(m) + " is not in this Sym basis");
  return it->second;
}

std::string SymBasis::label(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(m[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace spencer
