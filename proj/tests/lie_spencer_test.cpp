#include <gtest/gtest.h>

#include <array>
#include <map>

#include "spencer/hodge.hpp"
#include "spencer/lie_algebra.hpp"
#include "spencer/samples.hpp"
#include "spencer/spencer_operator.hpp"

using namespace spencer;

namespace {

using Vec = std::array<Rational, 3>;

// Cross product: the su(2) bracket written out independently of the library.
Vec cross(const Vec& x, const Vec& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec basis(int i) {
  Vec v{Rational(0), Rational(0), Rational(0)};
  v[static_cast<std::size_t>(i)] = Rational(1);
  return v;
}

Rational pair(const Vec& l, const Vec& x) { return l[0] * x[0] + l[1] * x[1] + l[2] * x[2]; }

// S(w_a, w_b) for generator v, straight from the double brackets.
Rational double_bracket_form(const Vec& l, int v, int a, int b) {
  const Rational ab = pair(l, cross(basis(a), cross(basis(b), basis(v))));
  const Rational ba = pair(l, cross(basis(b), cross(basis(a), basis(v))));
  return (ab + ba) / Rational(2);
}

DualWeight su2(const Vec& l) { return DualWeight(LieAlgebraData::su2(), {l[0], l[1], l[2]}); }

// Sparse symmetric polynomial in e1..e3 and an unsigned derivation on it.
using Poly = std::map<std::vector<std::size_t>, Rational>;

void add(Poly& p, std::vector<std::size_t> m, const Rational& c) {
  std::sort(m.begin(), m.end());
  p[m] += c;
  if (p[m].is_zero()) p.erase(m);
}

Poly derive(const Vec& l, const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p)
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::vector<std::size_t> rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          // delta(e_v) = sum_{a,b} S_ab e_a e_b (the symmetric tensor in monomial form)
          const Rational s = double_bracket_form(l, static_cast<int>(m[i]), a, b);
          if (s.is_zero()) continue;
          auto mm = rest;
          mm.push_back(static_cast<std::size_t>(a));
          mm.push_back(static_cast<std::size_t>(b));
          add(out, mm, c * s);
        }
    }
  return out;
}

Poly column_poly(const Matrix& m, const SymBasis& codomain, std::size_t col) {
  Poly p;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, col).is_zero()) p[codomain[r]] = m(r, col);
  return p;
}

Vec random_vec(samples::Rng& rng) {
  return {samples::random_rational(rng), samples::random_rational(rng), samples::random_rational(rng)};
}

}  // namespace

TEST(LieAlgebra, Su2KillingForm) {
  const LieValidity v = validate_lie(LieAlgebraData::su2());
  EXPECT_EQ(v.killing, Matrix::identity(3) * Rational(-2));
  EXPECT_TRUE(v.semisimple);
  EXPECT_TRUE(v.negative_definite);
}

TEST(LieAlgebra, AbelianIsNotSemisimple) {
  const LieValidity v = validate_lie(LieAlgebraData(4));
  EXPECT_TRUE(v.killing.is_zero());
  EXPECT_FALSE(v.semisimple);
}

TEST(LieAlgebra, AntisymmetryErrorNamesTriple) {
  LieAlgebraData bad(2);
  bad.f(0, 0, 1) = Rational(1);
  bad.f(0, 1, 0) = Rational(1);
  try {
    validate_lie(bad);
    FAIL() << "expected LieStructureError";
  } catch (const LieStructureError& e) {
    EXPECT_EQ(e.kind(), LieStructureError::Kind::antisymmetry);
    EXPECT_EQ(e.triple(), (std::array<std::size_t, 3>{0, 0, 1}));
  }
}

TEST(LieAlgebra, JacobiError) {
  LieAlgebraData bad(3);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c) {
    bad.f(c, a, b) = Rational(1);
    bad.f(c, b, a) = Rational(-1);
  };
  set(0, 1, 0);  // [e1,e2] = e1
  set(0, 2, 1);  // [e1,e3] = e2
  try {
    validate_lie(bad);
    FAIL() << "expected LieStructureError";
  } catch (const LieStructureError& e) {
    EXPECT_EQ(e.kind(), LieStructureError::Kind::jacobi);
  }
}

TEST(LieAlgebra, BasisChangesStayValid) {
  samples::Rng rng(201);
  for (int t = 0; t < 5; ++t)
    for (const auto& named : samples::random_algebras(rng)) {
      const LieValidity v = validate_lie(named.algebra);
      EXPECT_EQ(v.negative_definite, named.compact) << named.name;
    }
}

TEST(WeightFunction, Values) {
  EXPECT_EQ(weight_function(su2({Rational(1), Rational(0), Rational(0)})), Rational(3, 2));
  EXPECT_EQ(weight_function(su2({Rational(0), Rational(0), Rational(0)})), Rational(1));
  EXPECT_THROW(weight_function(DualWeight(samples::heisenberg(), {Rational(1), Rational(0), Rational(0)})),
               ValidationError);
  samples::Rng rng(202);
  for (int t = 0; t < 20; ++t) {
    const DualWeight l = su2(random_vec(rng));
    EXPECT_EQ(weight_function(l), weight_function(-l));
    EXPECT_GE(weight_function(l), Rational(1));
  }
}

TEST(DeltaOnGenerator, MatchesDoubleBracketOracle) {
  samples::Rng rng(203);
  std::vector<Vec> weights = {{Rational(1), Rational(0), Rational(0)}};
  for (int t = 0; t < 5; ++t) weights.push_back(random_vec(rng));
  for (const Vec& l : weights)
    for (int v = 0; v < 3; ++v) {
      const Matrix s = delta_generator_form(su2(l), static_cast<std::size_t>(v));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          ASSERT_EQ(s(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), double_bracket_form(l, v, a, b));
    }
}

TEST(DeltaOnGenerator, Examples) {
  const DualWeight l = su2({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(format_sym_element(delta_on_generator(l, 0)), "-e2^2 - e3^2");
  EXPECT_EQ(format_sym_element(delta_on_generator(l, 1)), "e1*e2");
  EXPECT_EQ(format_sym_element(delta_on_generator(l, 2)), "e1*e3");
  EXPECT_TRUE(delta_on_generator(l.scaled(Rational(0)), 0).empty());
  const SymElement twice = delta_on_generator(l.scaled(Rational(2)), 0);
  for (const auto& [m, c] : delta_on_generator(l, 0)) EXPECT_EQ(twice.at(m), Rational(2) * c);
}

TEST(DeltaMatrix, DegreeOneColumns) {
  const DualWeight l = su2({Rational(1), Rational(0), Rational(0)});
  const OperatorMatrix d = delta_matrix(l, 1);
  ASSERT_EQ(d.matrix.rows(), 6u);
  ASSERT_EQ(d.matrix.cols(), 3u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(d.image_of(v), delta_on_generator(l, v));
  EXPECT_TRUE(delta_matrix(l, 0).matrix.is_zero());
  EXPECT_EQ(delta_matrix(l, 0).matrix.rows(), 3u);
}

TEST(DeltaMatrix, MirrorAntisymmetry) {
  samples::Rng rng(204);
  for (int t = 0; t < 20; ++t) {
    const DualWeight l = su2(random_vec(rng));
    for (std::size_t k = 0; k <= 3; ++k)
      for (auto conv : {LeibnizConvention::unsigned_derivation, LeibnizConvention::signed_ordered})
        ASSERT_EQ(delta_matrix(-l, k, conv), -delta_matrix(l, k, conv));
  }
}

TEST(DeltaMatrix, MatchesBruteForceDerivation) {
  samples::Rng rng(205);
  const Vec l = random_vec(rng);
  for (std::size_t k = 1; k <= 3; ++k) {
    const SymBasis dom(3, k), cod(3, k + 1);
    const Matrix d = delta_matrix(su2(l), k).matrix;
    for (std::size_t col = 0; col < dom.size(); ++col) {
      Poly in;
      in[dom[col]] = Rational(1);
      ASSERT_EQ(column_poly(d, cod, col), derive(l, in)) << "degree " << k << " column " << col;
    }
  }
}

TEST(SpencerDifferential, PointModelSigns) {
  const DualWeight l = su2({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(spencer_differential_point_model(l, 1), -delta_matrix(l, 1));
  EXPECT_EQ(spencer_differential_point_model(l, 2), delta_matrix(l, 2));
  EXPECT_TRUE(spencer_differential_point_model(l.scaled(Rational(0)), 2).matrix.is_zero());
}

TEST(OperatorDifference, Identity) {
  samples::Rng rng(206);
  for (int t = 0; t < 10; ++t) {
    const DualWeight l = su2(random_vec(rng));
    for (std::size_t k = 0; k <= 3; ++k) {
      const Rational factor = k % 2 == 0 ? Rational(-2) : Rational(2);
      ASSERT_EQ(operator_difference(l, k).matrix, factor * delta_matrix(l, k).matrix);
      ASSERT_EQ(operator_difference(l, k).matrix, Rational(-2) * spencer_differential_point_model(l, k).matrix);
    }
  }
  const DualWeight e1 = su2({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(operator_difference(e1, 1).matrix, Rational(2) * delta_matrix(e1, 1).matrix);
}

TEST(LeibnizObstruction, SignedRuleIsInconsistent) {
  const DualWeight l = su2({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(leibniz_obstruction(l, 2, LeibnizConvention::signed_ordered), Rational(2));
  EXPECT_EQ(leibniz_obstruction(l, 2, LeibnizConvention::unsigned_derivation), Rational(0));
  EXPECT_EQ(leibniz_obstruction(l.scaled(Rational(0)), 2, LeibnizConvention::signed_ordered), Rational(0));
  EXPECT_THROW(leibniz_obstruction(l, 1, LeibnizConvention::signed_ordered), ValidationError);
}

TEST(LeibnizObstruction, UnsignedVanishesOnRandomAlgebras) {
  samples::Rng rng(207);
  for (const auto& named : samples::random_algebras(rng)) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < named.algebra.dim(); ++i) c.push_back(samples::random_rational(rng));
    const DualWeight l(named.algebra, c);
    EXPECT_TRUE(leibniz_obstruction(l, 2, LeibnizConvention::unsigned_derivation).is_zero()) << named.name;
  }
}

TEST(Nilpotency, FailsOnSu2) {
  const Vec e1{Rational(1), Rational(0), Rational(0)};
  const NilpotencyReport rep = nilpotency_report(su2(e1), 2);
  EXPECT_FALSE(rep.claim_holds());
  EXPECT_TRUE(rep.entries[0].vanishes);
  const auto& k1 = rep.entries[1];
  EXPECT_FALSE(k1.vanishes);
  // Oracle: apply the brute-force derivation twice to e1.
  Poly p;
  p[{0}] = Rational(1);
  const Poly twice = derive(e1, derive(e1, p));
  Poly expected;
  add(expected, {0, 1, 1}, Rational(-2));
  add(expected, {0, 2, 2}, Rational(-2));
  EXPECT_EQ(twice, expected);
  EXPECT_EQ(column_poly(k1.composite, SymBasis(3, 3), 0), expected);
}

TEST(Nilpotency, ZeroWeightAndScaling) {
  const DualWeight l = su2({Rational(1), Rational(-2), Rational(1, 3)});
  EXPECT_TRUE(nilpotency_report(l.scaled(Rational(0)), 2).claim_holds());
  const auto base = nilpotency_report(l, 2), scaled = nilpotency_report(l.scaled(Rational(3)), 2);
  for (std::size_t k = 0; k < base.entries.size(); ++k)
    EXPECT_EQ(scaled.entries[k].composite, Rational(9) * base.entries[k].composite);
}

TEST(SymGram, Values) {
  EXPECT_EQ(sym_gram(LieAlgebraData::su2(), 1), Matrix::identity(3) * Rational(2));
  EXPECT_EQ(sym_gram(LieAlgebraData::su2(), 0), Matrix::identity(1));
  // <e1^2, e1^2> = perm([[2,2],[2,2]])/2 = 4, <e1 e2, e1 e2> = perm([[2,0],[0,2]])/2 = 2
  const Matrix g2 = sym_gram(LieAlgebraData::su2(), 2);
  EXPECT_EQ(g2(0, 0), Rational(4));
  EXPECT_EQ(g2(1, 1), Rational(2));
  EXPECT_THROW(sym_gram(samples::sl2(), 1), ValidationError);
  samples::Rng rng(208);
  for (const auto& named : samples::random_algebras(rng))
    if (named.compact)
      for (std::size_t k = 0; k <= 3; ++k) EXPECT_TRUE(sym_gram(named.algebra, k).is_positive_definite()) << named.name;
}

TEST(Hodge, LaplacianExamples) {
  const std::vector<Matrix> zero_ops = {Matrix(2, 2)};
  const std::vector<Matrix> grams = {Matrix::identity(2), Matrix::identity(2)};
  EXPECT_TRUE(laplacian_chain(zero_ops, grams, 0).is_zero());
  const std::vector<Matrix> id = {Matrix::identity(1)};
  const std::vector<Matrix> g1 = {Matrix::identity(1), Matrix::identity(1)};
  EXPECT_EQ(laplacian_chain(id, g1, 0), Matrix::identity(1));
  EXPECT_EQ(laplacian_chain(id, g1, 1), Matrix::identity(1));
  EXPECT_THROW(laplacian_chain({Matrix(2, 3)}, g1, 0), ValidationError);
}

TEST(Hodge, CircleComplex) {
  // vertices v0 v1 v2, edges v0v1, v1v2, v2v0; coboundary (df)(e_ij) = f(j) - f(i)
  const Matrix d{{Rational(-1), Rational(1), Rational(0)},
                 {Rational(0), Rational(-1), Rational(1)},
                 {Rational(1), Rational(0), Rational(-1)}};
  const HodgeReport rep = hodge_verify({d}, {Matrix::identity(3), Matrix::identity(3)});
  ASSERT_EQ(rep.degrees.size(), 2u);
  EXPECT_EQ(rep.degrees[0].harmonic_dim, 1u);
  EXPECT_EQ(rep.degrees[1].harmonic_dim, 1u);
  EXPECT_EQ(rep.degrees[0].cohomology_dim, 1u);
  EXPECT_EQ(rep.degrees[1].cohomology_dim, 1u);
  EXPECT_TRUE(rep.holds());
}

TEST(Hodge, ZeroDifferentials) {
  const HodgeReport rep = hodge_verify({Matrix(2, 3)}, {Matrix::identity(3), Matrix::identity(2)});
  EXPECT_EQ(rep.degrees[0].harmonic_dim, 3u);
  EXPECT_EQ(rep.degrees[1].harmonic_dim, 2u);
  EXPECT_TRUE(rep.holds());
}

TEST(Hodge, RandomExactComplexes) {
  samples::Rng rng(209);
  for (int t = 0; t < 25; ++t) {
    const auto c = samples::random_exact_complex(rng, static_cast<std::size_t>(samples::random_int(rng, 2, 5)), 6);
    const HodgeReport rep = hodge_verify(c.ops, c.grams);
    ASSERT_TRUE(rep.holds());
    for (std::size_t k = 0; k < rep.degrees.size(); ++k) {
      ASSERT_EQ(rep.degrees[k].harmonic_dim, c.betti[k]);
      ASSERT_EQ(rep.degrees[k].cohomology_dim, c.betti[k]);
    }
  }
}

TEST(Hodge, DeltaChainIsNotAComplex) {
  const DualWeight l = su2({Rational(1), Rational(0), Rational(0)});
  std::vector<Matrix> ops, grams;
  for (std::size_t k = 0; k <= 2; ++k) ops.push_back(delta_matrix(l, k).matrix);
  for (std::size_t k = 0; k <= 3; ++k) grams.push_back(sym_gram(l.algebra, k));
  try {
    hodge_verify(ops, grams);
    FAIL() << "expected NotAComplexError";
  } catch (const NotAComplexError& e) {
    EXPECT_EQ(e.degree(), 1u);
    EXPECT_EQ(column_poly(e.composite(), SymBasis(3, 3), 0),
              (Poly{{{0, 1, 1}, Rational(-2)}, {{0, 2, 2}, Rational(-2)}}));
  }
}

TEST(Perturbation, TwoPathsAgree) {
  samples::Rng rng(210);
  std::vector<Vec> weights = {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(0), Rational(0)}};
  for (int t = 0; t < 4; ++t) weights.push_back(random_vec(rng));
  for (const Vec& l : weights)
    for (std::size_t k = 0; k <= 3; ++k) {
      const PerturbationReport p = perturbation_check(su2(l), k);
      ASSERT_TRUE(p.agree) << "degree " << k;
      ASSERT_EQ(p.direct, p.expanded);
    }
  const PerturbationReport k1 = perturbation_check(su2({Rational(1), Rational(0), Rational(0)}), 1);
  EXPECT_EQ(k1.direct.rows(), 3u);
  // D flips sign under lambda -> -lambda and the Grams do not move, so the
  // Laplacians coincide and K vanishes; the expansion has to cancel to zero.
  EXPECT_TRUE(k1.direct.is_zero());
  EXPECT_TRUE(k1.expanded.is_zero());
}

TEST(Adjoint, Contract) {
  samples::Rng rng(211);
  for (int t = 0; t < 30; ++t) {
    const auto m = static_cast<std::size_t>(samples::random_int(rng, 1, 5));
    const auto n = static_cast<std::size_t>(samples::random_int(rng, 1, 5));
    Matrix a(m, n), x(n, 1), y(m, 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = samples::random_rational(rng);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = samples::random_rational(rng);
    for (std::size_t i = 0; i < m; ++i) y(i, 0) = samples::random_rational(rng);
    const Matrix gv = samples::random_gram(rng, n), gw = samples::random_gram(rng, m);
    ASSERT_EQ((a * x).transpose() * gw * y, x.transpose() * gv * (adjoint(a, gv, gw) * y));
  }
}
