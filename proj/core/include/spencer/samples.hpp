#pragma once

#include <random>
#include <string>
#include <vector>

#include "spencer/char_classes.hpp"
#include "spencer/lie_algebra.hpp"
#include "spencer/matrix.hpp"

// Seeded random inputs for property checks, benchmarks and the selftest.
namespace spencer::samples {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long max_num = 5, long max_den = 3);
long random_int(Rng& rng, long lo, long hi);

GradedElement random_graded(Rng& rng, RingDescriptor ring);

/// Rank in [1, max_rank], integer Chern numbers in [-3, 3].
BundleClass random_bundle(Rng& rng, RingDescriptor ring, int max_rank);

/// Random invertible integer matrix (unit lower times unit upper triangular,
/// then a random diagonal scaling).
Matrix random_invertible(Rng& rng, std::size_t n);

/// Structure constants of `algebra` in the basis e'_a = sum_j p(j, a) e_j.
LieAlgebraData change_basis(const LieAlgebraData& algebra, const Matrix& p);

struct NamedAlgebra {
  std::string name;
  LieAlgebraData algebra;
  bool compact;
};

/// su2, su2+su2, scaled su2, sl2(R), Heisenberg, abelian, each in a random basis.
std::vector<NamedAlgebra> random_algebras(Rng& rng);

LieAlgebraData sl2();
LieAlgebraData heisenberg();
LieAlgebraData su2_sum_su2();

/// Exact chain complex with d_{k+1} d_k = 0, built as S_{k+1} E_k S_k^{-1}
/// from a standard complex E with prescribed ranks.
struct ExactComplex {
  std::vector<Matrix> ops;
  std::vector<Matrix> grams;
  std::vector<std::size_t> betti;
};

ExactComplex random_exact_complex(Rng& rng, std::size_t length, std::size_t max_dim);

/// Positive definite M^T M + I.
Matrix random_gram(Rng& rng, std::size_t n);

}  // namespace spencer::samples
