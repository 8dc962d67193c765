#pragma once

#include <cstddef>
#include <vector>

#include "spencer/error.hpp"
#include "spencer/matrix.hpp"

namespace spencer {

/// Adjoint of a: V -> W with respect to Gram matrices on V and W, i.e. the
/// unique a^dag with <a x, y>_W = <x, a^dag y>_V. Equals G_V^{-1} a^T G_W.
Matrix adjoint(const Matrix& a, const Matrix& gram_domain, const Matrix& gram_codomain);

/// Delta_k = d_k^dag d_k + d_{k-1} d_{k-1}^dag for the chain
/// C_0 -d_0-> C_1 -d_1-> ... with ops[k] = d_k and grams[k] on C_k.
/// Missing differentials at either end count as zero. The maps need not
/// compose to zero.
Matrix laplacian_chain(const std::vector<Matrix>& ops, const std::vector<Matrix>& grams, std::size_t k);

/// d_{k+1} d_k != 0 somewhere; carries the first offending composite.
class NotAComplexError : public ValidationError {
 public:
  NotAComplexError(std::size_t degree, Matrix composite);

  /// k such that d_{k+1} d_k is the reported composite.
  std::size_t degree() const noexcept { return degree_; }
  const Matrix& composite() const noexcept { return composite_; }

 private:
  std::size_t degree_;
  Matrix composite_;
};

struct HodgeDegree {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::size_t harmonic_dim = 0;    ///< dim ker Delta_k
  std::size_t cohomology_dim = 0;  ///< dim ker d_k - rank d_{k-1}
  std::size_t image_dim = 0;       ///< rank d_{k-1}
  std::size_t coimage_dim = 0;     ///< rank d_k^dag
  bool dims_match = false;
  bool orthogonal = false;         ///< harmonic, image, coimage pairwise orthogonal
  bool spans = false;              ///< the three summands fill C_k
};

struct HodgeReport {
  std::vector<HodgeDegree> degrees;
  bool holds() const;
};

/// Finite-dimensional Hodge decomposition check. Throws NotAComplexError if
/// some d_{k+1} d_k is nonzero, ValidationError on shape mismatches or
/// Grams that are not positive definite.
HodgeReport hodge_verify(const std::vector<Matrix>& ops, const std::vector<Matrix>& grams);

}  // namespace spencer
