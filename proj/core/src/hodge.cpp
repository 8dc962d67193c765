#include "spencer/hodge.hpp"

#include <string>

namespace spencer {

namespace {

void check_shapes(const std::vector<Matrix>& ops, const std::vector<Matrix>& grams) {
  if (grams.size() != ops.size() + 1)
    throw ValidationError("a chain with " + std::to_string(ops.size()) + " maps needs " + std::to_string(ops.size() + 1) +
                          " Gram matrices, got " + std::to_string(grams.size()));
  for (std::size_t k = 0; k < grams.size(); ++k)
    if (!grams[k].is_square()) throw ValidationError("Gram matrix " + std::to_string(k) + " is not square");
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (ops[k].cols() != grams[k].rows() || ops[k].rows() != grams[k + 1].rows())
      throw ValidationError("d_" + std::to_string(k) + " has shape " + std::to_string(ops[k].rows()) + "x" +
                            std::to_string(ops[k].cols()) + ", expected " + std::to_string(grams[k + 1].rows()) + "x" +
                            std::to_string(grams[k].rows()));
}

// <x, y>_G = 0 for every column pair.
bool orthogonal(const Matrix& a, const Matrix& b, const Matrix& gram) {
  if (a.cols() == 0 || b.cols() == 0) return true;
  return (a.transpose() * gram * b).is_zero();
}

}  // namespace

Matrix adjoint(const Matrix& a, const Matrix& gram_domain, const Matrix& gram_codomain) {
  if (gram_domain.rows() != a.cols() || gram_codomain.rows() != a.rows())
    throw ValidationError("adjoint: Gram matrices do not match the map's shape");
  return gram_domain.inverse() * a.transpose() * gram_codomain;
}

Matrix laplacian_chain(const std::vector<Matrix>& ops, const std::vector<Matrix>& grams, std::size_t k) {
  check_shapes(ops, grams);
  if (k >= grams.size()) throw ValidationError("Laplacian degree out of range");
  const std::size_t n = grams[k].rows();
  Matrix out(n, n);
  if (k < ops.size()) out += adjoint(ops[k], grams[k], grams[k + 1]) * ops[k];
  if (k >= 1 && k - 1 < ops.size()) out += ops[k - 1] * adjoint(ops[k - 1], grams[k - 1], grams[k]);
  return out;
}

NotAComplexError::NotAComplexError(std::size_t degree, Matrix composite)
    : ValidationError("not a complex: d_" + std::to_string(degree + 1) + " d_" + std::to_string(degree) +
                      " != 0 (max |entry| " + composite.max_abs_entry().to_string() + ")"),
      degree_(degree),
      composite_(std::move(composite)) {}

bool HodgeReport::holds() const {
  for (const auto& d : degrees)
    if (!d.dims_match || !d.orthogonal || !d.spans) return false;
  return true;
}

HodgeReport hodge_verify(const std::vector<Matrix>& ops, const std::vector<Matrix>& grams) {
  check_shapes(ops, grams);
  for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
    Matrix composite = ops[k + 1] * ops[k];
    if (!composite.is_zero()) throw NotAComplexError(k, std::move(composite));
  }
  for (std::size_t k = 0; k < grams.size(); ++k)
    if (!grams[k].is_positive_definite())
      throw ValidationError("Gram matrix " + std::to_string(k) + " is not positive definite");

  HodgeReport report;
  for (std::size_t k = 0; k < grams.size(); ++k) {
    const std::size_t n = grams[k].rows();
    HodgeDegree deg;
    deg.degree = k;
    deg.dimension = n;

    const Matrix harmonic = laplacian_chain(ops, grams, k).nullspace();
    const Matrix image = k >= 1 ? ops[k - 1].column_space() : Matrix(n, 0);
    const Matrix coimage = k < ops.size() ? adjoint(ops[k], grams[k], grams[k + 1]).column_space() : Matrix(n, 0);
    const std::size_t kernel_dim = k < ops.size() ? n - ops[k].rank() : n;

    deg.harmonic_dim = harmonic.cols();
    deg.image_dim = image.cols();
    deg.coimage_dim = coimage.cols();
    deg.cohomology_dim = kernel_dim - deg.image_dim;
    deg.dims_match = deg.harmonic_dim == deg.cohomology_dim;
    deg.orthogonal = orthogonal(harmonic, image, grams[k]) && orthogonal(harmonic, coimage, grams[k]) &&
                     orthogonal(image, coimage, grams[k]);
    deg.spans = hstack(hstack(harmonic, image), coimage).rank() == n;
    report.degrees.push_back(deg);
  }
  return report;
}

}  // namespace spencer
