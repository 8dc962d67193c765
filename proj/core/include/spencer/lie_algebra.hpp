#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spencer/error.hpp"
#include "spencer/matrix.hpp"

namespace spencer {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_a, e_b] = sum_c f(c, a, b) e_c, indices 0-based.
///
/// Compactness and trivial center cannot be decided from the constants over Q;
/// they ride along as user-supplied metadata.
class LieAlgebraData {
 public:
  explicit LieAlgebraData(std::size_t dim);

  /// su(2) with f(c, a, b) = epsilon_{abc}.
  static LieAlgebraData su2();

  std::size_t dim() const noexcept { return dim_; }
  const Rational& f(std::size_t c, std::size_t a, std::size_t b) const { return constants_[index(c, a, b)]; }
  Rational& f(std::size_t c, std::size_t a, std::size_t b) { return constants_[index(c, a, b)]; }

  /// Coordinates of [x, y] for coordinate vectors x, y.
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  /// Matrix of ad_{e_a}: (ad_a)_{c d} = f(c, a, d).
  Matrix ad(std::size_t a) const;

  bool compact_flag = false;
  bool trivial_center_flag = false;

  friend bool operator==(const LieAlgebraData&, const LieAlgebraData&) = default;

 private:
  std::size_t index(std::size_t c, std::size_t a, std::size_t b) const;

  std::size_t dim_;
  std::vector<Rational> constants_;
};

/// Thrown when the constants are not antisymmetric or violate Jacobi.
class LieStructureError : public ValidationError {
 public:
  enum class Kind { antisymmetry, jacobi };
  LieStructureError(Kind kind, std::array<std::size_t, 3> triple, const std::string& what)
      : ValidationError(what), kind_(kind), triple_(triple) {}

  Kind kind() const noexcept { return kind_; }
  /// (c, a, b) for antisymmetry, (a, b, c) for Jacobi; 0-based.
  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  Kind kind_;
  std::array<std::size_t, 3> triple_;
};

struct LieValidity {
  Matrix killing;               ///< B_ab = tr(ad_a ad_b)
  Rational killing_determinant;
  bool semisimple = false;      ///< Killing form nondegenerate
  bool negative_definite = false;  ///< -B positive definite (compact real form)
};

/// Checks antisymmetry and Jacobi (throws LieStructureError naming the first
/// failing triple) and computes the Killing form.
LieValidity validate_lie(const LieAlgebraData& algebra);

Matrix killing_form(const LieAlgebraData& algebra);

/// An element of the dual space, coordinates in the dual basis.
struct DualWeight {
  LieAlgebraData algebra;
  std::vector<Rational> coords;

  DualWeight(LieAlgebraData algebra, std::vector<Rational> coords);

  DualWeight operator-() const;
  DualWeight scaled(const Rational& s) const;
  Rational pair(const std::vector<Rational>& x) const;
};

/// w(lambda) = 1 + lambda^T (-B)^{-1} lambda.
Rational weight_function(const DualWeight& lambda);

/// Monomial basis of Sym^k: sorted multisets of generator indices in
/// lexicographic order. A monomial u_1 ... u_k stands for the averaged
/// symmetrization (1/k!) sum_sigma u_sigma(1) (x) ... (x) u_sigma(k).
class SymBasis {
 public:
  using Monomial = std::vector<std::size_t>;

  SymBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  /// Position of a monomial; the input need not be sorted.
  std::size_t index_of(Monomial m) const;

  /// "e1*e2^2" style label, 1-based generator names.
  static std::string label(const Monomial& m);

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace spencer
