#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spencer/param_poly.hpp"

namespace spencer {

/// The cohomology ring Q[H]/(H^{n+1}) of complex projective n-space.
struct RingDescriptor {
  int dim = 0;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Element of Q[H]/(H^{n+1}), one coefficient per degree 0..n.
///
/// Products truncate everything above degree n, so H^{n+1} = 0 holds in every
/// value. Binary operations on elements of different rings throw
/// ValidationError.
class GradedElement {
 public:
  explicit GradedElement(RingDescriptor ring);
  GradedElement(RingDescriptor ring, std::vector<ParamPoly> coefficients);

  static GradedElement constant(RingDescriptor ring, ParamPoly value);
  static GradedElement one(RingDescriptor ring) { return constant(ring, ParamPoly(1)); }
  /// The hyperplane class H (zero on a point).
  static GradedElement hyperplane(RingDescriptor ring);
  /// value * H^degree, zero if degree exceeds the ring dimension.
  static GradedElement monomial(RingDescriptor ring, int degree, ParamPoly value);

  /// Parses "6 - 9*H + (9/2 - 2*a)*H^2"; the parameter letter and H are the
  /// only symbols allowed. Degrees above n are dropped.
  static GradedElement parse(RingDescriptor ring, std::string_view text, std::string_view param = "a");

  RingDescriptor ring() const noexcept { return ring_; }
  int dim() const noexcept { return ring_.dim; }
  const std::vector<ParamPoly>& coefficients() const noexcept { return coeffs_; }
  const ParamPoly& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
  ParamPoly& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }

  bool is_zero() const;
  /// Drops to Q[H]/(H^{m+1}) for m <= n.
  GradedElement project(int m) const;
  /// Only the degree-d component.
  GradedElement component(int degree) const;

  /// Evaluates the symbolic parameter at a rational value.
  GradedElement evaluate(const Rational& value) const;

  std::string to_string(std::string_view param = "a") const;

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& rhs);
  GradedElement& operator-=(const GradedElement& rhs);
  GradedElement& operator*=(const GradedElement& rhs);
  GradedElement& operator*=(const ParamPoly& rhs);
  GradedElement& operator/=(const Rational& rhs);

  friend GradedElement operator+(GradedElement lhs, const GradedElement& rhs) { return lhs += rhs; }
  friend GradedElement operator-(GradedElement lhs, const GradedElement& rhs) { return lhs -= rhs; }
  friend GradedElement operator*(GradedElement lhs, const GradedElement& rhs) { return lhs *= rhs; }
  friend GradedElement operator*(GradedElement lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  friend GradedElement operator*(const ParamPoly& lhs, GradedElement rhs) { return rhs *= lhs; }
  friend GradedElement operator/(GradedElement lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const GradedElement&, const GradedElement&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GradedElement& g) { return os << g.to_string(); }

 private:
  void require_same_ring(const GradedElement& other) const;

  RingDescriptor ring_;
  std::vector<ParamPoly> coeffs_;
};

/// Truncated polynomial product; same as operator*.
GradedElement ring_mul(const GradedElement& a, const GradedElement& b);

/// Coefficient of H^n, with the normalization integral of H^n over P^n = 1.
ParamPoly integrate(const GradedElement& a);

/// sum_{k=0}^{n} a^k / k!. The argument must be nilpotent (zero constant term).
GradedElement exp_truncated(const GradedElement& a);

/// a^e with truncation.
GradedElement pow(const GradedElement& a, unsigned exponent);

}  // namespace spencer
