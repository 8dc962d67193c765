#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spencer/rational.hpp"

namespace spencer {

/// Polynomial in one formal parameter with exact rational coefficients.
///
/// This is the coefficient type of the cohomology rings: a bundle may carry a
/// symbolic characteristic number (c_2 = aH^2 with `a` left free), and every
/// downstream quantity is then an exact polynomial in `a`. Purely numeric
/// computations only ever see constant polynomials.
///
/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and equality is structural.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT
  ParamPoly(int constant) : ParamPoly(Rational(constant)) {}  // NOLINT
  explicit ParamPoly(std::vector<Rational> coefficients);

  /// The parameter itself.
  static ParamPoly parameter() { return ParamPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  /// Parses the format produced by to_string, e.g. "10 - 3*a", "39/2 - 3/2*a",
  /// "a^2 + 1". Juxtaposition "3a" is also accepted.
  static ParamPoly parse(std::string_view text, std::string_view name = "a");

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t degree) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree, or -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Constant value; throws ValidationError if the parameter still occurs.
  Rational constant() const;

  Rational evaluate(const Rational& value) const;

  std::string to_string(std::string_view name = "a") const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  ParamPoly& operator*=(const Rational& rhs);
  ParamPoly& operator/=(const Rational& rhs);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
    ParamPoly out = lhs;
    return out *= rhs;
  }
  friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend ParamPoly operator*(const Rational& lhs, ParamPoly rhs) { return rhs *= lhs; }
  friend ParamPoly operator/(ParamPoly lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace spencer
