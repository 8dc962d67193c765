#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spencer/graded.hpp"

namespace spencer {

/// Element of the splitting ring Q[x_1..x_r, H] truncated at total degree n.
///
/// Each formal Chern root x_i and the hyperplane class H have degree 1, and
/// every monomial of total degree above n is dropped. Exponent vectors have
/// r + 1 entries; the last one is the power of H.
class SplitElement {
 public:
  using Exponent = std::vector<std::uint8_t>;
  using Terms = std::map<Exponent, ParamPoly>;

  SplitElement(RingDescriptor ring, int num_roots);

  static SplitElement constant(RingDescriptor ring, int num_roots, ParamPoly value);
  static SplitElement root(RingDescriptor ring, int num_roots, int index);
  static SplitElement hyperplane(RingDescriptor ring, int num_roots);
  /// Embeds a base-ring element (a polynomial in H only).
  static SplitElement from_graded(const GradedElement& g, int num_roots);
  /// e_k(x_first, ..., x_{first+count-1}).
  static SplitElement elementary(RingDescriptor ring, int num_roots, int k, int first, int count);
  static SplitElement elementary(RingDescriptor ring, int num_roots, int k) { return elementary(ring, num_roots, k, 0, num_roots); }

  RingDescriptor ring() const noexcept { return ring_; }
  int num_roots() const noexcept { return num_roots_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  ParamPoly constant_term() const;

  /// Adds c * monomial, dropping it if its total degree exceeds n.
  void add_term(const Exponent& exponent, const ParamPoly& c);

  /// Swaps roots i and j.
  SplitElement transpose_roots(int i, int j) const;
  /// Invariant under every permutation of the roots x_first..x_{first+count-1}.
  bool is_symmetric(int first, int count) const;
  bool is_symmetric() const { return is_symmetric(0, num_roots_); }

  SplitElement operator-() const;
  SplitElement& operator+=(const SplitElement& rhs);
  SplitElement& operator-=(const SplitElement& rhs);
  SplitElement& operator*=(const ParamPoly& rhs);
  SplitElement& operator/=(const Rational& rhs);

  friend SplitElement operator+(SplitElement lhs, const SplitElement& rhs) { return lhs += rhs; }
  friend SplitElement operator-(SplitElement lhs, const SplitElement& rhs) { return lhs -= rhs; }
  friend SplitElement operator*(const SplitElement& lhs, const SplitElement& rhs);
  friend SplitElement operator*(SplitElement lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  friend SplitElement operator/(SplitElement lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const SplitElement&, const SplitElement&) = default;

  std::string to_string() const;

 private:
  void require_compatible(const SplitElement& other) const;

  RingDescriptor ring_;
  int num_roots_ = 0;
  Terms terms_;
};

/// sum_{k=0}^{n} a^k / k! for nilpotent a.
SplitElement exp_truncated(const SplitElement& a);

/// Rewrites `s`, symmetric in the roots x_first..x_{first+count-1}, as a
/// polynomial in their elementary symmetric functions and substitutes
/// e_i -> chern[i-1] (classes beyond the vector are zero). The group's roots
/// disappear; the result has num_roots - count roots, the remaining roots
/// keeping their relative order.
///
/// Throws ValidationError when `s` is not symmetric in the group.
SplitElement symmetrize_group(const SplitElement& s, int first, int count, const std::vector<GradedElement>& chern);

/// Full reduction of an element symmetric in all its roots to the base ring,
/// with chern[i-1] standing for e_i(x).
GradedElement symmetrize_to_chern(const SplitElement& s, const std::vector<GradedElement>& chern);

}  // namespace spencer
