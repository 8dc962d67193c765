#pragma once

#include <vector>

#include "spencer/graded.hpp"
#include "spencer/split_ring.hpp"

namespace spencer {

/// A vector bundle on P^n seen through its rank and total Chern class.
///
/// The total class must have constant term exactly 1, and classes c_i with
/// i > rank must vanish (the splitting principle needs exactly `rank` roots).
class BundleClass {
 public:
  BundleClass(int rank, GradedElement total_chern);

  /// Rank plus c_1, c_2, ... given as multiples of H^i. Missing classes are zero.
  static BundleClass from_chern_numbers(RingDescriptor ring, int rank, const std::vector<ParamPoly>& classes);
  static BundleClass trivial(RingDescriptor ring, int rank);
  /// O(d).
  static BundleClass line(RingDescriptor ring, ParamPoly degree);

  RingDescriptor ring() const noexcept { return chern_.ring(); }
  int rank() const noexcept { return rank_; }
  const GradedElement& chern() const noexcept { return chern_; }
  /// c_i as a multiple of H^i; zero above the ring dimension.
  ParamPoly chern_number(int i) const;
  /// c_1 .. c_rank as ring elements, the input the symmetrizer expects.
  std::vector<GradedElement> chern_classes() const;

  friend bool operator==(const BundleClass&, const BundleClass&) = default;

 private:
  int rank_;
  GradedElement chern_;
};

/// The Chern roots x_1..x_r of a bundle inside the splitting ring.
struct ChernRoots {
  std::vector<SplitElement> roots;
  BundleClass bundle;

  explicit ChernRoots(const BundleClass& e);
  /// Maps a symmetric expression in the roots back to the base ring.
  GradedElement symmetrize(const SplitElement& s) const { return symmetrize_to_chern(s, bundle.chern_classes()); }
};

/// Power sums p_0..p_n of the Chern roots (p_0 = rank).
std::vector<GradedElement> power_sums(const BundleClass& e);

GradedElement chern_character(const BundleClass& e);
GradedElement todd_class(const BundleClass& e);

/// Character of the Adams operation psi^k: power sums scaled by k^j.
GradedElement adams(const BundleClass& e, int k);

BundleClass dual(const BundleClass& e);
BundleClass direct_sum(const BundleClass& e, const BundleClass& f);
BundleClass tensor(const BundleClass& e, const BundleClass& f);
BundleClass sym_power(const BundleClass& e, int k);
BundleClass ext_power(const BundleClass& e, int k);

/// ch(Sym^k E) and ch(Lambda^k E) through the Adams recursions
///   k ch(Sym^k)     = sum_{i=1}^{k} ch(psi^i) ch(Sym^{k-i})
///   k ch(Lambda^k)  = sum_{i=1}^{k} (-1)^{i-1} ch(psi^i) ch(Lambda^{k-i})
/// used to cross-check the splitting-ring constructions.
GradedElement sym_power_character_adams(const BundleClass& e, int k);
GradedElement ext_power_character_adams(const BundleClass& e, int k);

/// T P^n from the Euler sequence: total class (1+H)^{n+1}.
BundleClass tangent_projective(int n);

}  // namespace spencer
