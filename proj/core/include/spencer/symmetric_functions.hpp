#pragma once

#include <vector>

#include "spencer/graded.hpp"
#include "spencer/rational.hpp"

namespace spencer {

/// Newton identities between elementary symmetric polynomials e_i and power
/// sums p_j, over the truncated graded ring. This is the single place where
/// the conversion lives; Chern characters, Adams operations and Todd classes
/// all route through it.
///
/// `elementary[i]` holds e_i for i = 0..; e_0 is ignored and treated as 1,
/// missing entries are zero. Returns p_0..p_count where p_0 is left zero
/// (callers supply the rank themselves).
std::vector<GradedElement> power_sums_from_elementary(const std::vector<GradedElement>& elementary, int count);

/// Inverse direction: e_0..e_count from p_1..p_count (p_0 ignored).
std::vector<GradedElement> elementary_from_power_sums(const std::vector<GradedElement>& power_sums, int count);

/// Bernoulli numbers B_0..B_count with B_1 = -1/2, computed from the recurrence
/// sum_{k=0}^{m} C(m+1, k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int count);

namespace fault_injection {

/// Flips the sign of the e_2 contribution in the Newton recursion while alive.
/// Exists only so selftest can prove its invariants notice a broken table.
class ScopedNewtonCorruption {
 public:
  ScopedNewtonCorruption();
  ~ScopedNewtonCorruption();
  ScopedNewtonCorruption(const ScopedNewtonCorruption&) = delete;
  ScopedNewtonCorruption& operator=(const ScopedNewtonCorruption&) = delete;

 private:
  bool previous_;
};

}  // namespace fault_injection

}  // namespace spencer
