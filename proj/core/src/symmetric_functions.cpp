#include "spencer/symmetric_functions.hpp"

#include "spencer/error.hpp"

namespace spencer {

namespace {

thread_local bool newton_corrupted = false;

const GradedElement* at(const std::vector<GradedElement>& v, int i) {
  return i >= 0 && static_cast<std::size_t>(i) < v.size() ? &v[static_cast<std::size_t>(i)] : nullptr;
}

RingDescriptor ring_of(const std::vector<GradedElement>& v) {
  if (v.empty()) throw ValidationError("symmetric-function conversion needs at least one entry to fix the ring");
  return v.front().ring();
}

}  // namespace

// p_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j
std::vector<GradedElement> power_sums_from_elementary(const std::vector<GradedElement>& elementary, int count) {
  const RingDescriptor ring = ring_of(elementary);
  std::vector<GradedElement> p(static_cast<std::size_t>(count) + 1, GradedElement(ring));
  for (int j = 1; j <= count; ++j) {
    GradedElement acc(ring);
    for (int i = 1; i < j; ++i) {
      const GradedElement* e = at(elementary, i);
      if (e == nullptr) continue;
      Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
      if (newton_corrupted && i == 2) sign = -sign;
      acc += (*e * p[static_cast<std::size_t>(j - i)]) * ParamPoly(sign);
    }
    if (const GradedElement* e = at(elementary, j)) {
      Rational sign = (j % 2 == 1) ? Rational(j) : Rational(-j);
      if (newton_corrupted && j == 2) sign = -sign;
      acc += *e * ParamPoly(sign);
    }
    p[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return p;
}

// j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
std::vector<GradedElement> elementary_from_power_sums(const std::vector<GradedElement>& power_sums, int count) {
  const RingDescriptor ring = ring_of(power_sums);
  std::vector<GradedElement> e(static_cast<std::size_t>(count) + 1, GradedElement(ring));
  e[0] = GradedElement::one(ring);
  for (int j = 1; j <= count; ++j) {
    GradedElement acc(ring);
    for (int i = 1; i <= j; ++i) {
      const GradedElement* p = at(power_sums, i);
      if (p == nullptr) continue;
      const GradedElement term = e[static_cast<std::size_t>(j - i)] * *p;
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[static_cast<std::size_t>(j)] = acc / Rational(j);
  }
  return e;
}

std::vector<Rational> bernoulli_numbers(int count) {
  std::vector<Rational> b(static_cast<std::size_t>(count) + 1);
  if (count < 0) return {};
  b[0] = Rational(1);
  for (int m = 1; m <= count; ++m) {
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b;
}

namespace fault_injection {

ScopedNewtonCorruption::ScopedNewtonCorruption() : previous_(newton_corrupted) { newton_corrupted = true; }
ScopedNewtonCorruption::~ScopedNewtonCorruption() { newton_corrupted = previous_; }

}  // namespace fault_injection

}  // namespace spencer
