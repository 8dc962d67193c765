#include "spencer/split_ring.hpp"

#include <numeric>

#include "spencer/error.hpp"

namespace spencer {

namespace {

int total_degree(const SplitElement::Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

using PureExponent = std::vector<std::uint8_t>;
using PurePoly = std::map<PureExponent, Rational>;

void add_pure(PurePoly& p, const PureExponent& e, const Rational& c) {
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

PurePoly multiply_pure(const PurePoly& a, const PurePoly& b) {
  PurePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      PureExponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      add_pure(out, e, ca * cb);
    }
  return out;
}

// e_k in `count` variables, untruncated.
PurePoly pure_elementary(int count, int k) {
  PurePoly out;
  if (k > count) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    PureExponent e(static_cast<std::size_t>(count), 0);
    for (int i : pick) e[static_cast<std::size_t>(i)] = 1;
    add_pure(out, e, Rational(1));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Caches e_1^{b_1} ... e_m^{b_m} in m variables and the matching Chern monomial.
class ElementaryCache {
 public:
  ElementaryCache(int count, const std::vector<GradedElement>& chern, RingDescriptor ring)
      : count_(count), chern_(chern), ring_(ring) {
    for (int k = 1; k <= count; ++k) elementary_.push_back(pure_elementary(count, k));
  }

  const PurePoly& expansion(const PureExponent& b) {
    auto it = expansions_.find(b);
    if (it != expansions_.end()) return it->second;
    PurePoly out{{PureExponent(static_cast<std::size_t>(count_), 0), Rational(1)}};
    for (int k = 0; k < count_; ++k)
      for (int t = 0; t < b[static_cast<std::size_t>(k)]; ++t) out = multiply_pure(out, elementary_[static_cast<std::size_t>(k)]);
    return expansions_.emplace(b, std::move(out)).first->second;
  }

  const GradedElement& chern_monomial(const PureExponent& b) {
    auto it = chern_monomials_.find(b);
    if (it != chern_monomials_.end()) return it->second;
    GradedElement out = GradedElement::one(ring_);
    for (int k = 0; k < count_; ++k) {
      if (b[static_cast<std::size_t>(k)] == 0) continue;
      const auto idx = static_cast<std::size_t>(k);
      const GradedElement c = idx < chern_.size() ? chern_[idx] : GradedElement(ring_);
      out *= pow(c, b[idx]);
    }
    return chern_monomials_.emplace(b, std::move(out)).first->second;
  }

 private:
  int count_;
  const std::vector<GradedElement>& chern_;
  RingDescriptor ring_;
  std::vector<PurePoly> elementary_;
  std::map<PureExponent, PurePoly> expansions_;
  std::map<PureExponent, GradedElement> chern_monomials_;
};

}  // namespace

SplitElement::SplitElement(RingDescriptor ring, int num_roots) : ring_(ring), num_roots_(num_roots) {
  if (ring.dim < 0) throw ValidationError("ring dimension must be non-negative");
  if (num_roots < 0) throw ValidationError("number of roots must be non-negative");
}

SplitElement SplitElement::constant(RingDescriptor ring, int num_roots, ParamPoly value) {
  SplitElement out(ring, num_roots);
  out.add_term(Exponent(static_cast<std::size_t>(num_roots) + 1, 0), value);
  return out;
}

SplitElement SplitElement::root(RingDescriptor ring, int num_roots, int index) {
  if (index < 0 || index >= num_roots) throw ValidationError("root index out of range");
  SplitElement out(ring, num_roots);
  Exponent e(static_cast<std::size_t>(num_roots) + 1, 0);
  e[static_cast<std::size_t>(index)] = 1;
  out.add_term(e, ParamPoly(1));
  return out;
}

SplitElement SplitElement::hyperplane(RingDescriptor ring, int num_roots) {
  SplitElement out(ring, num_roots);
  Exponent e(static_cast<std::size_t>(num_roots) + 1, 0);
  e[static_cast<std::size_t>(num_roots)] = 1;
  out.add_term(e, ParamPoly(1));
  return out;
}

SplitElement SplitElement::from_graded(const GradedElement& g, int num_roots) {
  SplitElement out(g.ring(), num_roots);
  for (int d = 0; d <= g.dim(); ++d) {
    Exponent e(static_cast<std::size_t>(num_roots) + 1, 0);
    e.back() = static_cast<std::uint8_t>(d);
    out.add_term(e, g[d]);
  }
  return out;
}

SplitElement SplitElement::elementary(RingDescriptor ring, int num_roots, int k, int first, int count) {
  if (first < 0 || count < 0 || first + count > num_roots) throw ValidationError("root group out of range");
  SplitElement out(ring, num_roots);
  if (k == 0) return constant(ring, num_roots, ParamPoly(1));
  for (const auto& [pe, c] : pure_elementary(count, k)) {
    Exponent e(static_cast<std::size_t>(num_roots) + 1, 0);
    for (int i = 0; i < count; ++i) e[static_cast<std::size_t>(first + i)] = pe[static_cast<std::size_t>(i)];
    out.add_term(e, ParamPoly(c));
  }
  return out;
}

ParamPoly SplitElement::constant_term() const {
  auto it = terms_.find(Exponent(static_cast<std::size_t>(num_roots_) + 1, 0));
  return it == terms_.end() ? ParamPoly() : it->second;
}

void SplitElement::add_term(const Exponent& exponent, const ParamPoly& c) {
  if (exponent.size() != static_cast<std::size_t>(num_roots_) + 1) throw ValidationError("exponent arity mismatch");
  if (c.is_zero() || total_degree(exponent) > ring_.dim) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SplitElement SplitElement::transpose_roots(int i, int j) const {
  SplitElement out(ring_, num_roots_);
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

bool SplitElement::is_symmetric(int first, int count) const {
  for (int i = first; i + 1 < first + count; ++i)
    if (transpose_roots(i, i + 1) != *this) return false;
  return true;
}

void SplitElement::require_compatible(const SplitElement& other) const {
  if (ring_ != other.ring_ || num_roots_ != other.num_roots_)
    throw ValidationError("splitting ring mismatch");
}

SplitElement SplitElement::operator-() const {
  SplitElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SplitElement& SplitElement::operator+=(const SplitElement& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SplitElement& SplitElement::operator-=(const SplitElement& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SplitElement& SplitElement::operator*=(const ParamPoly& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

SplitElement& SplitElement::operator/=(const Rational& rhs) {
  const Rational inv = rhs.inverse();
  for (auto& [e, c] : terms_) c *= inv;
  return *this;
}

SplitElement operator*(const SplitElement& lhs, const SplitElement& rhs) {
  lhs.require_compatible(rhs);
  SplitElement out(lhs.ring_, lhs.num_roots_);
  const int n = lhs.ring_.dim;
  SplitElement::Exponent e(static_cast<std::size_t>(lhs.num_roots_) + 1);
  for (const auto& [ea, ca] : lhs.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : rhs.terms_) {
      if (da + total_degree(eb) > n) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string SplitElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (int i = 0; i < num_roots_; ++i)
      if (e[static_cast<std::size_t>(i)] > 0)
        out += "*x" + std::to_string(i + 1) + (e[static_cast<std::size_t>(i)] > 1 ? "^" + std::to_string(e[static_cast<std::size_t>(i)]) : "");
    if (e.back() > 0) out += "*H" + (e.back() > 1 ? "^" + std::to_string(e.back()) : std::string());
  }
  return out;
}

SplitElement exp_truncated(const SplitElement& a) {
  if (!a.constant_term().is_zero()) throw ValidationError("exp_truncated needs a nilpotent argument (zero constant term)");
  SplitElement out = SplitElement::constant(a.ring(), a.num_roots(), ParamPoly(1));
  SplitElement term = out;
  for (int k = 1; k <= a.ring().dim; ++k) {
    term = term * a;
    term /= Rational(k);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

SplitElement symmetrize_group(const SplitElement& s, int first, int count, const std::vector<GradedElement>& chern) {
  const int r = s.num_roots();
  if (first < 0 || count < 0 || first + count > r) throw ValidationError("root group out of range");
  for (const auto& c : chern)
    if (c.ring() != s.ring()) throw ValidationError("Chern class lives in a different ring");
  if (!s.is_symmetric(first, count)) throw ValidationError("element is not symmetric in the Chern roots");

  const auto in_group = [&](int i) { return i >= first && i < first + count; };

  // Bucket by the exponents outside the group.
  std::map<SplitElement::Exponent, std::map<PureExponent, ParamPoly>> symbolic;
  for (const auto& [e, c] : s.terms()) {
    SplitElement::Exponent rest;
    rest.reserve(static_cast<std::size_t>(r - count) + 1);
    PureExponent pure(static_cast<std::size_t>(count));
    for (int i = 0; i <= r; ++i) {
      if (i < r && in_group(i))
        pure[static_cast<std::size_t>(i - first)] = e[static_cast<std::size_t>(i)];
      else
        rest.push_back(e[static_cast<std::size_t>(i)]);
    }
    symbolic[rest][pure] = c;
  }

  ElementaryCache cache(count, chern, s.ring());
  SplitElement out(s.ring(), r - count);
  for (auto& [rest, poly] : symbolic) {
    // Reduce each parameter degree separately so the pure polynomials stay rational.
    int max_pdeg = -1;
    for (const auto& [pe, c] : poly) max_pdeg = std::max(max_pdeg, c.degree());
    for (int pd = 0; pd <= max_pdeg; ++pd) {
      PurePoly remaining;
      for (const auto& [pe, c] : poly) add_pure(remaining, pe, c.coefficient(static_cast<std::size_t>(pd)));
      std::vector<Rational> param_unit(static_cast<std::size_t>(pd) + 1);
      param_unit.back() = Rational(1);
      const ParamPoly unit(std::move(param_unit));

      while (!remaining.empty()) {
        const auto lead = std::prev(remaining.end());  // lexicographically largest exponent
        const PureExponent a = lead->first;
        const Rational coeff = lead->second;
        PureExponent b(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
          const int next = i + 1 < count ? a[static_cast<std::size_t>(i + 1)] : 0;
          if (a[static_cast<std::size_t>(i)] < next)
            throw InternalError("symmetric reduction left a non-partition leading monomial");
          b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a[static_cast<std::size_t>(i)] - next);
        }
        for (const auto& [pe, c] : cache.expansion(b)) add_pure(remaining, pe, -coeff * c);
        if (remaining.count(a) != 0) throw InternalError("symmetric reduction failed to cancel its leading term");

        const GradedElement& g = cache.chern_monomial(b);
        for (int d = 0; d <= g.dim(); ++d) {
          if (g[d].is_zero()) continue;
          SplitElement::Exponent e = rest;
          e.back() = static_cast<std::uint8_t>(e.back() + d);
          out.add_term(e, g[d] * unit * ParamPoly(coeff));
        }
      }
    }
  }
  return out;
}

GradedElement symmetrize_to_chern(const SplitElement& s, const std::vector<GradedElement>& chern) {
  const SplitElement reduced = symmetrize_group(s, 0, s.num_roots(), chern);
  GradedElement out(s.ring());
  for (const auto& [e, c] : reduced.terms()) out[e.back()] += c;
  return out;
}

}  // namespace spencer
