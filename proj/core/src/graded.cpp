#include "spencer/graded.hpp"

#include "spencer/detail/terms.hpp"
#include "spencer/error.hpp"

namespace spencer {

namespace {

void check_ring(RingDescriptor ring) {
  if (ring.dim < 0) throw ValidationError("ring dimension must be non-negative");
}

}  // namespace

GradedElement::GradedElement(RingDescriptor ring) : ring_(ring) {
  check_ring(ring);
  coeffs_.resize(static_cast<std::size_t>(ring.dim) + 1);
}

GradedElement::GradedElement(RingDescriptor ring, std::vector<ParamPoly> coefficients) : ring_(ring) {
  check_ring(ring);
  coefficients.resize(static_cast<std::size_t>(ring.dim) + 1);
  coeffs_ = std::move(coefficients);
}

GradedElement GradedElement::constant(RingDescriptor ring, ParamPoly value) {
  GradedElement out(ring);
  out.coeffs_[0] = std::move(value);
  return out;
}

GradedElement GradedElement::hyperplane(RingDescriptor ring) { return monomial(ring, 1, ParamPoly(1)); }

GradedElement GradedElement::monomial(RingDescriptor ring, int degree, ParamPoly value) {
  GradedElement out(ring);
  if (degree < 0) throw ValidationError("negative degree");
  if (degree <= ring.dim) out.coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
  return out;
}

GradedElement GradedElement::parse(RingDescriptor ring, std::string_view text, std::string_view param) {
  if (param.size() != 1 || param.front() == 'H')
    throw ValidationError("parameter name must be a single letter other than H");
  GradedElement out(ring);
  for (const auto& [mono, c] : detail::parse_symbol_polynomial(text)) {
    unsigned h = 0;
    unsigned p = 0;
    for (const auto& [sym, e] : mono) {
      if (sym == 'H')
        h = e;
      else if (sym == param.front())
        p = e;
      else
        throw ValidationError("unexpected symbol '" + std::string(1, sym) + "' in '" + std::string(text) + "'");
    }
    if (static_cast<int>(h) > ring.dim) continue;
    std::vector<Rational> coeffs(p + 1);
    coeffs[p] = c;
    out.coeffs_[h] += ParamPoly(std::move(coeffs));
  }
  return out;
}

bool GradedElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

GradedElement GradedElement::project(int m) const {
  if (m < 0 || m > ring_.dim) throw ValidationError("projection target must have dimension in [0, n]");
  return GradedElement(RingDescriptor{m}, std::vector<ParamPoly>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

GradedElement GradedElement::component(int degree) const {
  GradedElement out(ring_);
  if (degree >= 0 && degree <= ring_.dim) out.coeffs_[static_cast<std::size_t>(degree)] = coeffs_[static_cast<std::size_t>(degree)];
  return out;
}

GradedElement GradedElement::evaluate(const Rational& value) const {
  GradedElement out(ring_);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) out.coeffs_[d] = ParamPoly(coeffs_[d].evaluate(value));
  return out;
}

std::string GradedElement::to_string(std::string_view param) const {
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const ParamPoly& c = coeffs_[d];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_constant()) {
      const Rational v = c.constant();
      negative = v.sign() < 0;
      const Rational mag = v.abs();
      if (d == 0 || mag != Rational(1)) body = mag.to_string();
    } else if (c.coefficients().size() == 2 && c.coefficient(0).is_zero()) {
      const Rational v = c.coefficient(1);
      negative = v.sign() < 0;
      const Rational mag = v.abs();
      body = (mag == Rational(1) ? std::string() : mag.to_string() + "*") + std::string(param);
    } else {
      body = "(" + c.to_string(param) + ")";
    }
    if (d > 0) {
      if (!body.empty()) body += "*";
      body += d == 1 ? "H" : "H^" + std::to_string(d);
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

void GradedElement::require_same_ring(const GradedElement& other) const {
  if (ring_ != other.ring_)
    throw ValidationError("ring mismatch: P^" + std::to_string(ring_.dim) + " vs P^" + std::to_string(other.ring_.dim));
}

GradedElement GradedElement::operator-() const {
  GradedElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
  require_same_ring(rhs);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
  require_same_ring(rhs);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
  return *this;
}

GradedElement& GradedElement::operator*=(const GradedElement& rhs) {
  require_same_ring(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<ParamPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!rhs.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

GradedElement& GradedElement::operator*=(const ParamPoly& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

GradedElement& GradedElement::operator/=(const Rational& rhs) {
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

GradedElement ring_mul(const GradedElement& a, const GradedElement& b) { return a * b; }

ParamPoly integrate(const GradedElement& a) { return a[a.dim()]; }

GradedElement exp_truncated(const GradedElement& a) {
  if (!a[0].is_zero()) throw ValidationError("exp_truncated needs a nilpotent argument (zero constant term)");
  GradedElement out = GradedElement::one(a.ring());
  GradedElement term = GradedElement::one(a.ring());
  for (int k = 1; k <= a.dim(); ++k) {
    term *= a;
    term /= Rational(k);
    out += term;
  }
  return out;
}

GradedElement pow(const GradedElement& a, unsigned exponent) {
  GradedElement out = GradedElement::one(a.ring());
  for (unsigned i = 0; i < exponent; ++i) out *= a;
  return out;
}

}  // namespace spencer
