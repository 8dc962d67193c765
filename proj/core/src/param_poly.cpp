#include "spencer/param_poly.hpp"

#include <algorithm>

#include "spencer/detail/terms.hpp"
#include "spencer/error.hpp"

namespace spencer {

ParamPoly::ParamPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

ParamPoly::ParamPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ParamPoly ParamPoly::parse(std::string_view text, std::string_view name) {
  if (name.size() != 1) throw ValidationError("parameter names must be a single letter");
  const detail::SymbolPolynomial poly = detail::parse_symbol_polynomial(text);
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : poly) {
    unsigned e = 0;
    for (const auto& [sym, exp] : mono) {
      if (sym != name.front())
        throw ValidationError("unexpected symbol '" + std::string(1, sym) + "' in '" + std::string(text) + "'");
      e = exp;
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += c;
  }
  return ParamPoly(std::move(coeffs));
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational ParamPoly::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational ParamPoly::constant() const {
  if (coeffs_.size() > 1) throw ValidationError("value depends on the symbolic parameter: " + to_string());
  return coefficient(0);
}

Rational ParamPoly::evaluate(const Rational& value) const {
  Rational out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * value + *it;
  return out;
}

std::string ParamPoly::to_string(std::string_view name) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (d == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += name;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (rhs.coeffs_.size() == 1) return *this *= rhs.coeffs_.front();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

ParamPoly& ParamPoly::operator/=(const Rational& rhs) {
  const Rational inv = rhs.inverse();
  for (auto& c : coeffs_) c *= inv;
  return *this;
}

}  // namespace spencer
