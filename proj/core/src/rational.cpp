#include "spencer/rational.hpp"

#include <cctype>
#include <limits>

#include "spencer/error.hpp"

namespace spencer {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational literal");

  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ValidationError("malformed rational literal '" + std::string(text) + "'");

  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ValidationError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ValidationError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw ValidationError("expected an integer, got " + to_string());
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw ValidationError("integer out of range: " + to_string());
  return n.get_si();
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= (x - Rational(i)) / Rational(i + 1);
  return out;
}

Rational factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(out));
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace spencer
