#include "spencer/detail/terms.hpp"

#include <cctype>
#include <string>

#include "spencer/error.hpp"

namespace spencer::detail {
namespace {

void add_into(SymbolPolynomial& acc, const SymbolMonomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

SymbolPolynomial multiply(const SymbolPolynomial& a, const SymbolPolynomial& b) {
  SymbolPolynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      SymbolMonomial m = ma;
      for (const auto& [s, e] : mb) m[s] += e;
      add_into(out, m, ca * cb);
    }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymbolPolynomial parse() {
    SymbolPolynomial out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  unsigned parse_unsigned() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer exponent too large");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  unsigned optional_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return parse_unsigned();
  }

  SymbolPolynomial expr() {
    SymbolPolynomial out = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return out;
      ++pos_;
      SymbolPolynomial rhs = term();
      const Rational sign = c == '-' ? Rational(-1) : Rational(1);
      for (const auto& [m, coeff] : rhs) add_into(out, m, sign * coeff);
    }
  }

  SymbolPolynomial term() {
    Rational sign(1);
    while (peek() == '+' || peek() == '-') {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    SymbolPolynomial out = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        c = peek();
        if (c == '\0') fail("dangling '*'");
      }
      if (!(std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '('))
        break;
      out = multiply(out, factor());
    }
    for (auto& [m, coeff] : out) coeff *= sign;
    return out;
  }

  SymbolPolynomial factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SymbolPolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      const unsigned e = optional_exponent();
      SymbolPolynomial out{{SymbolMonomial{}, Rational(1)}};
      for (unsigned i = 0; i < e; ++i) out = multiply(out, inner);
      return out;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const unsigned e = optional_exponent();
      SymbolMonomial m;
      if (e > 0) m[c] = e;
      return SymbolPolynomial{{m, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t end = pos_;
      // a '/' followed by digits continues the literal
      std::size_t probe = pos_;
      while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) ++probe;
      if (probe < text_.size() && text_[probe] == '/') {
        pos_ = probe + 1;
        skip_space();
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        const Rational value = Rational::parse(text_.substr(start, end - start)) /
                               Rational::parse(text_.substr(dstart, pos_ - dstart));
        return SymbolPolynomial{{SymbolMonomial{}, value}};
      }
      const Rational value = Rational::parse(text_.substr(start, end - start));
      SymbolPolynomial out;
      if (!value.is_zero()) out.emplace(SymbolMonomial{}, value);
      return out;
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolPolynomial parse_symbol_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace spencer::detail
