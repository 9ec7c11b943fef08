#include "lpl/rational.hpp"

#include <cctype>

#include "lpl/errors.hpp"

namespace lpl {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("bad rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InputError("bad rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  // Denominators carry no sign of their own.
  if (den.empty() || den.front() == '-' || den.front() == '+' || !is_integer_literal(den)) {
    throw InputError("bad rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw InputError("bad rational: '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(parse_integer(num), d));
}

}  // namespace lpl
