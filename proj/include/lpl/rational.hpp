#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace lpl {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class. It exists so that arithmetic never
/// yields a GMP expression template (which does not mix well with `auto`)
/// and so that parsing goes through one validated entry point.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts `p` or `p/q` with optional leading sign; q must be nonzero.
  /// Throws InputError("bad rational: ...") otherwise.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const { return value_.get_str(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace lpl
