#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpl/rational.hpp"

namespace lpl {

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector (nu1 before nu2).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q in the coordinates nu1..nun of g*.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// The coordinate function nu_{i+1}.
  static Polynomial variable(std::size_t nvars, std::size_t i);
  /// The linear function v on g*, i.e. sum_i v_i nu_i.
  static Polynomial linear(std::span<const Rational> v);

  /// Parses sums of terms `coef * nu1^a * nu2^b`, coefficients as `p` or
  /// `p/q`. Variables beyond nvars are rejected. Throws InputError.
  static Polynomial parse(std::string_view text, std::size_t nvars);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  [[nodiscard]] Polynomial derivative(std::size_t var) const;
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  [[nodiscard]] std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p) { return Rational(-1) * p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace lpl
