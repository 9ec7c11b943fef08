#include "lpl/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "lpl/errors.hpp"
#include "lpl/linalg.hpp"

namespace lpl {

namespace {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch("polynomials in " + std::to_string(a.nvars()) + " and " +
                            std::to_string(b.nvars()) + " variables");
  }
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial result(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
      skip_ws();
    }
    return result;
  }

 private:
  void parse_term(Polynomial& out, Rational coef) {
    Monomial mono(nvars_, 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= parse_number();
      } else if (peek() == 'n') {
        const std::size_t var = parse_variable();
        unsigned exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          exp = parse_unsigned();
        }
        mono[var] += exp;
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    out.add_term(mono, coef);
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  unsigned parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::size_t parse_variable() {
    if (text_.substr(pos_, 2) != "nu") fail("expected variable nuK");
    pos_ += 2;
    const unsigned idx = parse_unsigned();
    if (idx == 0 || idx > nvars_) {
      fail("variable nu" + std::to_string(idx) + " out of range 1.." + std::to_string(nvars_));
    }
    return idx - 1;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("bad polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Larger power of an earlier variable ranks higher, so nu1 > nu2.
  return a < b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> v) {
  Polynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Monomial m(v.size(), 0);
    m[i] = 1;
    p.add_term(m, v[i]);
  }
  return p;
}

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
  return PolyParser(text, nvars).parse();
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionMismatch("monomial arity does not match polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionMismatch("derivative: variable out of range");
  Polynomial d(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    d.add_term(dm, c * Rational(static_cast<long>(m[var])));
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluate: point has wrong length");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = total_degree(m) == 0;
    bool wrote = false;
    if (constant_term || mag != Rational(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << "nu" << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a, b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
  return out;
}

}  // namespace lpl
