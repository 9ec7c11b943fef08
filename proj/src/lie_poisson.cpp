#include "lpl/lie_poisson.hpp"

#include "lpl/errors.hpp"

namespace lpl {

Matrix bivector_at(const LieAlgebra& g, std::span<const Rational> x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw DimensionMismatch("bivector_at: point has wrong length");
  Matrix pi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pi(i, j) = dot(x, g.basis_bracket(i, j));
      pi(j, i) = -pi(i, j);
    }
  return pi;
}

Vector sharp_at(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> xi) {
  if (xi.size() != g.dim()) throw DimensionMismatch("sharp_at: covector has wrong length");
  return bivector_at(g, x).apply_left(xi);
}

Polynomial poisson_bracket_poly(const LieAlgebra& g, const Polynomial& f, const Polynomial& h) {
  const std::size_t n = g.dim();
  if (f.nvars() != n || h.nvars() != n) {
    throw DimensionMismatch("poisson_bracket_poly: polynomials must have " + std::to_string(n) +
                            " variables");
  }
  std::vector<Polynomial> df, dh;
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dh.push_back(h.derivative(i));
  }
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero() && dh[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& b = g.basis_bracket(i, j);
      if (is_zero(b)) continue;
      const Polynomial cross = df[i] * dh[j] - df[j] * dh[i];
      if (cross.is_zero()) continue;
      out += Polynomial::linear(b) * cross;
    }
  }
  return out;
}

bool casimir_check(const LieAlgebra& g, const Polynomial& f) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!poisson_bracket_poly(g, f, Polynomial::variable(g.dim(), i)).is_zero()) return false;
  }
  return true;
}

}  // namespace lpl
