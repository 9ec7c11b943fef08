// Shared fixtures, hand-rolled generators and brute-force oracles for the
// test suites. The oracles deliberately avoid the library's linear algebra so
// that agreement between the two is meaningful.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpl/lie.hpp"
#include "lpl/linalg.hpp"
#include "lpl/model_io.hpp"
#include "lpl/polynomial.hpp"
#include "lpl/submanifold.hpp"

namespace testkit {

using lpl::LieAlgebra;
using lpl::Rational;
using lpl::Subspace;
using lpl::Vector;

inline std::filesystem::path data_dir() { return LPL_DATA_DIR; }

inline LieAlgebra model(const std::string& name) {
  return lpl::load_model(data_dir() / "models" / (name + ".json"));
}

inline LieAlgebra sl2() { return model("sl2"); }
inline LieAlgebra gl2() { return model("gl2"); }
inline LieAlgebra heisenberg() { return model("heisenberg"); }
inline LieAlgebra abelian3() { return model("abelian_n"); }

/// Vector from small integers, for readable literals.
inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Subspace span(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<Vector> g;
  for (const auto& x : gens) g.push_back(vec(x));
  return Subspace::span(n, g);
}

/// Fixture algebras of dimension at most 6.
inline std::vector<LieAlgebra> algebra_catalog() {
  return {sl2(),
          gl2(),
          heisenberg(),
          abelian3(),
          lpl::direct_sum(sl2(), heisenberg()),
          lpl::direct_sum(heisenberg(), heisenberg(), -1)};
}

/// Fixture algebras of dimension at most 4.
inline std::vector<LieAlgebra> small_catalog() {
  return {sl2(), gl2(), heisenberg(), abelian3(), LieAlgebra::abelian(1, "abelian_1"),
          LieAlgebra::abelian(2, "abelian_2")};
}

struct NamedSubalgebra {
  std::string label;
  LieAlgebra g;
  Subspace h;
};

/// Hand-picked subalgebras of sl2, gl2 and the Heisenberg algebra.
inline std::vector<NamedSubalgebra> subalgebra_catalog() {
  const auto s = sl2();
  const auto gl = gl2();
  const auto he = heisenberg();
  return {
      {"sl2:e1", s, span(3, {{1, 0, 0}})},
      {"sl2:e3", s, span(3, {{0, 0, 1}})},
      {"sl2:e2+e3", s, span(3, {{0, 1, 1}})},
      {"sl2:e1,e2-e3", s, span(3, {{1, 0, 0}, {0, 1, -1}})},
      {"sl2:e1,e2+e3", s, span(3, {{1, 0, 0}, {0, 1, 1}})},
      {"sl2:all", s, Subspace::full(3)},
      {"gl2:a", gl, span(4, {{1, 0, 0, 0}})},
      {"gl2:a,d", gl, span(4, {{1, 0, 0, 0}, {0, 0, 0, 1}})},
      {"gl2:a,b", gl, span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}})},
      {"gl2:a,b,d", gl, span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})},
      {"gl2:a,c,d", gl, span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})},
      {"gl2:sl2", gl, span(4, {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}})},
      {"gl2:a+d,b", gl, span(4, {{1, 0, 0, 1}, {0, 1, 0, 0}})},
      {"heis:z", he, span(3, {{0, 0, 1}})},
      {"heis:x", he, span(3, {{1, 0, 0}})},
      {"heis:x,z", he, span(3, {{1, 0, 0}, {0, 0, 1}})},
      {"heis:x+y,z", he, span(3, {{1, 1, 0}, {0, 0, 1}})},
      {"heis:all", he, Subspace::full(3)},
  };
}

/// Deterministic generator of small exact test data.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Small rational, zero with probability about 1/4 so that degenerate
  /// configurations are common.
  Rational rational(long bound = 5) {
    if (coin(0.25)) return Rational(0);
    return Rational(integer(-bound, bound), integer(1, 3));
  }

  Vector vector(std::size_t n, long bound = 5) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound));
    return v;
  }

  /// Span of up to k random vectors; sometimes built from combinations of
  /// earlier vectors so that dependent generating sets occur.
  Subspace subspace(std::size_t n, std::size_t k) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      if (!gens.empty() && coin(0.2)) {
        const long last = static_cast<long>(gens.size()) - 1;
        const Vector a = gens[integer(0, last)];
        const Vector b = gens[integer(0, last)];
        gens.push_back(lpl::axpy(lpl::scale(rational(), a), rational(), b));
      } else {
        gens.push_back(vector(n));
      }
    }
    return Subspace::span(n, gens);
  }

  /// Random point of the subspace s.
  Vector element(const Subspace& s) {
    Vector v = lpl::zero_vector(s.ambient_dim());
    for (const auto& b : s.basis()) v = lpl::axpy(v, rational(), b);
    return v;
  }

  /// Random generating set of s with redundancy and rescaling.
  std::vector<Vector> generators(const Subspace& s) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < s.dim() + 2; ++i) gens.push_back(element(s));
    for (const auto& b : s.basis()) {
      Vector v = lpl::scale(Rational(integer(1, 4), integer(1, 4)), b);
      for (const auto& c : s.basis()) v = lpl::axpy(v, rational(2), c);
      gens.push_back(std::move(v));
      gens.push_back(lpl::axpy(gens.back(), Rational(-1), b));
    }
    std::shuffle(gens.begin(), gens.end(), rng_);
    return gens;
  }

  lpl::Polynomial polynomial(std::size_t nvars, unsigned max_degree, std::size_t max_terms = 4) {
    lpl::Polynomial p(nvars);
    const auto terms = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      lpl::Monomial m(nvars, 0);
      const auto deg = static_cast<unsigned>(integer(0, max_degree));
      for (unsigned d = 0; d < deg; ++d) ++m[integer(0, static_cast<long>(nvars) - 1)];
      p.add_term(m, rational());
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Rank by plain Gaussian elimination on a copy; independent of lpl::row_reduce.
inline std::size_t oracle_rank(std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<Vector> concat(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// <x, [u, w]> straight from the structure-constant table.
inline Rational oracle_pairing(const LieAlgebra& g, const Vector& x, const Vector& u,
                               const Vector& w) {
  Rational s(0);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (w[j].is_zero()) continue;
      const Vector& b = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k) s = s + u[i] * w[j] * b[k] * x[k];
    }
  }
  return s;
}

/// Brute-force coisotropy test at one point: every covector v in h is sent by
/// the bivector into h°, i.e. Pi_x(v, w) = 0 for all v, w in h.
inline bool oracle_sharp_in_tangent(const LieAlgebra& g, const Subspace& h, const Vector& x) {
  for (const auto& v : h.basis())
    for (const auto& w : h.basis())
      if (!oracle_pairing(g, x, v, w).is_zero()) return false;
  return true;
}

/// Brute-force morphism test for a map given by its matrix (codomain x domain).
inline bool oracle_morphism(const lpl::LinearMap& phi) {
  const auto& a = phi.domain;
  const auto& b = phi.codomain;
  auto image = [&](const Vector& v) { return phi.matrix.apply(v); };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vector lhs = image(a.basis_bracket(i, j));
      const Vector rhs =
          b.bracket(image(lpl::unit_vector(a.dim(), i)), image(lpl::unit_vector(a.dim(), j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace testkit
