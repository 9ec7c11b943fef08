#include "lpl/lie.hpp"

#include <stdexcept>

#include "lpl/errors.hpp"

namespace lpl {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       const std::vector<StructureConstant>& constants)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  table_.assign(n * n, Vector(n));
  for (const auto& c : constants) {
    if (c.i >= n || c.j >= n || c.k >= n) {
      throw DimensionMismatch("structure constant index out of range for dimension " +
                              std::to_string(n));
    }
    if (c.i >= c.j) throw std::invalid_argument("structure constants must have i < j");
    table_[c.i * n + c.j][c.k] += c.value;
    table_[c.j * n + c.i][c.k] -= c.value;
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(name), std::move(labels), {});
}

std::vector<StructureConstant> LieAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = table_[i * n + j][k];
        if (!c.is_zero()) out.push_back({i, j, k, c});
      }
  return out;
}

Vector LieAlgebra::bracket(std::span<const Rational> v, std::span<const Rational> w) const {
  const std::size_t n = dim();
  if (v.size() != n || w.size() != n) {
    throw DimensionMismatch("bracket: vectors must have length " + std::to_string(n));
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || w[j].is_zero()) continue;
      const Rational s = v[i] * w[j];
      const auto& b = table_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!b[k].is_zero()) out[k] += s * b[k];
      }
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& b : table_) {
    if (!lpl::is_zero(b)) return false;
  }
  return true;
}

JacobiReport validate_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  JacobiReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector r = g.bracket(g.basis_bracket(i, j), ek);
        r = add(r, g.bracket(g.basis_bracket(j, k), ei));
        r = add(r, g.bracket(g.basis_bracket(k, i), ej));
        if (!is_zero(r)) {
          report.ok = false;
          report.triple = std::array<std::size_t, 3>{i, j, k};
          report.residual = std::move(r);
          return report;
        }
      }
  return report;
}

Matrix ad_matrix(const LieAlgebra& g, std::span<const Rational> v) {
  const std::size_t n = g.dim();
  if (v.size() != n) throw DimensionMismatch("ad_matrix: vector length mismatch");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = g.bracket(v, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix coad_matrix(const LieAlgebra& g, std::span<const Rational> v) {
  return ad_matrix(g, v).transpose();
}

AdjointMaps adjoint_maps(const LieAlgebra& g, std::span<const Rational> v) {
  AdjointMaps maps{ad_matrix(g, v), {}};
  maps.coad = maps.ad.transpose();
  return maps;
}

Vector coad(const LieAlgebra& g, std::span<const Rational> v, std::span<const Rational> x) {
  const std::size_t n = g.dim();
  if (v.size() != n || x.size() != n) throw DimensionMismatch("coad: vector length mismatch");
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = dot(x, g.bracket(v, unit_vector(n, j)));
  return out;
}

Matrix restricted_form(const LieAlgebra& g, const std::vector<Vector>& vectors,
                       std::span<const Rational> x) {
  const std::size_t m = vectors.size();
  Matrix b(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      b(a, c) = dot(x, g.bracket(vectors[a], vectors[c]));
      b(c, a) = -b(a, c);
    }
  return b;
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != g.dim() || v.ambient_dim() != g.dim()) {
    throw DimensionMismatch("subspace_bracket: subspaces must live in g");
  }
  std::vector<Vector> gens;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) gens.push_back(g.bracket(a, b));
  return Subspace::span(g.dim(), gens);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) {
  return u.contains(subspace_bracket(g, u, u));
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("direct_sum: sign must be +1 or -1");
  const std::size_t n1 = g1.dim();
  std::vector<std::string> labels = g1.labels();
  labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
  std::vector<StructureConstant> cs = g1.structure_constants();
  for (auto c : g2.structure_constants()) {
    c.i += n1;
    c.j += n1;
    c.k += n1;
    if (sign < 0) c.value = -c.value;
    cs.push_back(c);
  }
  std::string name = g1.name() + (sign < 0 ? " (+) -" : " (+) ") + g2.name();
  return LieAlgebra(std::move(name), std::move(labels), cs);
}

bool morphism_check(const LinearMap& phi) {
  const std::size_t n = phi.domain.dim();
  if (phi.matrix.rows() != phi.codomain.dim() || phi.matrix.cols() != n) {
    throw DimensionMismatch("morphism_check: matrix shape does not match domain/codomain");
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(phi.matrix.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (phi.matrix.apply(phi.domain.basis_bracket(i, j)) !=
          phi.codomain.bracket(images[i], images[j])) {
        return false;
      }
    }
  return true;
}

}  // namespace lpl
