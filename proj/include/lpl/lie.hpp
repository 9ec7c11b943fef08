#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpl/linalg.hpp"

namespace lpl {

/// One structure-constant entry: [e_i, e_j] has coefficient `value` on e_k.
/// Only i < j is meaningful; the table is antisymmetric by construction.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis e_0..e_{n-1}. Vectors of g and covectors of g* are both
/// coordinate vectors; they pair by the dot product.
///
/// Construction does not check the Jacobi identity; call validate_jacobi.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws DimensionMismatch for out-of-range indices and
  /// std::invalid_argument for entries with i >= j.
  LieAlgebra(std::string name, std::vector<std::string> labels,
             const std::vector<StructureConstant>& constants);

  static LieAlgebra abelian(std::size_t n, std::string name = {});

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] as a coordinate vector.
  [[nodiscard]] const Vector& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  /// Nonzero constants with i < j, ordered by (i, j, k).
  [[nodiscard]] std::vector<StructureConstant> structure_constants() const;

  [[nodiscard]] Vector bracket(std::span<const Rational> v, std::span<const Rational> w) const;
  [[nodiscard]] bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;  // n*n entries, row-major in (i, j)
};

struct JacobiReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> triple;  ///< first failing i<j<k
  Vector residual;
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for i<j<k.
JacobiReport validate_jacobi(const LieAlgebra& g);

/// ad_v as an n x n matrix (column j is [v, e_j]).
Matrix ad_matrix(const LieAlgebra& g, std::span<const Rational> v);
/// Coadjoint action on g*: the transpose of ad_v, so that
/// <coad_v x, w> = <x, [v, w]>.
Matrix coad_matrix(const LieAlgebra& g, std::span<const Rational> v);

struct AdjointMaps {
  Matrix ad;
  Matrix coad;
};
AdjointMaps adjoint_maps(const LieAlgebra& g, std::span<const Rational> v);

/// coad_v(x) computed directly: component j is <x, [v, e_j]>.
Vector coad(const LieAlgebra& g, std::span<const Rational> v, std::span<const Rational> x);

/// The skew form B_x(v, w) = <x, [v, w]> on the given vectors.
Matrix restricted_form(const LieAlgebra& g, const std::vector<Vector>& vectors,
                       std::span<const Rational> x);

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);

/// Block algebra g1 (+) g2; the second block's constants are multiplied by
/// `sign` (+1 or -1). sign -1 realises the Lie-Poisson structure Pi1 - Pi2 on
/// the product of duals.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2, int sign = 1);

/// Linear map between Lie algebras; matrix is codomain.dim() x domain.dim().
struct LinearMap {
  LieAlgebra domain;
  LieAlgebra codomain;
  Matrix matrix;
};

/// True iff phi([e_i, e_j]) = [phi e_i, phi e_j] for all basis pairs.
bool morphism_check(const LinearMap& phi);

}  // namespace lpl
