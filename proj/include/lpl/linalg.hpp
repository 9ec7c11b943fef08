#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpl/rational.hpp"

namespace lpl {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);
/// a + s * b
Vector axpy(std::span<const Rational> a, const Rational& s, std::span<const Rational> b);
std::string to_string(std::span<const Rational> v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector apply(std::span<const Rational> v) const;
  /// v^T M
  [[nodiscard]] Vector apply_left(std::span<const Rational> v) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_skew() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);

/// Linear subspace of Q^n stored by its reduced row-echelon basis.
///
/// The basis is the unique RREF of any spanning set, so equality of Subspace
/// values is equality of subspaces.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_full() const { return basis_.size() == ambient_; }

  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis; nullopt if v is not in the span.
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RankKernelImage {
  std::size_t rank = 0;
  Subspace kernel;  ///< inside Q^cols
  Subspace image;   ///< column space, inside Q^rows
};

RankKernelImage rank_kernel_image(const Matrix& m);

struct LatticeResult {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  ///< V is a subspace of U
};

/// Sum, intersection and containment of U and V; throws DimensionMismatch.
LatticeResult subspace_lattice(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Annihilator under the coordinate dot-product pairing.
Subspace annihilator(const Subspace& u);

/// Complement of U inside W, built by walking W's canonical basis in order and
/// keeping each vector not already in the span so far. For W = Q^n that is the
/// standard basis in coordinate order. Throws std::invalid_argument if U is not
/// inside W.
Subspace choose_complement(const Subspace& u, const Subspace& w);

/// Some solution of M x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

}  // namespace lpl
