#include "lpl/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "lpl/errors.hpp"

namespace lpl {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

static void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": lengths " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "add");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "sub");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
  Vector r(v.begin(), v.end());
  for (auto& x : r) x *= s;
  return r;
}

Vector axpy(std::span<const Rational> a, const Rational& s, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "axpy");
  Vector r(a.begin(), a.end());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) r[i] += s * b[i];
  }
  return r;
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_length(rows[r].size(), cols, "Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_length(cols[c].size(), rows, "Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  require_same_length(v.size(), cols_, "Matrix::apply");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

Vector Matrix::apply_left(std::span<const Rational> v) const {
  require_same_length(v.size(), rows_, "Matrix::apply_left");
  Vector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[c] += v[r] * (*this)(r, c);
    }
  }
  return out;
}

bool Matrix::is_zero() const { return lpl::is_zero(data_); }

bool Matrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_length(a.cols_, b.rows_, "Matrix product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(lead, c));
    }
    const Rational inv = Rational(1) / m(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead, c).is_zero()) m(r, c) -= f * m(lead, c);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

// ---------------------------------------------------------------------------

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  return row_space(Matrix::from_rows(ambient, generators));
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = m;
  Subspace s;
  s.ambient_ = m.cols();
  s.pivots_ = row_reduce(r);
  s.basis_.reserve(s.pivots_.size());
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) {
    const auto row = r.row(i);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  require_same_length(v.size(), ambient_, "Subspace::coordinates");
  // RREF: the coefficient of basis row i is the entry of v at pivot i.
  Vector coords(basis_.size());
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = residual[pivots_[i]];
    residual = axpy(residual, -coords[i], basis_[i]);
  }
  if (!lpl::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_length(other.ambient_, ambient_, "Subspace::contains");
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

RankKernelImage rank_kernel_image(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector k(m.cols());
    k[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -r(i, free);
    kernel.push_back(std::move(k));
  }
  RankKernelImage out;
  out.rank = pivots.size();
  out.kernel = Subspace::span(m.cols(), kernel);
  out.image = Subspace::row_space(m.transpose());
  return out;
}

LatticeResult subspace_lattice(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionMismatch("subspace_lattice: ambient dimensions " +
                            std::to_string(u.ambient_dim()) + " and " +
                            std::to_string(v.ambient_dim()));
  }
  LatticeResult r;
  r.sum = sum(u, v);
  r.intersection = intersect(u, v);
  r.contains = u.contains(v);
  return r;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  std::vector<Vector> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionMismatch("intersect: ambient dimensions differ");
  }
  return annihilator(sum(annihilator(u), annihilator(v)));
}

Subspace annihilator(const Subspace& u) {
  // Kernel of the matrix whose rows are the basis of U.
  return rank_kernel_image(Matrix::from_rows(u.ambient_dim(), u.basis())).kernel;
}

Subspace choose_complement(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) {
    throw DimensionMismatch("choose_complement: ambient dimensions differ");
  }
  if (!w.contains(u)) throw std::invalid_argument("choose_complement: U is not contained in W");
  std::vector<Vector> chosen;
  Subspace current = u;
  for (const auto& b : w.basis()) {
    if (current.dim() == w.dim()) break;
    if (current.contains(b)) continue;
    chosen.push_back(b);
    current = sum(current, Subspace::span(u.ambient_dim(), {b}));
  }
  return Subspace::span(u.ambient_dim(), chosen);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  require_same_length(b.size(), m.rows(), "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace lpl
