#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "so2n/polynomial.hpp"
#include "so2n/scalar.hpp"

namespace so2n {

template <ExactField F>
using Vector = std::vector<F>;

template <ExactField F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {
    require(rows >= 1 && cols >= 1, ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(rows >= 1 && cols >= 1, ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    require(data_.size() == rows * cols, ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    require(rows_ >= 1 && cols_ >= 1, ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    for (const auto& r : rows) {
      require(r.size() == cols_, ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<F>& data() const { return data_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return so2n::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conjugate() const {
    Matrix t(*this);
    for (auto& x : t.data_) x = so2n::conj(x);
    return t;
  }
  Matrix adjoint() const { return transpose().conjugate(); }

  F trace() const {
    require(is_square(), ErrorCode::DimensionMismatch, "trace of a non-square matrix");
    F t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Vector<F> row(std::size_t i) const { return Vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector<F> col(std::size_t j) const {
    Vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch,
            "product of " + a.shape() + " and " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (so2n::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!so2n::is_zero(b(k, j))) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
    require(a.cols_ == v.size(), ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vector<F> out(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!so2n::is_zero(v[k]) && !so2n::is_zero(a(i, k))) out[i] += a(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch,
            "shape " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

template <ExactField F>
Matrix<F> bracket(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <ExactField F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

template <ExactField F>
Vector<F> flatten(const Matrix<F>& m) {
  return m.data();
}

template <ExactField F>
Matrix<F> unflatten(const Vector<F>& v, std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, cols, v);
}

template <ExactField F>
Matrix<F> from_columns(const std::vector<Vector<F>>& cols) {
  require(!cols.empty(), ErrorCode::DimensionMismatch, "no columns");
  Matrix<F> m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

template <ExactField F>
Matrix<F> from_rows(const std::vector<Vector<F>>& rows) {
  require(!rows.empty(), ErrorCode::DimensionMismatch, "no rows");
  Matrix<F> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Places a into an n x n zero matrix with its top-left corner at (offset, offset).
template <ExactField F>
Matrix<F> pad(const Matrix<F>& a, std::size_t n, std::size_t offset = 0) {
  require(offset + a.rows() <= n && offset + a.cols() <= n, ErrorCode::DimensionMismatch, "block exceeds target");
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(offset + i, offset + j) = a(i, j);
  return m;
}

template <ExactField To, ExactField From>
Matrix<To> lift_matrix(const Matrix<From>& m) {
  std::vector<To> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(lift<To>(x));
  return Matrix<To>(m.rows(), m.cols(), std::move(d));
}

template <ExactField To, ExactField From>
Vector<To> lift_vector(const Vector<From>& v) {
  Vector<To> out;
  for (const auto& x : v) out.push_back(lift<To>(x));
  return out;
}

template <ExactField F>
bool is_zero_vector(const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

template <ExactField F>
F dot(const Vector<F>& a, const Vector<F>& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "dot product length mismatch");
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <ExactField F>
Vector<F> unit_vector(std::size_t n, std::size_t i) {
  Vector<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

// --- echelon forms -----------------------------------------------------------

template <ExactField F>
struct Echelon {
  std::size_t cols = 0;
  std::vector<Vector<F>> rows;  // reduced row echelon, pivots normalized to 1
  std::vector<std::size_t> pivots;
};

namespace detail {

template <ExactField F>
void back_reduce(Echelon<F>& e) {
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    std::size_t p = e.pivots[r];
    F inv = F(1) / e.rows[r][p];
    for (auto& x : e.rows[r]) x *= inv;
  }
  for (std::size_t r = e.rows.size(); r-- > 0;) {
    std::size_t p = e.pivots[r];
    for (std::size_t s = 0; s < r; ++s) {
      F f = e.rows[s][p];
      if (is_zero(f)) continue;
      for (std::size_t j = p; j < e.cols; ++j) e.rows[s][j] -= f * e.rows[r][j];
    }
  }
}

template <ExactField F>
Echelon<F> gauss_echelon(std::vector<Vector<F>> a, std::size_t cols) {
  Echelon<F> e;
  e.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      F f = a[i][c];
      if (is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  back_reduce(e);
  return e;
}

// Fraction-free forward elimination on integer rows; exact divisions by the previous pivot.
inline Echelon<Rational> bareiss_echelon(const std::vector<Vector<Rational>>& in, std::size_t cols) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(in.size());
  for (const auto& row : in) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    std::vector<mpz_class> ir(cols);
    for (std::size_t j = 0; j < cols; ++j) ir[j] = row[j].numerator() * (l / row[j].denominator());
    a.push_back(std::move(ir));
  }
  Echelon<Rational> e;
  e.cols = cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    Vector<Rational> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(a[i][j], mpz_class(1));
    e.rows.push_back(std::move(row));
  }
  back_reduce(e);
  return e;
}

}  // namespace detail

template <ExactField F>
Echelon<F> echelon(const std::vector<Vector<F>>& rows, std::size_t cols) {
  for (const auto& r : rows) require(r.size() == cols, ErrorCode::DimensionMismatch, "row length mismatch");
  if constexpr (std::is_same_v<F, Rational>) return detail::bareiss_echelon(rows, cols);
  else return detail::gauss_echelon(rows, cols);
}

template <ExactField F>
Echelon<F> echelon(const Matrix<F>& m) {
  std::vector<Vector<F>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return echelon(rows, m.cols());
}

// Subspace of F^n kept as the rows of a reduced row echelon matrix.
template <ExactField F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector<F>>& vs) {
    Subspace s(ambient);
    if (vs.empty()) return s;
    auto e = echelon(vs, ambient);
    s.rows_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace whole(std::size_t ambient) {
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector<F>(ambient, i));
    return span(ambient, vs);
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_whole() const { return rows_.size() == n_; }
  const std::vector<Vector<F>>& basis() const& { return rows_; }
  std::vector<Vector<F>> basis() && { return std::move(rows_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vector<F> reduce(Vector<F> v) const {
    require(v.size() == n_, ErrorCode::DimensionMismatch, "vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      F f = v[pivots_[r]];
      if (so2n::is_zero(f)) continue;
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!so2n::is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector(reduce(v)); }
  bool contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vector<F>& v) { return contains(v); });
  }

  // Coordinates of v with respect to basis(); nullopt if v is outside.
  std::optional<Vector<F>> coordinates(const Vector<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vector<F> c;
    for (std::size_t r = 0; r < rows_.size(); ++r) c.push_back(v[pivots_[r]]);
    return c;
  }

  // Adds v; returns true if the dimension grew.
  bool add(const Vector<F>& v) {
    Vector<F> w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && so2n::is_zero(w[p])) ++p;
    if (p == n_) return false;
    F inv = F(1) / w[p];
    for (std::size_t j = p; j < n_; ++j) w[j] *= inv;
    for (auto& row : rows_) {
      F f = row[p];
      if (so2n::is_zero(f)) continue;
      for (std::size_t j = p; j < n_; ++j) row[j] -= f * w[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    return true;
  }

  Subspace sum(const Subspace& o) const {
    Subspace s(*this);
    for (const auto& v : o.rows_) s.add(v);
    return s;
  }

  // Orthogonal complement for the plain dot product.
  Subspace annihilator() const;

  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField F>
Subspace<F> kernel_of_rows(const std::vector<Vector<F>>& rows, std::size_t cols) {
  std::vector<Vector<F>> basis;
  if (rows.empty()) return Subspace<F>::whole(cols);
  auto e = echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(cols, basis);
}

template <ExactField F>
Subspace<F> kernel(const Matrix<F>& a) {
  std::vector<Vector<F>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return kernel_of_rows(rows, a.cols());
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
  return echelon(a).rows.size();
}

template <ExactField F>
std::size_t nullity(const Matrix<F>& a) {
  return a.cols() - rank(a);
}

// Some x with a*x = b, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  require(b.size() == a.rows(), ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  std::vector<Vector<F>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto e = echelon(rows, a.cols() + 1);
  Vector<F> x(a.cols(), F(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][a.cols()];
  }
  return x;
}

template <ExactField F>
Subspace<F> Subspace<F>::annihilator() const {
  return kernel_of_rows(rows_, n_);
}

template <ExactField F>
Subspace<F> Subspace<F>::intersect(const Subspace& o) const {
  return annihilator().sum(o.annihilator()).annihilator();
}

// Linear space of equally shaped matrices, normalized through their flattening.
template <ExactField F>
class MatrixSpace {
 public:
  MatrixSpace() = default;
  MatrixSpace(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), flat_(rows * cols) {}

  static MatrixSpace span(std::size_t rows, std::size_t cols, const std::vector<Matrix<F>>& ms) {
    MatrixSpace s(rows, cols);
    std::vector<Vector<F>> vs;
    for (const auto& m : ms) {
      require(m.rows() == rows && m.cols() == cols, ErrorCode::DimensionMismatch, "matrix shape mismatch in span");
      vs.push_back(flatten(m));
    }
    s.flat_ = Subspace<F>::span(rows * cols, vs);
    s.rebuild();
    return s;
  }
  static MatrixSpace from_flat(std::size_t rows, std::size_t cols, Subspace<F> flat) {
    MatrixSpace s(rows, cols);
    s.flat_ = std::move(flat);
    s.rebuild();
    return s;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<F>>& basis() const& { return basis_; }
  std::vector<Matrix<F>> basis() && { return std::move(basis_); }
  const Subspace<F>& flat() const { return flat_; }

  bool contains(const Matrix<F>& m) const { return flat_.contains(flatten(m)); }
  std::optional<Vector<F>> coordinates(const Matrix<F>& m) const { return flat_.coordinates(flatten(m)); }
  bool add(const Matrix<F>& m) {
    if (!flat_.add(flatten(m))) return false;
    rebuild();
    return true;
  }

  friend bool operator==(const MatrixSpace& a, const MatrixSpace& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.flat_ == b.flat_;
  }

 private:
  void rebuild() {
    basis_.clear();
    for (const auto& v : flat_.basis()) basis_.push_back(unflatten(v, r_, c_));
  }

  std::size_t r_ = 0, c_ = 0;
  Subspace<F> flat_;
  std::vector<Matrix<F>> basis_;
};

// Faddeev-LeVerrier recurrence; returns det(lambda*I - A).
template <ExactField F>
Polynomial<F> charpoly(const Matrix<F>& a) {
  require(a.is_square(), ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> m(n, n);
  const Matrix<F> id = Matrix<F>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() / F(static_cast<long>(k));
  }
  return Polynomial<F>(std::move(c));
}

template <ExactField F>
Matrix<F> evaluate(const Polynomial<F>& p, const Matrix<F>& a) {
  require(a.is_square(), ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
  Matrix<F> acc(a.rows(), a.cols());
  const Matrix<F> id = Matrix<F>::identity(a.rows());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + id * *it;
  return acc;
}

}  // namespace so2n
