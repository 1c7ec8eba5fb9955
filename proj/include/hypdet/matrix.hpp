#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hypdet/error.hpp"
#include "hypdet/rational.hpp"

namespace hypdet {

// Ring operations the generic matrix algorithms rely on. Specialized next to
// each coefficient type.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double exact_div(double a, double b) { return a / b; }
};

// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), RingTraits<R>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  // Rows/columns listed in idx, in that order.
  Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Matrix<S> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (RingTraits<R>::is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> data_;
};

// Fraction-free Gaussian elimination (Bareiss); R must be an integral domain
// with exact division.
template <class R>
R det_bareiss(Matrix<R> m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return RingTraits<R>::one();
  bool negate = false;
  R prev = RingTraits<R>::one();
  for (int k = 0; k < n - 1; ++k) {
    if (RingTraits<R>::is_zero(m(k, k))) {
      int p = k + 1;
      while (p < n && RingTraits<R>::is_zero(m(p, k))) ++p;
      if (p == n) return RingTraits<R>::zero();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = RingTraits<R>::exact_div(v, prev);
      }
      m(i, k) = RingTraits<R>::zero();
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  if (negate) d = RingTraits<R>::zero() - d;
  return d;
}

// Characteristic polynomial det(T*I - A) via Berkowitz (division free);
// coefficients lowest degree first, monic of length n + 1.
template <class R>
std::vector<R> charpoly_berkowitz(const Matrix<R>& a) {
  if (!a.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  const R zero = RingTraits<R>::zero();
  if (n == 0) return {RingTraits<R>::one()};
  std::vector<R> p = {RingTraits<R>::one(), zero - a(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<R> q(static_cast<std::size_t>(r + 2), zero);
    q[0] = RingTraits<R>::one();
    q[1] = zero - a(r, r);
    std::vector<R> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = a(i, r);
    for (int k = 2; k < r + 2; ++k) {
      R s = zero;
      for (int i = 0; i < r; ++i) s += a(r, i) * v[static_cast<std::size_t>(i)];
      q[static_cast<std::size_t>(k)] = zero - s;
      if (k + 1 < r + 2) {
        std::vector<R> nv(static_cast<std::size_t>(r), zero);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) nv[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
        v = std::move(nv);
      }
    }
    std::vector<R> np(static_cast<std::size_t>(r + 2), zero);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= r && j <= i; ++j) np[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(i - j)] * p[static_cast<std::size_t>(j)];
    p = std::move(np);
  }
  return std::vector<R>(p.rbegin(), p.rend());
}

// Determinant by Laplace expansion memoized over column subsets; needs only
// ring operations. O(2^n n) ring products.
template <class R>
R det_laplace(const Matrix<R>& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return RingTraits<R>::one();
  if (n > 20) throw DomainError("det_laplace: dimension too large");
  // minors[mask] = det of rows [n - popcount(mask), n) x columns in mask.
  std::vector<R> minors(std::size_t{1} << n, RingTraits<R>::zero());
  minors[0] = RingTraits<R>::one();
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    const int row = n - size;
    R acc = RingTraits<R>::zero();
    int position = 0;
    for (int c = 0; c < n; ++c) {
      if ((mask & (1U << c)) == 0U) continue;
      const R& entry = m(row, c);
      if (!RingTraits<R>::is_zero(entry)) {
        R term = entry * minors[mask & ~(1U << c)];
        if (position % 2 == 0) acc += term;
        else acc -= term;
      }
      ++position;
    }
    minors[mask] = acc;
  }
  return minors[(1U << n) - 1];
}

// Gauss-Jordan over a field F. Returns nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(Matrix<F> m) {
  if (!m.square()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<F> inv = Matrix<F>::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && RingTraits<F>::is_zero(m(p, col))) ++p;
    if (p == n) return std::nullopt;
    if (p != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    F piv = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j) / piv;
      inv(col, j) = inv(col, j) / piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || RingTraits<F>::is_zero(m(i, col))) continue;
      F factor = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

// Basis of the right null space {v : m v = 0} over a field F.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && RingTraits<F>::is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    F piv = m(r, c);
    for (int j = 0; j < cols; ++j) m(r, j) = m(r, j) / piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || RingTraits<F>::is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<F> v(static_cast<std::size_t>(cols), RingTraits<F>::zero());
    v[static_cast<std::size_t>(free)] = RingTraits<F>::one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = RingTraits<F>::zero() - m(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hypdet
