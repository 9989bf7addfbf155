#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdr/rational.hpp"

namespace qdr {

// Dense row-major matrix. Elimination routines (rank, inverse, solve, det)
// require T to be a field (Rational or Gaussian); storage and products work
// for any commutative ring such as Laurent or Fn.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!coeff_is_zero(v)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.a_) v = -v;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.a_) v = s * v;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (coeff_is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

using RMatrix = Matrix<Rational>;
using CMatrix = Matrix<Gaussian>;

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> row_reduce(Matrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!coeff_is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || coeff_is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!coeff_is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank by Gaussian elimination on rows.
template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(detail::row_reduce(m).size());
}

/// Rank by elimination on columns: an independent code path used to cross-check
/// rank computations.
template <class T>
int rank_by_columns(Matrix<T> m) {
  int rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(m.cols()), false);
  for (int i = 0; i < m.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < m.cols(); ++j)
      if (!used[j] && !coeff_is_zero(m(i, j))) {
        p = j;
        break;
      }
    if (p < 0) continue;
    used[p] = true;
    ++rank;
    for (int j = 0; j < m.cols(); ++j) {
      if (j == p || coeff_is_zero(m(i, j))) continue;
      T f = m(i, j) / m(i, p);
      for (int k = i; k < m.rows(); ++k) m(k, j) -= f * m(k, p);
    }
  }
  return rank;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  T det(1);
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!coeff_is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return T(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (coeff_is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = detail::row_reduce(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) throw std::domain_error("singular matrix");
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Some solution x of a*x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = detail::row_reduce(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<T> x(static_cast<std::size_t>(a.cols()), T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q in a variable lambda; coefficients in
// ascending order, no trailing zeros.

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly lambda() { return UPoly({Rational(0), Rational(1)}); }
  /// lambda + c
  static UPoly linear(const Rational& c) { return UPoly({c, Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  /// p(lambda + s)
  UPoly shift(const Rational& s) const;
  UPoly pow(int e) const;
  /// Exact division; throws if the remainder is nonzero.
  UPoly divide_exact(const UPoly& d) const;
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

std::string to_string(const UPoly& p, const std::string& var = "x");

/// Monic characteristic polynomial det(lambda*I - M), via Hessenberg reduction.
UPoly char_poly(const RMatrix& m);

/// Factorization over Q into (lambda - r)^k factors for rational roots r plus a
/// monic remainder with no rational roots.
struct SpectrumFactors {
  std::vector<std::pair<Rational, int>> rational_roots;  // root, multiplicity
  UPoly remainder;
};
SpectrumFactors factor_rational_roots(const UPoly& p);
std::string describe(const SpectrumFactors& f);

std::vector<std::vector<std::string>> to_strings(const RMatrix& m);
std::string to_string(const RMatrix& m);

}  // namespace qdr
