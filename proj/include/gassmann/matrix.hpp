#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gassmann {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense row-major matrix over an exact (or float) scalar.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, T init = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <typename U>
  Mat<U> cast() const {
    Mat<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = static_cast<U>((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

inline Mat<BigRat> to_rational(const Mat<BigInt>& m) {
  Mat<BigRat> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigRat(m(i, j));
  return r;
}

inline Mat<double> to_double(const Mat<BigInt>& m) {
  Mat<double> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
  return r;
}

// Fraction-free Bareiss elimination; exact determinant of an integer matrix.
// Intermediate entries stay integral (every division below is exact).
inline BigInt det_bareiss(Mat<BigInt> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: square matrix required");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Exact determinant over the rationals (plain Gaussian elimination).
inline BigRat det_rational(Mat<BigRat> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_rational: square matrix required");
  const std::size_t n = m.rows();
  BigRat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      BigRat f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

inline std::size_t rank_rational(Mat<BigRat> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = col; j < cols; ++j) std::swap(m(rank, j), m(pivot, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      BigRat f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Column-reduced basis of the column space of a rational matrix.
// Pivot rows are chosen lowest-index-first, so the basis is a canonical
// invariant of the subspace: column k has a 1 in row pivots[k] and zeros in
// every other pivot row.
struct ColumnBasis {
  Mat<BigRat> vectors;              // dim x rank
  std::vector<std::size_t> pivots;  // strictly increasing row indices
  std::size_t rank() const { return pivots.size(); }
};

inline ColumnBasis column_space(const Mat<BigRat>& m) {
  // Row-reduce the transpose; its nonzero rows span the column space.
  Mat<BigRat> t = m.transpose();
  const std::size_t rows = t.rows(), cols = t.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && t(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(t(rank, j), t(pivot, j));
    BigRat p = t(rank, col);
    for (std::size_t j = 0; j < cols; ++j) t(rank, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || t(i, col) == 0) continue;
      BigRat f = t(i, col);
      for (std::size_t j = 0; j < cols; ++j) t(i, j) -= f * t(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  ColumnBasis b;
  b.vectors = Mat<BigRat>(m.rows(), rank);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b.vectors(i, k) = t(k, i);
  b.pivots = std::move(pivots);
  return b;
}

// Coordinates of v in a column-reduced basis (read off the pivot rows, then
// verify the expansion exactly). Throws if v is outside the span.
inline std::vector<BigRat> coordinates(const ColumnBasis& b, const std::vector<BigRat>& v) {
  if (v.size() != b.vectors.rows())
    throw std::invalid_argument("coordinates: dimension mismatch");
  std::vector<BigRat> x(b.rank());
  for (std::size_t k = 0; k < b.rank(); ++k) x[k] = v[b.pivots[k]];
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRat s = 0;
    for (std::size_t k = 0; k < b.rank(); ++k) s += b.vectors(i, k) * x[k];
    if (s != v[i]) throw std::invalid_argument("coordinates: vector not in span");
  }
  return x;
}

// Exact interpolation of an integer-coefficient polynomial from its values at
// distinct integer nodes (Newton divided differences over the rationals).
// Returns ascending coefficients; throws if a coefficient is not integral.
inline std::vector<BigInt> interpolate_integer_poly(const std::vector<long long>& xs,
                                                    const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n)
    throw std::invalid_argument("interpolate_integer_poly: bad node/value counts");
  std::vector<BigRat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = BigRat(ys[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRat(xs[i] - xs[i - level]);
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<BigRat> coeffs{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    coeffs.push_back(BigRat(0));
    for (std::size_t j = coeffs.size() - 1; j > 0; --j)
      coeffs[j] = coeffs[j - 1] - BigRat(xs[k]) * coeffs[j];
    coeffs[0] = dd[k] - BigRat(xs[k]) * coeffs[0];
  }
  std::vector<BigInt> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (boost::multiprecision::denominator(coeffs[i]) != 1)
      throw std::logic_error("interpolate_integer_poly: non-integer coefficient");
    out[i] = boost::multiprecision::numerator(coeffs[i]);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

template <typename T>
T eval_poly(const std::vector<BigInt>& coeffs, const T& x) {
  T acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + T(coeffs[i]);
  return acc;
}

// --- small float kernels (display and the unitary refinement only) ---

inline Mat<double> inverse_double(Mat<double> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse_double: square matrix required");
  Mat<double> inv = Mat<double>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(pivot, k))) pivot = i;
    if (m(pivot, k) == 0.0) throw std::invalid_argument("inverse_double: singular matrix");
    if (pivot != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    double p = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0.0) continue;
      double f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline double max_abs(const Mat<double>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::fabs(m(i, j)));
  return r;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> symmetric_eigenvalues(Mat<double> a) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace gassmann
