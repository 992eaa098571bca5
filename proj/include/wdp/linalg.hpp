#pragma once

#include <cstddef>
#include <vector>

#include "wdp/errors.hpp"
#include "wdp/rational.hpp"

namespace wdp {

using RatVector = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (long v : r) a_.emplace_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("mat_vec: size mismatch");
  RatVector out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

// D1^T * G * D2.
inline Rat bilinear(const RatVector& d1, const RatMatrix& g, const RatVector& d2) {
  return dot(d1, mat_vec(g, d2));
}

namespace detail {

// Clears denominators of [M | b] row by row into an integer augmented matrix.
inline std::vector<std::vector<Int>> integer_augmented(const RatMatrix& m, const RatVector& b) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Int>> aug(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Int(m.at(i, j).get_den()));
    l = lcm(l, Int(b[i].get_den()));
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(l);
      aug[i][j] = scaled.get_num();
    }
    Rat scaled = b[i] * Rat(l);
    aug[i][n] = scaled.get_num();
  }
  return aug;
}

}  // namespace detail

// Exact solve of M x = b by fraction-free (Bareiss) elimination over the
// integers after clearing denominators. Throws SingularMatrix when det = 0.
inline RatVector solve_linear(const RatMatrix& m, const RatVector& b) {
  if (m.rows() != m.cols()) throw DimensionMismatch("solve_linear: matrix not square");
  if (m.rows() != b.size()) throw DimensionMismatch("solve_linear: rhs size mismatch");
  const std::size_t n = m.rows();
  if (n == 0) return {};

  auto a = detail::integer_augmented(m, b);
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) throw SingularMatrix();
      std::swap(a[k], a[piv]);
      // A row swap flips the determinant's sign, which Bareiss pivots absorb.
      for (auto& x : a[k]) x = -x;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  if (a[n - 1][n - 1] == 0) throw SingularMatrix();

  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat s(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rat(a[ii][j]) * x[j];
    x[ii] = s / Rat(a[ii][ii]);
  }
  return x;
}

// True iff the symmetric matrix is negative definite: leading principal
// minors alternate in sign starting negative, i.e. (-1)^k det_k > 0.
// The Bareiss pivots are exactly those minors, so a zero pivot settles it.
inline bool is_negative_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) throw DimensionMismatch("is_negative_definite: matrix not symmetric");
  const std::size_t n = m.rows();
  if (n == 0) return true;

  // Scaling by the positive common denominator is a congruence by a positive
  // multiple of the identity; it preserves the sign pattern of the minors.
  Int l = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Int(m.at(i, j).get_den()));
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(l);
      a[i][j] = scaled.get_num();
    }

  Int prev = 1;
  bool expect_negative = true;  // minor_1 < 0, minor_2 > 0, ...
  for (std::size_t k = 0; k < n; ++k) {
    const Int& pivot = a[k][k];
    if (pivot == 0) return false;
    if (expect_negative ? pivot > 0 : pivot < 0) return false;
    expect_negative = !expect_negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  return true;
}

}  // namespace wdp
