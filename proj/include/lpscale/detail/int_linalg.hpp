#ifndef LPSCALE_DETAIL_INT_LINALG_HPP
#define LPSCALE_DETAIL_INT_LINALG_HPP

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "lpscale/errors.hpp"

namespace lpscale {

/// Dense integer matrix, row-major. Used for dilation matrices and the
/// 0/1 matrix of the D*A*U splitting, where ranks must be exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix scalar(std::int64_t lambda) { return IntMatrix{{lambda}}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> apply(std::span<const int> v) const {
    if (v.size() != cols_) throw DimensionError("IntMatrix::apply: size mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

// Fraction-free (Bareiss) elimination. Returns the rank; when the matrix
// is square and of full rank, *det receives the determinant.
inline std::size_t bareiss(IntMatrix m, std::int64_t* det = nullptr) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const __int128 num = static_cast<__int128>(m(rank, c)) * m(r, j) -
                             static_cast<__int128>(m(r, c)) * m(rank, j);
        m(r, j) = static_cast<std::int64_t>(num / prev);
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  if (det) *det = (rows == cols && rank == rows) ? sign * prev : 0;
  return rank;
}

}  // namespace detail

inline std::size_t rank(const IntMatrix& m) { return detail::bareiss(m); }

inline std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  std::int64_t det = 0;
  detail::bareiss(m, &det);
  return det;
}

/// adj(M) with M * adj(M) = det(M) I.
inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionError("adjugate: matrix not square");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const std::int64_t cof = ((i + j) % 2 ? -1 : 1) * determinant(minor);
      adj(j, i) = cof;
    }
  }
  return adj;
}

}  // namespace lpscale

#endif  // LPSCALE_DETAIL_INT_LINALG_HPP
