#ifndef LPSCALE_LAURENT_HPP
#define LPSCALE_LAURENT_HPP

// Multivariate Laurent polynomials with real coefficients and dense
// matrices over them.
//
// A term with exponent vector k stores the coefficient of z^{-k}, so a
// filter h maps to its z-transform H(z) = sum_k h(k) z^{-k} with no sign
// juggling. On the torus z = e^{i omega} the polynomial evaluates to
// sum_k c_k e^{-i k.omega}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lpscale/detail/int_linalg.hpp"
#include "lpscale/errors.hpp"

namespace lpscale {

/// Coefficients with magnitude at or below this are dropped after every
/// arithmetic operation.
inline constexpr double kDropTolerance = 1e-14;

using Complex = std::complex<double>;
using Exponent = std::vector<int>;

/// A point z = e^{i omega} of the n-torus, stored by its angles.
class TorusPoint {
 public:
  explicit TorusPoint(std::vector<double> omega) : omega_(std::move(omega)) {
    if (omega_.empty()) throw DimensionError("TorusPoint: empty angle vector");
  }
  explicit TorusPoint(double omega) : omega_{omega} {}

  std::size_t dim() const { return omega_.size(); }
  std::span<const double> omega() const { return omega_; }
  double omega(std::size_t i) const { return omega_[i]; }
  Complex z(std::size_t i) const { return std::polar(1.0, omega_[i]); }

 private:
  std::vector<double> omega_;
};

class LaurentPoly {
 public:
  /// The zero polynomial in one variable.
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionError("LaurentPoly: dimension must be positive");
  }

  static LaurentPoly constant(double c, std::size_t dim = 1) {
    LaurentPoly p(dim);
    if (std::abs(c) > kDropTolerance) {
      p.exps_.assign(dim, 0);
      p.coeffs_.push_back(c);
    }
    return p;
  }

  /// c * z^{-k}
  static LaurentPoly monomial(std::span<const int> k, double c) {
    LaurentPoly p(k.size());
    if (std::abs(c) > kDropTolerance) {
      p.exps_.assign(k.begin(), k.end());
      p.coeffs_.push_back(c);
    }
    return p;
  }
  static LaurentPoly monomial(int k, double c) { return monomial(std::span<const int>(&k, 1), c); }

  /// One variable: coeffs[i] multiplies z^{-(offset + i)}.
  static LaurentPoly univariate(std::span<const double> coeffs, int offset = 0) {
    std::vector<std::pair<Exponent, double>> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      terms.push_back({Exponent{offset + static_cast<int>(i)}, coeffs[i]});
    return from_terms(1, terms);
  }
  static LaurentPoly univariate(std::initializer_list<double> coeffs, int offset = 0) {
    return univariate(std::span<const double>(coeffs.begin(), coeffs.size()), offset);
  }

  /// Builds a polynomial from (exponent, coefficient) pairs; repeated
  /// exponents accumulate.
  static LaurentPoly from_terms(std::size_t dim,
                                std::span<const std::pair<Exponent, double>> terms) {
    std::map<Exponent, double> acc;
    for (const auto& [k, c] : terms) {
      if (k.size() != dim) throw DimensionError("LaurentPoly: exponent length differs from dim");
      acc[k] += c;
    }
    return from_map(dim, acc);
  }
  static LaurentPoly from_terms(std::size_t dim,
                                std::initializer_list<std::pair<Exponent, double>> terms) {
    return from_terms(dim, std::span(terms.begin(), terms.size()));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const int> exponent(std::size_t i) const {
    return {exps_.data() + i * dim_, dim_};
  }
  double coeff(std::size_t i) const { return coeffs_[i]; }

  /// Coefficient of z^{-k} (zero when absent).
  double coeff_at(std::span<const int> k) const {
    if (k.size() != dim_) throw DimensionError("LaurentPoly::coeff_at: wrong exponent length");
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (lex_less(exponent(mid), k)) lo = mid + 1;
      else hi = mid;
    }
    if (lo < size() && std::ranges::equal(exponent(lo), k)) return coeffs_[lo];
    return 0.0;
  }
  double coeff_at(int k) const { return coeff_at(std::span<const int>(&k, 1)); }

  /// Smallest / largest exponent along one axis. Zero polynomial: {0, 0}.
  std::pair<int, int> exponent_range(std::size_t axis = 0) const {
    if (is_zero()) return {0, 0};
    int lo = exponent(0)[axis], hi = lo;
    for (std::size_t i = 1; i < size(); ++i) {
      lo = std::min(lo, exponent(i)[axis]);
      hi = std::max(hi, exponent(i)[axis]);
    }
    return {lo, hi};
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }
  /// sum_k c_k, i.e. the value at z = 1.
  double coeff_sum() const {
    double s = 0.0;
    for (double c : coeffs_) s += c;
    return s;
  }

  /// z -> z^{-1}: every exponent negated. On the torus this is complex
  /// conjugation, since the coefficients are real.
  LaurentPoly involution() const {
    std::vector<std::pair<Exponent, double>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      Exponent k(exponent(i).begin(), exponent(i).end());
      for (int& e : k) e = -e;
      terms.push_back({std::move(k), coeffs_[i]});
    }
    return from_terms(dim_, terms);
  }

  /// Exponent substitution k -> M k. With M = Lambda this realizes
  /// p(z^Lambda); in one variable with M = [lambda] it is p(z^lambda).
  LaurentPoly dilate(const IntMatrix& m) const {
    if (m.cols() != dim_) throw DimensionError("LaurentPoly::dilate: matrix width != dim");
    std::vector<std::pair<Exponent, double>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      const auto mk = m.apply(exponent(i));
      terms.push_back({Exponent(mk.begin(), mk.end()), coeffs_[i]});
    }
    return from_terms(m.rows(), terms);
  }
  LaurentPoly dilate(int lambda) const { return dilate(IntMatrix::scalar(lambda)); }

  /// Multiplication by z^{-s}.
  LaurentPoly shifted(std::span<const int> s) const {
    if (s.size() != dim_) throw DimensionError("LaurentPoly::shifted: wrong shift length");
    LaurentPoly out = *this;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t d = 0; d < dim_; ++d) out.exps_[i * dim_ + d] += s[d];
    return out;
  }
  LaurentPoly shifted(int s) const { return shifted(std::span<const int>(&s, 1)); }

  Complex eval(std::span<const double> omega) const {
    if (omega.size() != dim_) throw DimensionError("LaurentPoly::eval: point dimension mismatch");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      double phase = 0.0;
      const auto k = exponent(i);
      for (std::size_t d = 0; d < dim_; ++d) phase += k[d] * omega[d];
      sum += std::polar(coeffs_[i], -phase);
    }
    return sum;
  }
  Complex eval(const TorusPoint& t) const { return eval(t.omega()); }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (double& c : out.coeffs_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, 1.0);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, -1.0);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }
  friend LaurentPoly operator*(double s, const LaurentPoly& p) {
    LaurentPoly out(p.dim_);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double c = s * p.coeffs_[i];
      if (std::abs(c) <= kDropTolerance) continue;
      out.exps_.insert(out.exps_.end(), p.exponent(i).begin(), p.exponent(i).end());
      out.coeffs_.push_back(c);
    }
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, double s) { return s * p; }
  friend LaurentPoly operator+(const LaurentPoly& p, double c) {
    return p + constant(c, p.dim_);
  }
  friend LaurentPoly operator+(double c, const LaurentPoly& p) { return p + c; }
  friend LaurentPoly operator-(double c, const LaurentPoly& p) { return constant(c, p.dim_) - p; }
  friend LaurentPoly operator-(const LaurentPoly& p, double c) { return p - constant(c, p.dim_); }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Exact (bitwise) equality of the canonical forms.
  bool operator==(const LaurentPoly&) const = default;

 private:
  static bool lex_less(std::span<const int> a, std::span<const int> b) {
    return std::ranges::lexicographical_compare(a, b);
  }

  static LaurentPoly from_map(std::size_t dim, const std::map<Exponent, double>& acc) {
    LaurentPoly p(dim);
    p.coeffs_.reserve(acc.size());
    p.exps_.reserve(acc.size() * dim);
    for (const auto& [k, c] : acc) {
      if (std::abs(c) <= kDropTolerance) continue;
      p.exps_.insert(p.exps_.end(), k.begin(), k.end());
      p.coeffs_.push_back(c);
    }
    return p;
  }

  static void check_dims(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim_ != b.dim_)
      throw DimensionError("LaurentPoly: dimension mismatch (" + std::to_string(a.dim_) + " vs " +
                           std::to_string(b.dim_) + ")");
  }

  void push(std::span<const int> k, double c) {
    if (std::abs(c) <= kDropTolerance) return;
    exps_.insert(exps_.end(), k.begin(), k.end());
    coeffs_.push_back(c);
  }

  // a + sign*b by merging the two sorted term lists.
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, double sign) {
    check_dims(a, b);
    LaurentPoly out(a.dim_);
    out.coeffs_.reserve(a.size() + b.size());
    out.exps_.reserve((a.size() + b.size()) * a.dim_);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && lex_less(a.exponent(i), b.exponent(j)))) {
        out.push(a.exponent(i), a.coeffs_[i]);
        ++i;
      } else if (i == a.size() || lex_less(b.exponent(j), a.exponent(i))) {
        out.push(b.exponent(j), sign * b.coeffs_[j]);
        ++j;
      } else {
        out.push(a.exponent(i), a.coeffs_[i] + sign * b.coeffs_[j]);
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Convolution. Supports here are small boxes, so the product is
  // accumulated in a dense array over the Minkowski-sum bounding box;
  // scattered supports whose box is too large fall back to a map.
  static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    check_dims(a, b);
    const std::size_t dim = a.dim_;
    if (a.is_zero() || b.is_zero()) return LaurentPoly(dim);

    std::vector<int> lo(dim), extent(dim);
    std::size_t volume = 1;
    constexpr std::size_t kMaxDenseVolume = std::size_t{1} << 22;
    bool dense = true;
    for (std::size_t d = 0; d < dim; ++d) {
      const auto [alo, ahi] = a.exponent_range(d);
      const auto [blo, bhi] = b.exponent_range(d);
      lo[d] = alo + blo;
      extent[d] = (ahi + bhi) - lo[d] + 1;
      if (volume > kMaxDenseVolume / static_cast<std::size_t>(extent[d])) dense = false;
      else volume *= static_cast<std::size_t>(extent[d]);
    }

    if (!dense) {
      std::map<Exponent, double> acc;
      Exponent k(dim);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          for (std::size_t d = 0; d < dim; ++d) k[d] = a.exponent(i)[d] + b.exponent(j)[d];
          acc[k] += a.coeffs_[i] * b.coeffs_[j];
        }
      return from_map(dim, acc);
    }

    // Row-major linear index; the first axis is slowest so iterating the
    // buffer in order yields lexicographically sorted exponents.
    auto linear = [&](std::span<const int> k) {
      std::size_t idx = 0;
      for (std::size_t d = 0; d < dim; ++d)
        idx = idx * static_cast<std::size_t>(extent[d]) + static_cast<std::size_t>(k[d] - lo[d]);
      return idx;
    };
    std::vector<double> buf(volume, 0.0);
    std::vector<unsigned char> touched(volume, 0);
    Exponent k(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t d = 0; d < dim; ++d) k[d] = a.exponent(i)[d] + b.exponent(j)[d];
        const std::size_t idx = linear(k);
        buf[idx] += a.coeffs_[i] * b.coeffs_[j];
        touched[idx] = 1;
      }

    LaurentPoly out(dim);
    for (std::size_t idx = 0; idx < volume; ++idx) {
      if (!touched[idx]) continue;
      std::size_t rem = idx;
      for (std::size_t d = dim; d-- > 0;) {
        k[d] = lo[d] + static_cast<int>(rem % static_cast<std::size_t>(extent[d]));
        rem /= static_cast<std::size_t>(extent[d]);
      }
      out.push(k, buf[idx]);
    }
    return out;
  }

  std::size_t dim_ = 1;
  std::vector<int> exps_;  // size() rows of dim_ entries, lexicographically sorted
  std::vector<double> coeffs_;
};

inline LaurentPoly involution(const LaurentPoly& p) { return p.involution(); }
inline Complex eval(const LaurentPoly& p, const TorusPoint& t) { return p.eval(t); }

/// |p|^2 on the torus, as the Laurent polynomial p * p(z^{-1}).
inline LaurentPoly abs_squared(const LaurentPoly& p) { return p * p.involution(); }

/// Max |a_k - b_k| over the union of supports.
inline double max_coeff_diff(const LaurentPoly& a, const LaurentPoly& b) {
  // Subtraction drops terms below kDropTolerance; that is below any
  // tolerance this library compares against.
  return (a - b).max_abs_coeff();
}

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

inline bool poly_eq(const LaurentPoly& a, const LaurentPoly& b, double tol) {
  if (tol < 0) throw InvalidArgument("poly_eq: negative tolerance");
  return max_coeff_diff(a, b) <= tol;
}

/// Dense rows x cols matrix of Laurent polynomials sharing one dimension.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t dim = 1)
      : rows_(rows), cols_(cols), dim_(dim), entries_(rows * cols, LaurentPoly(dim)) {}
  LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionError("LaurentMatrix: entry count != rows*cols");
    dim_ = entries_.empty() ? 1 : entries_.front().dim();
    for (const auto& e : entries_)
      if (e.dim() != dim_) throw DimensionError("LaurentMatrix: entries of differing dimension");
  }

  static LaurentMatrix identity(std::size_t n, std::size_t dim = 1) {
    LaurentMatrix m(n, n, dim);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(1.0, dim);
    return m;
  }
  static LaurentMatrix diagonal(std::span<const LaurentPoly> d) {
    if (d.empty()) throw DimensionError("LaurentMatrix::diagonal: empty diagonal");
    LaurentMatrix m(d.size(), d.size(), d.front().dim());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.check_uniform();
    return m;
  }
  static LaurentMatrix column(std::span<const LaurentPoly> v) {
    if (v.empty()) throw DimensionError("LaurentMatrix::column: empty vector");
    return LaurentMatrix(v.size(), 1, std::vector<LaurentPoly>(v.begin(), v.end()));
  }
  static LaurentMatrix from_scalars(const IntMatrix& a, std::size_t dim = 1) {
    LaurentMatrix m(a.rows(), a.cols(), dim);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        m(r, c) = LaurentPoly::constant(static_cast<double>(a(r, c)), dim);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return dim_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const LaurentPoly> entries() const { return entries_; }

  std::vector<LaurentPoly> col(std::size_t c) const {
    std::vector<LaurentPoly> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  /// Rows [first, first + count).
  LaurentMatrix row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DimensionError("LaurentMatrix::row_block: out of range");
    return LaurentMatrix(count, cols_,
                         std::vector<LaurentPoly>(entries_.begin() + first * cols_,
                                                  entries_.begin() + (first + count) * cols_));
  }

  /// Transpose with the involution applied entrywise.
  LaurentMatrix conj_transpose() const {
    LaurentMatrix t(cols_, rows_, dim_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).involution();
    return t;
  }

  Eigen::MatrixXcd eval(std::span<const double> omega) const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).eval(omega);
    return m;
  }
  Eigen::MatrixXcd eval(const TorusPoint& t) const { return eval(t.omega()); }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.max_abs_coeff());
    return m;
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("LaurentMatrix product: " + std::to_string(a.rows_) + "x" +
                           std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                           std::to_string(b.cols_));
    if (a.dim_ != b.dim_) throw DimensionError("LaurentMatrix product: dimension mismatch");
    LaurentMatrix out(a.rows_, b.cols_, a.dim_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) {
        LaurentPoly acc(a.dim_);
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
          acc += a(r, k) * b(k, c);
        }
        out(r, c) = std::move(acc);
      }
    return out;
  }
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    return combine(a, b, [](const LaurentPoly& x, const LaurentPoly& y) { return x + y; });
  }
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    return combine(a, b, [](const LaurentPoly& x, const LaurentPoly& y) { return x - y; });
  }

  bool operator==(const LaurentMatrix&) const = default;

 private:
  template <class Op>
  static LaurentMatrix combine(const LaurentMatrix& a, const LaurentMatrix& b, Op op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError("LaurentMatrix: shape mismatch in elementwise operation");
    LaurentMatrix out(a.rows_, a.cols_, a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = op(a.entries_[i], b.entries_[i]);
    return out;
  }

  void check_uniform() const {
    for (const auto& e : entries_)
      if (e.dim() != dim_) throw DimensionError("LaurentMatrix: entries of differing dimension");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t dim_ = 1;
  std::vector<LaurentPoly> entries_;
};

inline LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) { return a * b; }
inline LaurentMatrix conj_transpose(const LaurentMatrix& a) { return a.conj_transpose(); }
inline Eigen::MatrixXcd eval(const LaurentMatrix& a, const TorusPoint& t) { return a.eval(t); }

/// Max coefficient of A - B over all entries.
inline double max_coeff_diff(const LaurentMatrix& a, const LaurentMatrix& b) {
  return (a - b).max_abs_coeff();
}

/// Uniform tensor grid on [-pi, pi)^n. With `midpoint` the samples sit at
/// cell centers, which avoids omega = 0 and omega = +-pi.
struct TorusGrid {
  std::size_t points_per_dim = 256;
  bool midpoint = false;

  std::size_t size(std::size_t dim) const {
    std::size_t total = 1;
    for (std::size_t d = 0; d < dim; ++d) total *= points_per_dim;
    return total;
  }

  /// The flat-index-th grid point in `dim` variables.
  TorusPoint point(std::size_t index, std::size_t dim) const {
    std::vector<double> omega(dim);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(points_per_dim);
    for (std::size_t d = dim; d-- > 0;) {
      const std::size_t j = index % points_per_dim;
      index /= points_per_dim;
      omega[d] = -std::numbers::pi + step * (static_cast<double>(j) + (midpoint ? 0.5 : 0.0));
    }
    return TorusPoint(std::move(omega));
  }
};

}  // namespace lpscale

#endif  // LPSCALE_LAURENT_HPP
