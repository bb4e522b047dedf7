#ifndef LPSCALE_TESTS_ORACLES_HPP
#define LPSCALE_TESTS_ORACLES_HPP

// Reference computations written independently of the library: dense
// convolution, direct trigonometric sums, hand-derived closed forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "lpscale/laurent.hpp"

namespace oracle {

using cd = std::complex<double>;
using Terms = std::map<std::vector<int>, double>;

inline Terms terms_of(const lpscale::LaurentPoly& p) {
  Terms t;
  for (std::size_t i = 0; i < p.size(); ++i) t[{p.exponent(i).begin(), p.exponent(i).end()}] += p.coeff(i);
  return t;
}

inline Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(ka.size());
      for (std::size_t d = 0; d < k.size(); ++d) k[d] = ka[d] + kb[d];
      out[k] += ca * cb;
    }
  return out;
}

/// max |a - b| over the union of supports.
inline double distance(const Terms& a, const Terms& b) {
  double m = 0.0;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    m = std::max(m, std::abs(c - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, c] : b)
    if (!a.count(k)) m = std::max(m, std::abs(c));
  return m;
}

/// sum c_k e^{-i k.omega}
inline cd evaluate(const Terms& t, const std::vector<double>& omega) {
  cd s = 0.0;
  for (const auto& [k, c] : t) {
    double ph = 0.0;
    for (std::size_t d = 0; d < k.size(); ++d) ph += k[d] * omega[d];
    s += c * cd(std::cos(ph), -std::sin(ph));
  }
  return s;
}

/// Dense convolution of coefficient vectors.
inline std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// min of a real trigonometric polynomial on an n-point uniform grid.
inline double grid_min(const Terms& t, std::size_t n) {
  double m = INFINITY;
  for (std::size_t j = 0; j < n; ++j) {
    const double w = -std::numbers::pi + 2.0 * std::numbers::pi * j / n;
    m = std::min(m, evaluate(t, {w}).real());
  }
  return m;
}

/// Hat on [0, 2] peaking at 1.
inline double hat(double x) { return std::max(0.0, 1.0 - std::abs(x - 1.0)); }

/// Quadratic B-spline on [0, 3].
inline double bspline3(double x) {
  if (x < 0 || x >= 3) return 0.0;
  if (x < 1) return 0.5 * x * x;
  if (x < 2) return 0.5 * (-2 * x * x + 6 * x - 3);
  return 0.5 * (3 - x) * (3 - x);
}

/// Scaled masks worked out by hand: tau(z) (a + b z^{-lambda}) where
/// a^2 + b^2 and a b match the two coefficients of 2 - H*H.
inline std::vector<double> example_hat2() {
  const double a = (2 + std::sqrt(6.0)) / 4, b = (2 - std::sqrt(6.0)) / 4;
  // (1, 2, 1)/4 times a + b z^{-2}
  return {a / 4, a / 2, (a + b) / 4, b / 2, b / 4};
}

inline std::vector<double> example_bspline3() {
  const double a = (2 + std::sqrt(7.0)) / 4, b = (2 - std::sqrt(7.0)) / 4;
  // (1, 3, 3, 1)/8 times a + b z^{-2}
  return {a / 8, 3 * a / 8, (3 * a + b) / 8, (a + 3 * b) / 8, 3 * b / 8, b / 8};
}

inline std::vector<double> example_hat3() {
  const double r3 = std::sqrt(3.0), r43 = std::sqrt(43.0);
  const double a = (3 * r3 + r43) / (6 * r3), b = (3 * r3 - r43) / (6 * r3);
  // (1, 2, 3, 2, 1)/9 times a + b z^{-3}
  return {a / 9, 2 * a / 9, 3 * a / 9, (2 * a + b) / 9, (a + 2 * b) / 9, 3 * b / 9, 2 * b / 9, b / 9};
}

/// Dense periodic analysis operator: one row per (filter, shift m), entry
/// n holding f(n - lambda m mod L). A tight bank has W^T W = I.
inline std::vector<std::vector<double>> analysis_rows(const std::vector<std::map<int, double>>& filters, int lambda,
                                                     int length) {
  std::vector<std::vector<double>> rows;
  for (const auto& f : filters)
    for (int m = 0; m < length / lambda; ++m) {
      std::vector<double> row(length, 0.0);
      for (const auto& [k, v] : f) row[((lambda * m + k) % length + length) % length] += v;
      rows.push_back(row);
    }
  return rows;
}

}  // namespace oracle

#endif
