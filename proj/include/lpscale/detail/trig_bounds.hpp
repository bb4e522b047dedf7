#ifndef LPSCALE_DETAIL_TRIG_BOUNDS_HPP
#define LPSCALE_DETAIL_TRIG_BOUNDS_HPP

// Certified extrema of a real-valued trigonometric polynomial
//   P(w) = sum_k c_k e^{-ikw},  c_{-k} = c_k,
// on [-pi, pi).
//
// The circle is covered by N cells of half-width h centred on the uniform
// grid. On a cell with centre c every value satisfies
//   |P(w) - P(c)| <= L1 h                              (mean value)
//   |P(w) - P(c)| <= |P'(c)| h + L2 h^2 / 2            (Taylor)
// with L1 = sum |k||c_k| >= sup|P'| and L2 = sum k^2|c_k| >= sup|P''|.
// Cells whose bound is not within `tol` of the best sample so far are
// bisected, so the bound tightens where the extremum actually is.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "lpscale/laurent.hpp"

namespace lpscale::detail {

struct TrigExtremum {
  double sampled = 0.0;    ///< best value actually evaluated
  double certified = 0.0;  ///< sound bound (lower for min, upper for max)
  double arg = 0.0;        ///< where `sampled` was attained
  std::size_t evaluations = 0;
  bool converged = true;   ///< false when the cell budget ran out
};

class TrigPoly {
 public:
  explicit TrigPoly(const LaurentPoly& p) {
    if (p.dim() != 1) throw DimensionError("TrigPoly: univariate polynomial required");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int k = p.exponent(i)[0];
      k_.push_back(k);
      c_.push_back(p.coeff(i));
      l1_ += std::abs(k) * std::abs(p.coeff(i));
      l2_ += static_cast<double>(k) * k * std::abs(p.coeff(i));
      scale_ += std::abs(p.coeff(i));
    }
  }

  // Real part only: callers pass conjugate-symmetric data.
  void value_and_slope(double w, double& value, double& slope) const {
    value = 0.0;
    slope = 0.0;
    for (std::size_t i = 0; i < k_.size(); ++i) {
      const double ph = -k_[i] * w;
      value += c_[i] * std::cos(ph);
      slope += c_[i] * k_[i] * std::sin(ph);  // d/dw cos(-kw) = k sin(-kw)
    }
  }

  double l1() const { return l1_; }
  double l2() const { return l2_; }
  double scale() const { return scale_; }

 private:
  std::vector<int> k_;
  std::vector<double> c_;
  double l1_ = 0.0, l2_ = 0.0, scale_ = 0.0;
};

/// Certified minimum (maximize = false) or maximum of P.
inline TrigExtremum certified_extremum(const LaurentPoly& p, std::size_t grid, bool maximize,
                                       double tol, std::size_t max_cells = 4'000'000) {
  const TrigPoly tp(p);
  const double sign = maximize ? -1.0 : 1.0;  // work on sign*P and minimize
  struct Cell {
    double centre, half, value, slope;
  };

  TrigExtremum out;
  auto eval = [&](double w) {
    double v, s;
    tp.value_and_slope(w, v, s);
    ++out.evaluations;
    return Cell{w, 0.0, sign * v, sign * s};
  };
  auto radius = [&](const Cell& c) {
    return std::min(tp.l1() * c.half, std::abs(c.slope) * c.half + 0.5 * tp.l2() * c.half * c.half);
  };

  const double h0 = std::numbers::pi / static_cast<double>(grid);
  std::vector<Cell> stack;
  stack.reserve(grid);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid; ++j) {
    Cell c = eval(-std::numbers::pi + 2.0 * h0 * static_cast<double>(j));
    c.half = h0;
    if (c.value < best) {
      best = c.value;
      out.arg = c.centre;
    }
    stack.push_back(c);
  }

  double bound = std::numeric_limits<double>::infinity();
  std::size_t cells = 0;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    const double lb = c.value - radius(c);
    if (lb >= best - tol || cells >= max_cells) {
      if (lb < best - tol) out.converged = false;
      bound = std::min(bound, lb);
      continue;
    }
    ++cells;
    for (double offset : {-0.5 * c.half, 0.5 * c.half}) {
      Cell child = eval(c.centre + offset);
      child.half = 0.5 * c.half;
      if (child.value < best) {
        best = child.value;
        out.arg = child.centre;
      }
      stack.push_back(child);
    }
  }
  out.sampled = sign * best;
  out.certified = sign * std::min(bound, best);
  return out;
}

}  // namespace lpscale::detail

#endif  // LPSCALE_DETAIL_TRIG_BOUNDS_HPP
