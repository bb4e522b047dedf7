#ifndef LPSCALE_REFINABLE_HPP
#define LPSCALE_REFINABLE_HPP

// Refinable functions phi(x) = sum_k c_k phi(lambda x - k), c_k = lambda tau_k,
// sampled on lambda-adic grids; smoothness bound and stability probe.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lpscale/detail/trig_bounds.hpp"
#include "lpscale/errors.hpp"
#include "lpscale/filterbank.hpp"
#include "lpscale/laurent.hpp"

namespace lpscale {

/// Samples phi(i / lambda^J), i = 0..N, covering [0, s/(lambda-1)].
class RefinableProfile {
 public:
  RefinableProfile() = default;

  /// Wraps raw samples; `mask` may be absent for functions that are not
  /// produced by the cascade.
  RefinableProfile(int lambda, int level, std::vector<double> samples, std::optional<RefinementMask> mask = {},
                   double support_end = -1.0)
      : lambda_(lambda), level_(level), samples_(std::move(samples)), mask_(std::move(mask)) {
    if (lambda_ < 2) throw InvalidArgument("RefinableProfile: lambda must be at least 2");
    if (level_ < 0) throw InvalidArgument("RefinableProfile: negative level");
    if (samples_.empty()) throw InvalidArgument("RefinableProfile: no samples");
    support_end_ = support_end >= 0.0 ? support_end : x(samples_.size() - 1);
  }

  int lambda() const { return lambda_; }
  int level() const { return level_; }
  std::int64_t scale() const { return ipow(lambda_, level_); }
  double step() const { return 1.0 / static_cast<double>(scale()); }
  std::size_t size() const { return samples_.size(); }
  double x(std::size_t i) const { return static_cast<double>(i) * step(); }
  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }
  const std::optional<RefinementMask>& mask() const { return mask_; }
  std::pair<double, double> support() const { return {0.0, support_end_}; }
  double convergence_gap() const { return convergence_gap_; }
  bool used_subdivision_fallback() const { return fallback_; }

  /// Sample i, zero outside the grid.
  double at(std::int64_t i) const {
    return i < 0 || i >= static_cast<std::int64_t>(samples_.size()) ? 0.0 : samples_[static_cast<std::size_t>(i)];
  }

  /// Linear interpolation between grid samples; zero outside.
  double value(double xv) const {
    const double t = xv * static_cast<double>(scale());
    const double f = std::floor(t);
    const auto i = static_cast<std::int64_t>(f);
    return (1.0 - (t - f)) * at(i) + (t - f) * at(i + 1);
  }

  /// Riemann sum of phi.
  double mass() const {
    double s = 0.0;
    for (double v : samples_) s += v;
    return s * step();
  }

  /// Largest |sample| outside [lo, hi].
  double mass_outside(double lo, double hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i)
      if (x(i) < lo - 1e-12 || x(i) > hi + 1e-12) m = std::max(m, std::abs(samples_[i]));
    return m;
  }

  /// max over x in [0,1) grid of |sum_k phi(x + k) - 1|.
  double partition_of_unity_error() const {
    const std::int64_t p = scale();
    double worst = 0.0;
    for (std::int64_t i = 0; i < p; ++i) {
      double s = 0.0;
      for (std::int64_t j = i; j < static_cast<std::int64_t>(samples_.size()); j += p) s += samples_[static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
  }

  static std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

 private:
  friend RefinableProfile cascade(const RefinementMask&, int);

  int lambda_ = 2;
  int level_ = 0;
  std::vector<double> samples_{0.0};
  std::optional<RefinementMask> mask_;
  double support_end_ = 0.0;
  double convergence_gap_ = 0.0;
  bool fallback_ = false;
};

namespace detail {

/// Two-scale coefficients c_k = lambda tau_k on {0..s}.
inline std::vector<double> two_scale(const RefinementMask& m) {
  const auto [lo, hi] = m.tau.exponent_range();
  if (lo < 0) throw InvalidArgument("cascade: mask support must not contain negative indices");
  std::vector<double> c(static_cast<std::size_t>(hi) + 1, 0.0);
  const double lambda = static_cast<double>(m.dilation.lambda());
  for (std::size_t i = 0; i < m.tau.size(); ++i) c[static_cast<std::size_t>(m.tau.exponent(i)[0])] = lambda * m.tau.coeff(i);
  return c;
}

}  // namespace detail

/// phi on the grid lambda^{-J} Z. Integer values come from the eigenvector
/// of T_{jm} = c_{lambda j - m} for eigenvalue 1; each level then follows
/// from phi(i/lambda^l) = sum_k c_k phi((i - k lambda^{l-1}) / lambda^{l-1}).
/// When eigenvalue 1 is not simple the profile is the subdivision limit
/// S^J delta instead.
inline RefinableProfile cascade(const RefinementMask& mask, int J) {
  if (mask.tau.dim() != 1) throw DimensionError("cascade: univariate mask required");
  if (J < 0) throw InvalidArgument("cascade: negative level");
  const int lambda = mask.dilation.lambda();
  if (std::abs(mask.tau.coeff_sum() - 1.0) > 1e-10 || accuracy_order(mask) < 1)
    throw MathError("cascade: mask lacks positive accuracy (tau(0) = 1 and tau(gamma) = 0 required)");
  const std::vector<double> c = detail::two_scale(mask);
  const auto s = static_cast<std::int64_t>(c.size()) - 1;
  const double support_end = static_cast<double>(s) / (lambda - 1);
  const auto n0 = static_cast<std::int64_t>(std::floor(support_end + 1e-12));
  auto coef = [&](std::int64_t k) { return k < 0 || k > s ? 0.0 : c[static_cast<std::size_t>(k)]; };

  const auto dim = static_cast<Eigen::Index>(n0 + 1);
  Eigen::MatrixXd t(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index m = 0; m < dim; ++m) t(j, m) = coef(lambda * j - m);
  Eigen::EigenSolver<Eigen::MatrixXd> es(t);
  if (es.info() != Eigen::Success) throw MathError("cascade: eigenvalue computation failed");
  std::vector<Eigen::Index> unit;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (std::abs(es.eigenvalues()(i) - Complex(1.0)) < 1e-6) unit.push_back(i);
  if (unit.empty()) throw MathError("cascade: transition matrix has no eigenvalue 1");

  RefinableProfile out;
  out.lambda_ = lambda;
  out.level_ = J;
  out.mask_ = mask;
  out.support_end_ = support_end;
  const std::int64_t full = RefinableProfile::ipow(lambda, J);
  const auto n_samples = static_cast<std::size_t>(std::floor(support_end * static_cast<double>(full) + 1e-9)) + 1;

  std::vector<double> u;
  if (unit.size() == 1) {
    const Eigen::VectorXcd v = es.eigenvectors().col(unit.front());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) sum += v(i).real();
    if (std::abs(sum) < 1e-12) throw MathError("cascade: eigenvector for eigenvalue 1 has zero sum");
    u.resize(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) u[static_cast<std::size_t>(i)] = v(i).real() / sum;
    std::vector<double> prev;
    for (int l = 1; l <= J; ++l) {
      const std::int64_t stride = RefinableProfile::ipow(lambda, l - 1);
      const auto len = static_cast<std::size_t>(std::floor(support_end * static_cast<double>(stride * lambda) + 1e-9)) + 1;
      std::vector<double> next(len, 0.0);
      for (std::size_t i = 0; i < len; ++i) {
        double acc = 0.0;
        for (std::int64_t k = 0; k <= s; ++k) {
          const std::int64_t idx = static_cast<std::int64_t>(i) - k * stride;
          if (idx < 0) break;
          if (idx < static_cast<std::int64_t>(u.size())) acc += c[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(idx)];
        }
        next[i] = acc;
      }
      prev = std::move(u);
      u = std::move(next);
    }
    if (!prev.empty())
      for (std::size_t i = 0; i < prev.size(); ++i)
        out.convergence_gap_ = std::max(out.convergence_gap_, std::abs(u[i * static_cast<std::size_t>(lambda)] - prev[i]));
  } else {
    // (S v)[i] = sum_m c_{i - lambda m} v[m]
    out.fallback_ = true;
    u = {1.0};
    std::vector<double> prev;
    for (int l = 1; l <= J; ++l) {
      std::vector<double> next((u.size() - 1) * static_cast<std::size_t>(lambda) + static_cast<std::size_t>(s) + 1, 0.0);
      for (std::size_t m = 0; m < u.size(); ++m)
        for (std::int64_t k = 0; k <= s; ++k) next[m * static_cast<std::size_t>(lambda) + static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k)] * u[m];
      prev = std::move(u);
      u = std::move(next);
    }
    if (!prev.empty())
      for (std::size_t i = 0; i < prev.size(); ++i)
        out.convergence_gap_ = std::max(out.convergence_gap_, std::abs(u[i * static_cast<std::size_t>(lambda)] - prev[i]));
  }
  u.resize(n_samples, 0.0);
  out.samples_ = std::move(u);
  return out;
}

/// max_i |phi(x_i) - sum_k c_k phi(lambda x_i - k)| over the grid.
inline double refinement_residual(const RefinableProfile& p) {
  if (!p.mask()) throw InvalidArgument("refinement_residual: profile carries no mask");
  const std::vector<double> c = detail::two_scale(*p.mask());
  const std::int64_t lambda = p.lambda();
  const std::int64_t full = p.scale();
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
      acc += c[k] * p.at(lambda * static_cast<std::int64_t>(i) - static_cast<std::int64_t>(k) * full);
    worst = std::max(worst, std::abs(p.samples()[i] - acc));
  }
  return worst;
}

struct SmoothnessEstimate {
  double beta = 0.0;
  double xi_sup = 0.0;      ///< certified upper bound of max |m| on the circle
  double xi_sampled = 0.0;  ///< max |m| over the samples actually taken
  double alpha = 0.0;
  int lambda = 2;
  bool l2 = false;  ///< alpha > 0
};

/// alpha = beta - log_lambda(xi_sup) - 1 with xi_sup = max |m(e^{i omega})|.
/// The maximum of |m|^2 = m m* is bounded from above by the same branch
/// and bound used for positivity certificates.
inline SmoothnessEstimate smoothness_bound(double beta, const LaurentPoly& m, int lambda, std::size_t grid = 4096) {
  if (lambda < 2) throw InvalidArgument("smoothness_bound: lambda must be at least 2");
  if (m.dim() != 1) throw DimensionError("smoothness_bound: univariate factor required");
  if (m.is_zero()) throw MathError("smoothness_bound: zero factor");
  const LaurentPoly p = abs_squared(m);
  const double scale = std::max(1.0, p.max_abs_coeff());
  const auto ext = detail::certified_extremum(p, grid, /*maximize=*/true, 1e-13 * scale);
  SmoothnessEstimate e;
  e.beta = beta;
  e.lambda = lambda;
  e.xi_sup = std::sqrt(std::max(ext.certified, 0.0));
  e.xi_sampled = std::sqrt(std::max(ext.sampled, 0.0));
  e.alpha = beta - std::log(e.xi_sup) / std::log(static_cast<double>(lambda)) - 1.0;
  e.l2 = e.alpha > 0.0;
  return e;
}

struct Family {
  enum class Kind { dd, bspline, hat };
  Kind kind = Kind::hat;
  int param = 2;  ///< k for dd and bspline, lambda for hat

  std::string name() const {
    switch (kind) {
      case Kind::dd: return "dd" + std::to_string(param);
      case Kind::bspline: return "bspline" + std::to_string(param);
      default: return "hat" + std::to_string(param);
    }
  }
  int lambda() const { return kind == Kind::hat ? param : 2; }
};

/// P_k(x) = sum_{j<k} binom(k-1+j, j) x^j.
inline double dd_polynomial(int k, double x) {
  double sum = 0.0, binom = 1.0, xp = 1.0;
  for (int j = 0; j < k; ++j) {
    sum += binom * xp;
    binom = binom * (k + j) / (j + 1);
    xp *= x;
  }
  return sum;
}

/// Decay exponent of the unscaled refinable function of each family.
inline double family_beta(const Family& f) {
  if (f.param < 1) throw InvalidArgument("family_beta: parameter must be positive");
  switch (f.kind) {
    case Family::Kind::dd: return 2.0 * f.param - std::log2(dd_polynomial(f.param, 0.75));
    case Family::Kind::bspline: return static_cast<double>(f.param);
    case Family::Kind::hat:
      if (f.param < 2) throw InvalidArgument("family_beta: hat needs lambda >= 2");
      return 2.0;
  }
  throw InvalidArgument("family_beta: unknown family");
}

struct StabilityReport {
  double min_sum = 0.0;  ///< min over omega of sum_{|j|<=J0} |phi^(omega + 2 pi j)|^2
  double argmin = 0.0;
  double max_sum = 0.0;
  std::size_t grid = 0;
  int periods = 32;
  bool stable = false;  ///< min_sum > threshold; advisory only
};

/// Advisory stability indicator from a Riemann-sum Fourier transform of
/// the samples. Omega runs over grid+1 points including both +-pi.
inline StabilityReport stability_probe(const RefinableProfile& p, std::size_t grid = 256, int periods = 32,
                                       double threshold = 1e-3) {
  if (grid < 2) throw InvalidArgument("stability_probe: grid too small");
  StabilityReport rep;
  rep.grid = grid;
  rep.periods = periods;
  rep.min_sum = std::numeric_limits<double>::infinity();
  const double h = p.step();
  auto phi_hat = [&](double xi) {
    const Complex rot = std::polar(1.0, -xi * h);
    Complex ph = 1.0, acc = 0.0;
    for (double v : p.samples()) {
      acc += v * ph;
      ph *= rot;
    }
    return acc * h;
  };
  for (std::size_t g = 0; g <= grid; ++g) {
    const double w = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(grid);
    double s = 0.0;
    for (int j = -periods; j <= periods; ++j) s += std::norm(phi_hat(w + 2.0 * std::numbers::pi * j));
    if (s < rep.min_sum) {
      rep.min_sum = s;
      rep.argmin = w;
    }
    rep.max_sum = std::max(rep.max_sum, s);
  }
  rep.stable = rep.min_sum > threshold;
  return rep;
}

}  // namespace lpscale

#endif  // LPSCALE_REFINABLE_HPP
