#ifndef LPSCALE_SPECTRAL_HPP
#define LPSCALE_SPECTRAL_HPP

// Univariate positivity certificates and Fejer-Riesz spectral
// factorization: for P >= 0 on the unit circle find
// Q(z) = sum_{k=0}^r q(k) z^{-k} with P = |Q|^2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lpscale/detail/trig_bounds.hpp"
#include "lpscale/errors.hpp"
#include "lpscale/laurent.hpp"

namespace lpscale {

/// Univariate P = sum_{|k|<=r} p(k) z^{-k} with p(-k) = p(k), hence real on
/// the unit circle.
class HermitianLaurentPoly {
 public:
  static constexpr double kSymmetryTol = 1e-12;

  explicit HermitianLaurentPoly(LaurentPoly base) : base_(std::move(base)) {
    if (base_.dim() != 1) throw DimensionError("HermitianLaurentPoly: univariate polynomial required");
    const double asym = max_coeff_diff(base_, base_.involution());
    if (asym > kSymmetryTol)
      throw InvalidArgument("HermitianLaurentPoly: not conjugate-symmetric (max |p(k)-p(-k)| = " +
                            std::to_string(asym) + ")");
    const auto [lo, hi] = base_.exponent_range();
    half_degree_ = std::max(-lo, hi);
  }

  const LaurentPoly& base() const { return base_; }
  int half_degree() const { return half_degree_; }
  double coeff(int k) const { return base_.coeff_at(k); }

 private:
  LaurentPoly base_;
  int half_degree_ = 0;
};

struct PositivityCertificate {
  bool positive = false;       ///< strict: certified_min > 0; otherwise: no negative sample
  double certified_min = 0.0;  ///< sound lower bound of P on the circle
  double sampled_min = 0.0;
  double argmin = 0.0;
  std::size_t grid = 0;
  std::size_t evaluations = 0;
};

inline std::size_t default_positivity_grid(int half_degree) {
  return std::max<std::size_t>(1024, 64 * static_cast<std::size_t>(half_degree));
}

/// Certifies P > 0 (strict) or P >= 0 on the unit circle. In strict mode a
/// positive sample minimum whose certified bound does not clear zero is
/// reported as InconclusiveError; retry with a larger grid.
inline PositivityCertificate certify_positive(const HermitianLaurentPoly& p, bool strict,
                                              std::size_t grid = 0) {
  if (grid == 0) grid = default_positivity_grid(p.half_degree());
  const double scale = std::max(1.0, p.base().max_abs_coeff());
  const auto ext = detail::certified_extremum(p.base(), grid, /*maximize=*/false, 1e-12 * scale);

  PositivityCertificate cert;
  cert.certified_min = ext.certified;
  cert.sampled_min = ext.sampled;
  cert.argmin = ext.arg;
  cert.grid = grid;
  cert.evaluations = ext.evaluations;
  if (strict) {
    cert.positive = cert.certified_min > 0.0;
    if (!cert.positive && cert.sampled_min > 0.0)
      throw InconclusiveError("certify_positive: sampled minimum " + std::to_string(cert.sampled_min) +
                              " is positive but the certified bound " +
                              std::to_string(cert.certified_min) + " is not; increase the grid");
  } else {
    cert.positive = cert.sampled_min >= -1e-12 * scale;
  }
  return cert;
}

/// Roots of sum_m a[m] z^m (a.back() != 0) from the companion matrix,
/// each polished by one guarded Newton step.
inline std::vector<Complex> polynomial_roots(std::span<const double> a) {
  const std::size_t deg = a.size() - 1;
  if (a.size() < 2 || a.back() == 0.0) throw InvalidArgument("polynomial_roots: need degree >= 1");
  const auto n = static_cast<Eigen::Index>(deg);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -a[static_cast<std::size_t>(i)] / a[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw MathError("polynomial_roots: eigenvalue iteration failed");

  auto horner = [&](Complex z, Complex& f, Complex& df) {
    f = a[deg];
    df = 0.0;
    for (std::size_t m = deg; m-- > 0;) {
      df = df * z + f;
      f = f * z + a[m];
    }
  };
  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex z = es.eigenvalues()(i);
    Complex f, df;
    horner(z, f, df);
    if (std::abs(df) > 0.0) {
      const Complex z1 = z - f / df;
      Complex f1, df1;
      horner(z1, f1, df1);
      if (std::abs(f1) < std::abs(f)) z = z1;
    }
    roots.push_back(z);
  }
  return roots;
}

struct SpectralFactor {
  LaurentPoly q_poly;          ///< support in {0..r}, q(0) > 0
  double certified_min = 0.0;  ///< certified lower bound of P on the circle
  std::vector<Complex> roots;          ///< all roots of z^r P(z)
  std::vector<Complex> selected_roots; ///< zeros of z^r Q(z)
  double pairing_residual = 0.0;       ///< max distance of a root's mirror 1/conj to the root set
};

struct FactorOptions {
  double circle_tol = 1e-7;   ///< ||lambda| - 1| below this counts as a circle root
  double cluster_tol = 1e-5;  ///< circle roots closer than this form one cluster
  double pairing_tol = 1e-2;  ///< relative; clustered roots lose accuracy, so keep this loose
  double residual_tol = 1e-6; ///< relative coefficient gap of |Q|^2 - P after polishing
};

namespace detail {

inline double autocorrelation_gap(const HermitianLaurentPoly& p, const std::vector<double>& q,
                                  Eigen::VectorXd& gap) {
  const int r = static_cast<int>(q.size()) - 1;
  gap.resize(r + 1);
  for (int k = 0; k <= r; ++k) {
    double s = 0.0;
    for (int i = 0; i + k <= r; ++i) s += q[i] * q[i + k];
    gap(k) = s - p.coeff(k);
  }
  return gap.cwiseAbs().maxCoeff();
}

// Newton steps on Q Q(z^{-1}) = P (Wilson's iteration). Root finding loses
// digits on clustered roots; a few steps from the root-based start restore
// them. A step is kept only if it shrinks the coefficient gap.
inline void polish_factor(const HermitianLaurentPoly& p, std::vector<double>& q, int max_steps = 8) {
  const int r = static_cast<int>(q.size()) - 1;
  Eigen::VectorXd gap;
  double err = autocorrelation_gap(p, q, gap);
  for (int step = 0; step < max_steps && err > 0.0; ++step) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(r + 1, r + 1);
    for (int k = 0; k <= r; ++k)
      for (int j = 0; j <= r; ++j) {
        if (j + k <= r) jac(k, j) += q[j + k];
        if (j - k >= 0) jac(k, j) += q[j - k];
      }
    const Eigen::VectorXd delta = jac.colPivHouseholderQr().solve(gap);
    if (!delta.allFinite()) return;
    std::vector<double> trial(q);
    for (int j = 0; j <= r; ++j) trial[j] -= delta(j);
    Eigen::VectorXd trial_gap;
    const double trial_err = autocorrelation_gap(p, trial, trial_gap);
    if (!(trial_err < err)) return;
    q = std::move(trial);
    gap = std::move(trial_gap);
    err = trial_err;
  }
}

}  // namespace detail

/// Minimum-phase Fejer-Riesz factor: every zero of z^r Q(z) lies in the
/// closed unit disk and q(0) > 0.
inline SpectralFactor fejer_riesz(const HermitianLaurentPoly& p, const FactorOptions& opt = {}) {
  const PositivityCertificate cert = certify_positive(p, /*strict=*/false);
  if (!cert.positive)
    throw MathError("fejer_riesz: P is negative on the unit circle (min sample " +
                    std::to_string(cert.sampled_min) + " at omega = " + std::to_string(cert.argmin) + ")");
  SpectralFactor out;
  out.certified_min = cert.certified_min;

  const int r = p.half_degree();
  if (r == 0) {
    const double p0 = p.coeff(0);
    if (p0 <= 0.0) throw MathError("fejer_riesz: P is identically zero");
    out.q_poly = LaurentPoly::constant(std::sqrt(p0));
    return out;
  }

  // z^r P(z) = sum_m p(r - m) z^m, m = 0..2r.
  std::vector<double> a(2 * static_cast<std::size_t>(r) + 1);
  for (int m = 0; m <= 2 * r; ++m) a[static_cast<std::size_t>(m)] = p.coeff(r - m);
  out.roots = polynomial_roots(a);

  std::vector<Complex> inside, outside, circle;
  for (const Complex& z : out.roots) {
    const double mod = std::abs(z);
    if (std::abs(mod - 1.0) <= opt.circle_tol) circle.push_back(z);
    else if (mod < 1.0) inside.push_back(z);
    else outside.push_back(z);
  }
  if (inside.size() != outside.size())
    throw MathError("fejer_riesz: unpaired roots (" + std::to_string(inside.size()) + " inside vs " +
                    std::to_string(outside.size()) + " outside the unit circle)");

  for (const Complex& z : inside) {
    const Complex mirror = 1.0 / std::conj(z);
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& w : outside) best = std::min(best, std::abs(w - mirror));
    out.pairing_residual = std::max(out.pairing_residual, best / std::abs(mirror));
  }
  if (out.pairing_residual > opt.pairing_tol)
    throw MathError("fejer_riesz: roots are not closed under z -> 1/conj(z) (residual " +
                    std::to_string(out.pairing_residual) + ")");

  // Circle roots: single-linkage clusters, each of even size, contribute
  // half their multiplicity at the cluster centre projected to |z| = 1.
  std::vector<int> label(circle.size(), -1);
  int clusters = 0;
  for (std::size_t i = 0; i < circle.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = clusters;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < circle.size(); ++j) {
        if (label[j] >= 0) continue;
        for (std::size_t m = 0; m < circle.size(); ++m)
          if (label[m] == clusters && std::abs(circle[j] - circle[m]) <= opt.cluster_tol) {
            label[j] = clusters;
            grew = true;
            break;
          }
      }
    }
    ++clusters;
  }
  out.selected_roots = inside;
  for (int c = 0; c < clusters; ++c) {
    Complex sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < circle.size(); ++i)
      if (label[i] == c) {
        sum += circle[i];
        ++count;
      }
    if (count % 2 != 0)
      throw MathError("fejer_riesz: root on the unit circle with odd multiplicity near " +
                      std::to_string(sum.real() / count) + (sum.imag() >= 0 ? "+" : "") +
                      std::to_string(sum.imag() / count) + "i");
    const Complex centre = sum / static_cast<double>(count);
    for (std::size_t m = 0; m < count / 2; ++m) out.selected_roots.push_back(centre / std::abs(centre));
  }
  std::ranges::sort(out.selected_roots, [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  // prod (1 - lambda w), w = z^{-1}
  std::vector<Complex> prod{1.0};
  for (const Complex& lam : out.selected_roots) {
    std::vector<Complex> next(prod.size() + 1, 0.0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k] += prod[k];
      next[k + 1] -= lam * prod[k];
    }
    prod = std::move(next);
  }
  double energy = 0.0;
  std::vector<double> q(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    q[k] = prod[k].real();
    energy += q[k] * q[k];
  }
  // Constant coefficient of Q Q(z^{-1}) is sum q(k)^2 and must equal p(0).
  const double c = std::sqrt(p.coeff(0) / energy);
  for (double& v : q) v *= c;
  detail::polish_factor(p, q);
  Eigen::VectorXd gap;
  const double rel = detail::autocorrelation_gap(p, q, gap) / std::max(1.0, p.base().max_abs_coeff());
  if (rel > opt.residual_tol)
    throw MathError("fejer_riesz: factor does not reproduce P (relative gap " + std::to_string(rel) + ")");
  out.q_poly = LaurentPoly::univariate(q, 0);
  return out;
}

/// Builds P = Q Q(z^{-1}), factors it, and returns the largest coefficient
/// gap between the recovered |Q'|^2 and P, relative to max(1, max |p(k)|).
inline double roundtrip_check(const LaurentPoly& q) {
  if (q.dim() != 1) throw DimensionError("roundtrip_check: univariate polynomial required");
  const LaurentPoly p = abs_squared(q);
  const SpectralFactor f = fejer_riesz(HermitianLaurentPoly(p));
  return max_coeff_diff(abs_squared(f.q_poly), p) / std::max(1.0, p.max_abs_coeff());
}

}  // namespace lpscale

#endif  // LPSCALE_SPECTRAL_HPP
