#ifndef LPSCALE_FILTERBANK_HPP
#define LPSCALE_FILTERBANK_HPP

// Filters on Z^n with an integer dilation, polyphase representation,
// refinement masks, accuracy and the tight bank construction
//   A(z) = [m_H(z) H(z), I - H(z) H*(z)].

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpscale/detail/int_linalg.hpp"
#include "lpscale/errors.hpp"
#include "lpscale/laurent.hpp"
#include "lpscale/lp2.hpp"
#include "lpscale/spectral.hpp"

namespace lpscale {

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Dilation matrix, coset representatives of Z^n / Lambda Z^n and the dual
/// offsets 2 pi (Lambda^T)^{-1} Z^n / 2 pi Z^n.
class DilationSpec {
 public:
  DilationSpec() : DilationSpec(2) {}

  /// 1-D dilation by lambda with cosets {0, ..., lambda - 1}.
  explicit DilationSpec(int lambda) : DilationSpec(IntMatrix::scalar(lambda), default_cosets(lambda)) {}

  DilationSpec(IntMatrix lambda, std::vector<Exponent> cosets)
      : lambda_(std::move(lambda)), cosets_(std::move(cosets)) {
    const std::size_t n = lambda_.rows();
    if (n == 0 || lambda_.cols() != n) throw DimensionError("DilationSpec: dilation matrix must be square");
    det_ = determinant(lambda_);
    const std::int64_t q = det_ < 0 ? -det_ : det_;
    if (q < 2) throw InvalidArgument("DilationSpec: |det Lambda| must be at least 2");
    if (cosets_.size() != static_cast<std::size_t>(q))
      throw InvalidArgument("DilationSpec: expected " + std::to_string(q) + " coset representatives, got " +
                            std::to_string(cosets_.size()));
    for (const auto& nu : cosets_)
      if (nu.size() != n) throw DimensionError("DilationSpec: coset representative of wrong length");
    if (std::ranges::any_of(cosets_.front(), [](int v) { return v != 0; }))
      throw InvalidArgument("DilationSpec: first coset representative must be 0");
    adj_ = adjugate(lambda_);
    for (std::size_t i = 0; i < cosets_.size(); ++i)
      for (std::size_t j = i + 1; j < cosets_.size(); ++j) {
        Exponent diff(n);
        for (std::size_t d = 0; d < n; ++d) diff[d] = cosets_[i][d] - cosets_[j][d];
        if (lattice_quotient(diff))
          throw InvalidArgument("DilationSpec: coset representatives " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide mod Lambda");
      }
    build_dual();
  }

  std::size_t dim() const { return lambda_.rows(); }
  std::size_t q() const { return cosets_.size(); }
  const IntMatrix& matrix() const { return lambda_; }
  const std::vector<Exponent>& cosets() const { return cosets_; }
  const std::vector<std::vector<double>>& dual_cosets() const { return dual_; }

  /// The scalar dilation of a 1-D spec.
  int lambda() const {
    if (dim() != 1) throw DimensionError("DilationSpec::lambda: only defined for n = 1");
    return static_cast<int>(lambda_(0, 0));
  }

  /// x with Lambda x = v, if integral.
  std::optional<Exponent> lattice_quotient(std::span<const int> v) const {
    const auto w = adj_.apply(v);
    Exponent x(w.size());
    for (std::size_t d = 0; d < w.size(); ++d) {
      if (w[d] % det_ != 0) return std::nullopt;
      x[d] = static_cast<int>(w[d] / det_);
    }
    return x;
  }

  /// Writes k = Lambda k' + nu_j; returns j and k'.
  std::pair<std::size_t, Exponent> split(std::span<const int> k) const {
    Exponent diff(k.size());
    for (std::size_t j = 0; j < cosets_.size(); ++j) {
      for (std::size_t d = 0; d < k.size(); ++d) diff[d] = k[d] - cosets_[j][d];
      if (auto x = lattice_quotient(diff)) return {j, std::move(*x)};
    }
    throw InvalidArgument("DilationSpec::split: index not covered by the coset representatives");
  }

  /// max over gamma of |sum_nu e^{i gamma.nu} - q [gamma = 0]|.
  double orthogonality_defect() const {
    double worst = 0.0;
    for (std::size_t g = 0; g < dual_.size(); ++g) {
      Complex s = 0.0;
      for (const auto& nu : cosets_) {
        double ph = 0.0;
        for (std::size_t d = 0; d < nu.size(); ++d) ph += dual_[g][d] * nu[d];
        s += std::polar(1.0, ph);
      }
      worst = std::max(worst, std::abs(s - (g == 0 ? static_cast<double>(q()) : 0.0)));
    }
    return worst;
  }

  bool operator==(const DilationSpec& o) const { return lambda_ == o.lambda_ && cosets_ == o.cosets_; }

 private:
  static std::vector<Exponent> default_cosets(int lambda) {
    if (lambda < 2) throw InvalidArgument("DilationSpec: lambda must be at least 2");
    std::vector<Exponent> c;
    for (int j = 0; j < lambda; ++j) c.push_back({j});
    return c;
  }

  // (Lambda^T)^{-1} m = adj(Lambda)^T m / det; residues of the numerator
  // mod |det| label the classes, enumerated over m in [0, q)^n.
  void build_dual() {
    const std::size_t n = dim();
    const std::int64_t q = static_cast<std::int64_t>(this->q());
    const IntMatrix adj_t = adj_.transposed();
    const std::int64_t sgn = det_ < 0 ? -1 : 1;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<int> m(n, 0);
    for (;;) {
      auto num = adj_t.apply(m);
      for (auto& v : num) v = detail::floor_mod(sgn * v, q);
      if (seen.insert(num).second) {
        std::vector<double> gamma(n);
        for (std::size_t d = 0; d < n; ++d) {
          double g = 2.0 * std::numbers::pi * static_cast<double>(num[d]) / static_cast<double>(q);
          if (g > std::numbers::pi + 1e-12) g -= 2.0 * std::numbers::pi;
          gamma[d] = g;
        }
        dual_.push_back(std::move(gamma));
        if (dual_.size() == this->q()) break;
      }
      std::size_t d = 0;
      while (d < n && ++m[d] == q) m[d++] = 0;
      if (d == n) break;
    }
    if (dual_.size() != this->q()) throw MathError("DilationSpec: dual coset enumeration incomplete");
    // The zero class is found first since m starts at 0.
  }

  IntMatrix lambda_;
  std::vector<Exponent> cosets_;
  IntMatrix adj_;
  std::int64_t det_ = 0;
  std::vector<std::vector<double>> dual_;
};

enum class FilterKind { lowpass, highpass, neither };

inline const char* to_string(FilterKind k) {
  switch (k) {
    case FilterKind::lowpass: return "lowpass";
    case FilterKind::highpass: return "highpass";
    default: return "neither";
  }
}

/// h : Z^n -> R stored as its z-transform H(z) = sum h(k) z^{-k}.
class Filter {
 public:
  static constexpr double kKindTol = 1e-10;

  Filter() = default;
  Filter(DilationSpec dilation, LaurentPoly coeffs) : dilation_(std::move(dilation)), coeffs_(std::move(coeffs)) {
    if (coeffs_.dim() != dilation_.dim())
      throw DimensionError("Filter: coefficient dimension differs from the dilation");
  }

  const DilationSpec& dilation() const { return dilation_; }
  const LaurentPoly& coeffs() const { return coeffs_; }
  double at(std::span<const int> k) const { return coeffs_.coeff_at(k); }
  double at(int k) const { return coeffs_.coeff_at(k); }
  double sum() const { return coeffs_.coeff_sum(); }

  FilterKind kind(double tol = kKindTol) const {
    const double s = sum();
    if (std::abs(s - std::sqrt(static_cast<double>(dilation_.q()))) <= tol) return FilterKind::lowpass;
    if (std::abs(s) <= tol) return FilterKind::highpass;
    return FilterKind::neither;
  }

  /// 1-D taps h(lo..hi) with their first index.
  std::pair<int, std::vector<double>> taps() const {
    if (coeffs_.dim() != 1) throw DimensionError("Filter::taps: univariate filter required");
    if (coeffs_.is_zero()) return {0, {}};
    const auto [lo, hi] = coeffs_.exponent_range();
    std::vector<double> t(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      t[static_cast<std::size_t>(coeffs_.exponent(i)[0] - lo)] = coeffs_.coeff(i);
    return {lo, t};
  }

  bool operator==(const Filter&) const = default;

 private:
  DilationSpec dilation_;
  LaurentPoly coeffs_;
};

/// tau(omega) = H(e^{i omega}) / sqrt(q).
struct RefinementMask {
  LaurentPoly tau;
  DilationSpec dilation;

  Complex eval(std::span<const double> omega) const { return tau.eval(omega); }
  Complex eval(double omega) const { return tau.eval(std::span<const double>(&omega, 1)); }
};

inline PolyphaseVector polyphase_decompose(const Filter& h) {
  const DilationSpec& d = h.dilation();
  std::vector<std::vector<std::pair<Exponent, double>>> parts(d.q());
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    auto [j, kk] = d.split(h.coeffs().exponent(i));
    parts[j].emplace_back(std::move(kk), h.coeffs().coeff(i));
  }
  std::vector<LaurentPoly> comps;
  for (auto& p : parts) comps.push_back(LaurentPoly::from_terms(d.dim(), p));
  return PolyphaseVector(std::move(comps));
}

/// H(z) = sum_nu z^{-nu} H_nu(z^Lambda); zero components are allowed.
inline Filter filter_from_components(std::span<const LaurentPoly> comps, const DilationSpec& d) {
  if (comps.size() != d.q())
    throw DimensionError("polyphase_reconstruct: " + std::to_string(comps.size()) + " components for q = " +
                         std::to_string(d.q()));
  LaurentPoly acc(d.dim());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].dim() != d.dim()) throw DimensionError("polyphase_reconstruct: component dimension mismatch");
    acc += comps[j].dilate(d.matrix()).shifted(d.cosets()[j]);
  }
  return Filter(d, std::move(acc));
}

inline Filter polyphase_reconstruct(const PolyphaseVector& h, const DilationSpec& d) {
  return filter_from_components(h.entries(), d);
}

inline RefinementMask mask_of(const Filter& h) {
  if (h.kind() != FilterKind::lowpass)
    throw InvalidArgument("mask_of: filter is not lowpass (coefficient sum " + std::to_string(h.sum()) + ")");
  return {h.coeffs() * (1.0 / std::sqrt(static_cast<double>(h.dilation().q()))), h.dilation()};
}

/// Positive accuracy: H_nu(1) = 1/sqrt(q) for every coset.
inline bool has_positive_accuracy(const PolyphaseVector& h, double tol = 1e-10) {
  const double target = 1.0 / std::sqrt(static_cast<double>(h.q()));
  return std::ranges::all_of(h.entries(), [&](const LaurentPoly& p) { return std::abs(p.coeff_sum() - target) <= tol; });
}
inline bool has_positive_accuracy(const Filter& h, double tol = 1e-10) {
  return has_positive_accuracy(polyphase_decompose(h), tol);
}

/// Largest N with d^m tau / d omega^m (gamma) = 0 for m < N at every
/// nonzero dual offset. Univariate only.
inline int accuracy_order(const RefinementMask& m, int max_order = 64) {
  if (m.tau.dim() != 1) throw DimensionError("accuracy_order: univariate mask required");
  if (m.tau.is_zero()) return 0;
  const auto& dual = m.dilation.dual_cosets();
  for (int order = 0; order <= max_order; ++order) {
    // d^order/dw^order of c e^{-ikw} is c (-ik)^order e^{-ikw}
    double scale = 0.0;
    for (std::size_t i = 0; i < m.tau.size(); ++i)
      scale += std::abs(m.tau.coeff(i)) * std::pow(std::abs(m.tau.exponent(i)[0]), order);
    const double tol = 1e-8 * std::max(scale, 1e-300);
    for (std::size_t g = 1; g < dual.size(); ++g) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m.tau.size(); ++i) {
        const int k = m.tau.exponent(i)[0];
        s += m.tau.coeff(i) * std::pow(Complex(0.0, -static_cast<double>(k)), order) *
             std::polar(1.0, -k * dual[g][0]);
      }
      if (std::abs(s) > tol) return order;
    }
  }
  return max_order;
}

struct TightnessCertificate {
  double paraunitary_residual = 0.0;  ///< coefficient residual of A A* - I
  double sampled_residual = 0.0;
  double mask_residual = 0.0;         ///< |tau~ - m_H(z^Lambda) tau|
  double highpass_sum_max = 0.0;
  double factor_residual = 0.0;       ///< |m_H m_H* - (2 - H*H)|
  double certified_min = 0.0;         ///< lower bound of 2 - H*H (1-D)
  int accuracy_before = -1;           ///< -1: not computed (n >= 2)
  int accuracy_after = -1;
  bool positive_accuracy_after = false;
  std::pair<int, int> support_before{0, 0};
  std::pair<int, int> support_after{0, 0};
  bool support_ok = true;
};

struct WaveletBank {
  Filter lowpass;
  std::vector<Filter> highpass;
  bool tight = false;
  std::optional<PolyphaseVector> source;  ///< H
  std::optional<LaurentPoly> factor;      ///< m_H
  TightnessCertificate certificate;

  /// [m_H H, I - H H*] when constructed, otherwise rebuilt from the filters.
  LaurentMatrix polyphase() const {
    const DilationSpec& d = lowpass.dilation();
    LaurentMatrix a(d.q(), 1 + highpass.size(), d.dim());
    auto put = [&](const Filter& f, std::size_t col) {
      std::vector<std::vector<std::pair<Exponent, double>>> parts(d.q());
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        auto [j, kk] = d.split(f.coeffs().exponent(i));
        parts[j].emplace_back(std::move(kk), f.coeffs().coeff(i));
      }
      for (std::size_t j = 0; j < d.q(); ++j) a(j, col) = LaurentPoly::from_terms(d.dim(), parts[j]);
    };
    put(lowpass, 0);
    for (std::size_t c = 0; c < highpass.size(); ++c) put(highpass[c], c + 1);
    return a;
  }
};

struct ConstructOptions {
  double tol = 1e-10;             ///< paraunitarity and highpass sums
  std::size_t positivity_grid = 0;  ///< 0: default_positivity_grid
  TorusGrid grid{};               ///< sampled paraunitarity check
  bool strict = true;             ///< require a certified 2 - H*H > 0
};

namespace detail {

inline void check_lowpass_input(const Filter& h, const PolyphaseVector& hv) {
  if (h.kind() != FilterKind::lowpass)
    throw InvalidArgument("construct_tight: filter is not lowpass (coefficient sum " + std::to_string(h.sum()) +
                          ", expected sqrt(q))");
  if (!has_positive_accuracy(hv))
    throw InvalidArgument("construct_tight: filter lacks positive accuracy (H_nu(1) != 1/sqrt(q))");
}

inline WaveletBank assemble_bank(const Filter& h, const PolyphaseVector& hv, const LaurentPoly& m_h,
                                 const ConstructOptions& opt, TightnessCertificate cert) {
  const DilationSpec& d = h.dilation();
  WaveletBank bank;
  const PolyphaseVector scaled = hv.scaled(m_h);
  bank.lowpass = polyphase_reconstruct(scaled, d);
  const LaurentMatrix comp = lp2_complement(hv);
  for (std::size_t c = 0; c < d.q(); ++c) {
    bank.highpass.push_back(filter_from_components(comp.col(c), d));
    cert.highpass_sum_max = std::max(cert.highpass_sum_max, std::abs(bank.highpass.back().sum()));
  }

  LaurentMatrix a(d.q(), d.q() + 1, d.dim());
  for (std::size_t r = 0; r < d.q(); ++r) {
    a(r, 0) = scaled[r];
    for (std::size_t c = 0; c < d.q(); ++c) a(r, c + 1) = comp(r, c);
  }
  const ParaunitaryReport pr = is_paraunitary(a, opt.grid, opt.tol);
  cert.paraunitary_residual = pr.polynomial_residual;
  cert.sampled_residual = pr.sampled_residual;

  const double rq = 1.0 / std::sqrt(static_cast<double>(d.q()));
  const LaurentPoly tau_new = bank.lowpass.coeffs() * rq;
  cert.mask_residual = max_coeff_diff(tau_new, m_h.dilate(d.matrix()) * (h.coeffs() * rq));
  cert.positive_accuracy_after = has_positive_accuracy(scaled);

  if (d.dim() == 1) {
    cert.accuracy_before = accuracy_order({h.coeffs() * rq, d});
    cert.accuracy_after = accuracy_order({tau_new, d});
    cert.support_before = h.coeffs().exponent_range();
    cert.support_after = bank.lowpass.coeffs().exponent_range();
    cert.support_ok = cert.support_after.first >= 0 && cert.support_after.second <= 2 * cert.support_before.second;
  }

  bank.tight = pr.paraunitary && cert.highpass_sum_max <= opt.tol;
  bank.source = hv;
  bank.factor = m_h;
  bank.certificate = cert;
  return bank;
}

}  // namespace detail

/// Shift a 1-D filter so its support starts at 0.
inline Filter normalized(const Filter& h) {
  if (h.coeffs().dim() != 1 || h.coeffs().is_zero()) return h;
  return Filter(h.dilation(), h.coeffs().shifted(-h.coeffs().exponent_range().first));
}

/// 1-D construction: m_H is the minimum-phase Fejer-Riesz factor of 2 - H*H.
inline WaveletBank construct_tight(const Filter& input, const ConstructOptions& opt = {}) {
  if (input.dilation().dim() != 1)
    throw DimensionError("construct_tight: multivariate filters need a supplied factor m_H");
  const Filter h = normalized(input);
  const PolyphaseVector hv = polyphase_decompose(h);
  detail::check_lowpass_input(h, hv);

  const LaurentPoly b0 = LaurentPoly::constant(2.0) - hv.norm_squared();
  const HermitianLaurentPoly p(b0);
  const PositivityCertificate pos = certify_positive(p, opt.strict, opt.positivity_grid);
  if (!pos.positive)
    throw MathError("construct_tight: 2 - H*H is not positive on the unit circle (certified bound " +
                    std::to_string(pos.certified_min) + ", minimum sample at omega = " +
                    std::to_string(pos.argmin) + ")");
  const SpectralFactor f = fejer_riesz(p);

  TightnessCertificate cert;
  cert.certified_min = pos.certified_min;
  cert.factor_residual = max_coeff_diff(abs_squared(f.q_poly), b0);
  return detail::assemble_bank(h, hv, f.q_poly, opt, cert);
}

/// Construction with a caller-supplied factor, any dimension.
inline WaveletBank construct_tight(const Filter& input, const LaurentPoly& m_h, const ConstructOptions& opt = {},
                                   double factor_tol = 1e-9) {
  const Filter h = normalized(input);
  const PolyphaseVector hv = polyphase_decompose(h);
  detail::check_lowpass_input(h, hv);
  if (m_h.dim() != h.dilation().dim()) throw DimensionError("construct_tight: m_H dimension mismatch");

  const LaurentPoly b0 = LaurentPoly::constant(2.0, hv.dim()) - hv.norm_squared();
  TightnessCertificate cert;
  cert.factor_residual = max_coeff_diff(abs_squared(m_h), b0);
  if (cert.factor_residual > factor_tol)
    throw MathError("construct_tight: supplied m_H does not satisfy |m_H|^2 = 2 - H*H (residual " +
                    std::to_string(cert.factor_residual) + ")");
  if (hv.dim() == 1) {
    const PositivityCertificate pos = certify_positive(HermitianLaurentPoly(b0), false, opt.positivity_grid);
    cert.certified_min = pos.certified_min;
  } else {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < opt.grid.size(hv.dim()); ++i)
      lo = std::min(lo, b0.eval(opt.grid.point(i, hv.dim())).real());
    cert.certified_min = lo;  // sampled only
  }
  if (cert.certified_min <= 0.0 && opt.strict)
    throw MathError("construct_tight: 2 - H*H is not positive on the sampled torus (min " +
                    std::to_string(cert.certified_min) + ")");
  return detail::assemble_bank(h, hv, m_h, opt, cert);
}

struct AutocorrelationReport {
  double max_discrepancy = 0.0;
  std::vector<double> worst_omega;
  double max_value = 0.0;  ///< max of H*H(e^{i Lambda^T omega}) over the grid
  std::size_t points = 0;
};

/// Compares H*H at Lambda^T omega with sum_gamma |tau(omega + gamma)|^2.
inline AutocorrelationReport mask_autocorrelation_sum(const Filter& h, const TorusGrid& grid = {}) {
  const RefinementMask m = mask_of(h);
  const LaurentPoly hh = polyphase_decompose(h).norm_squared();
  const DilationSpec& d = h.dilation();
  const std::size_t n = d.dim();
  const IntMatrix lt = d.matrix().transposed();
  AutocorrelationReport rep;
  rep.points = grid.size(n);
  std::vector<double> w2(n), shifted(n);
  for (std::size_t i = 0; i < rep.points; ++i) {
    const TorusPoint t = grid.point(i, n);
    for (std::size_t r = 0; r < n; ++r) {
      w2[r] = 0.0;
      for (std::size_t c = 0; c < n; ++c) w2[r] += static_cast<double>(lt(r, c)) * t.omega(c);
    }
    const double lhs = hh.eval(w2).real();
    double rhs = 0.0;
    for (const auto& g : d.dual_cosets()) {
      for (std::size_t r = 0; r < n; ++r) shifted[r] = t.omega(r) + g[r];
      rhs += std::norm(m.eval(shifted));
    }
    rep.max_value = std::max(rep.max_value, lhs);
    const double diff = std::abs(lhs - rhs);
    if (i == 0 || diff > rep.max_discrepancy) {
      rep.max_discrepancy = diff;
      rep.worst_omega.assign(t.omega().begin(), t.omega().end());
    }
  }
  return rep;
}

/// Periodic analysis by the adjoint followed by synthesis; returns the
/// reconstructed signal.
inline std::vector<double> analyze_synthesize(const WaveletBank& bank, std::span<const double> x) {
  const DilationSpec& d = bank.lowpass.dilation();
  if (d.dim() != 1) throw DimensionError("simulate_pr: univariate bank required");
  const auto lambda = static_cast<std::int64_t>(std::abs(d.lambda()));
  const auto len = static_cast<std::int64_t>(x.size());
  if (len == 0 || len % lambda != 0)
    throw InvalidArgument("simulate_pr: signal length must be a positive multiple of lambda");
  const std::int64_t blocks = len / lambda;
  std::vector<double> y(x.size(), 0.0);
  std::vector<const Filter*> filters{&bank.lowpass};
  for (const auto& f : bank.highpass) filters.push_back(&f);
  std::vector<double> c(static_cast<std::size_t>(blocks));
  for (const Filter* f : filters) {
    const LaurentPoly& h = f->coeffs();
    for (std::int64_t m = 0; m < blocks; ++m) {
      double acc = 0.0;
      for (std::size_t i = 0; i < h.size(); ++i)
        acc += h.coeff(i) * x[static_cast<std::size_t>(detail::floor_mod(lambda * m + h.exponent(i)[0], len))];
      c[static_cast<std::size_t>(m)] = acc;
    }
    for (std::int64_t m = 0; m < blocks; ++m)
      for (std::size_t i = 0; i < h.size(); ++i)
        y[static_cast<std::size_t>(detail::floor_mod(lambda * m + h.exponent(i)[0], len))] +=
            c[static_cast<std::size_t>(m)] * h.coeff(i);
  }
  return y;
}

/// Max |x - y| after analysis and synthesis.
inline double simulate_pr(const WaveletBank& bank, std::span<const double> x) {
  const auto y = analyze_synthesize(bank, x);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::abs(x[i] - y[i]));
  return err;
}

}  // namespace lpscale

#endif  // LPSCALE_FILTERBANK_HPP
