#ifndef LPSCALE_FAMILIES_HPP
#define LPSCALE_FAMILIES_HPP

// Built-in lowpass filters: interpolatory Deslauriers-Dubuc, B-splines and
// the hat function for integer dilation.

#include <cmath>
#include <string>

#include "lpscale/errors.hpp"
#include "lpscale/filterbank.hpp"
#include "lpscale/laurent.hpp"
#include "lpscale/refinable.hpp"

namespace lpscale {

inline constexpr int kMaxDD = 6;
inline constexpr int kMaxBspline = 8;
inline constexpr int kMaxHat = 6;

/// H(z) = sqrt2 z^{-(2k-1)} ((z + 2 + z^{-1})/4)^k P_k(-(z - 2 + z^{-1})/4),
/// supported on {0..4k-2}.
inline Filter dd_filter(int k) {
  if (k < 1 || k > kMaxDD) throw InvalidArgument("dd_filter: k must be in 1.." + std::to_string(kMaxDD));
  const LaurentPoly zp = LaurentPoly::monomial(-1, 1.0);  // z
  const LaurentPoly zm = LaurentPoly::monomial(1, 1.0);   // z^{-1}
  const LaurentPoly two = LaurentPoly::constant(2.0);
  const LaurentPoly cosq = (zp + two + zm) * 0.25;
  const LaurentPoly sinq = (zp - two + zm) * -0.25;
  LaurentPoly power = LaurentPoly::constant(1.0);
  for (int i = 0; i < k; ++i) power = power * cosq;
  LaurentPoly pk(1), xp = LaurentPoly::constant(1.0);
  double binom = 1.0;
  for (int j = 0; j < k; ++j) {
    pk += xp * binom;
    binom = binom * (k + j) / (j + 1);
    xp = xp * sinq;
  }
  const LaurentPoly h = (power * pk).shifted(2 * k - 1) * std::sqrt(2.0);
  return Filter(DilationSpec(2), h);
}

/// tau = ((1 + z^{-1})/2)^k, h = sqrt2 tau.
inline Filter bspline_filter(int k) {
  if (k < 1 || k > kMaxBspline)
    throw InvalidArgument("bspline_filter: k must be in 1.." + std::to_string(kMaxBspline));
  const LaurentPoly base = LaurentPoly::univariate({0.5, 0.5});
  LaurentPoly tau = LaurentPoly::constant(1.0);
  for (int i = 0; i < k; ++i) tau = tau * base;
  return Filter(DilationSpec(2), tau * std::sqrt(2.0));
}

/// tau = ((1 + ... + z^{-(lambda-1)}) / lambda)^2, h = sqrt(lambda) tau.
inline Filter hat_filter(int lambda) {
  if (lambda < 2 || lambda > kMaxHat)
    throw InvalidArgument("hat_filter: lambda must be in 2.." + std::to_string(kMaxHat));
  const std::vector<double> box(static_cast<std::size_t>(lambda), 1.0 / lambda);
  const LaurentPoly b = LaurentPoly::univariate(box);
  return Filter(DilationSpec(lambda), b * b * std::sqrt(static_cast<double>(lambda)));
}

inline Filter family_filter(const Family& f) {
  switch (f.kind) {
    case Family::Kind::dd: return dd_filter(f.param);
    case Family::Kind::bspline: return bspline_filter(f.param);
    case Family::Kind::hat: return hat_filter(f.param);
  }
  throw InvalidArgument("family_filter: unknown family");
}

/// "dd", "bspline" or "hat" with its parameter.
inline Family parse_family(const std::string& name, int param) {
  Family f;
  if (name == "dd") f.kind = Family::Kind::dd;
  else if (name == "bspline") f.kind = Family::Kind::bspline;
  else if (name == "hat") f.kind = Family::Kind::hat;
  else throw InvalidArgument("unknown family '" + name + "' (expected dd, bspline or hat)");
  f.param = param;
  family_filter(f);  // range check
  return f;
}

}  // namespace lpscale

#endif  // LPSCALE_FAMILIES_HPP
