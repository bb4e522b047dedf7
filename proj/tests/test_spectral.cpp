#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "lpscale/spectral.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace lpscale;

namespace {

// 5/4 - (z + z^{-1})/8
LaurentPoly hat_gap() { return LaurentPoly::univariate({-0.125, 1.25, -0.125}, -1); }

}  // namespace

TEST(Hermitian, RejectsAsymmetry) {
  EXPECT_THROW(HermitianLaurentPoly(LaurentPoly::univariate({1.0, 2.0})), InvalidArgument);
  EXPECT_THROW(HermitianLaurentPoly(LaurentPoly::constant(1.0, 2)), DimensionError);
  const HermitianLaurentPoly p(hat_gap());
  EXPECT_EQ(p.half_degree(), 1);
  for (double w : {0.0, 0.4, 2.0}) EXPECT_LE(std::abs(hat_gap().eval(std::vector{w}).imag()), 1e-12);
}

TEST(CertifyPositive, Examples) {
  const auto c = certify_positive(HermitianLaurentPoly(hat_gap()), true);
  EXPECT_TRUE(c.positive);
  EXPECT_LE(c.certified_min, 1.0);
  EXPECT_GE(c.certified_min, 1.0 - 1e-6);

  const auto one = certify_positive(HermitianLaurentPoly(LaurentPoly::constant(1.0)), true);
  EXPECT_TRUE(one.positive);
  EXPECT_DOUBLE_EQ(one.certified_min, 1.0);

  const HermitianLaurentPoly touch(LaurentPoly::univariate({1.0, 2.0, 1.0}, -1));
  EXPECT_FALSE(certify_positive(touch, true).positive);
  EXPECT_TRUE(certify_positive(touch, false).positive);
  EXPECT_FALSE(certify_positive(HermitianLaurentPoly(LaurentPoly::univariate({1.0, 1.0, 1.0}, -1)), false).positive);
}

TEST(CertifyPositive, BoundIsSoundAgainstDenserGrid) {
  testsupport::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = rng.integer(1, 10);
    std::vector<double> c(static_cast<std::size_t>(2 * r + 1));
    for (int k = 0; k <= r; ++k) c[r + k] = c[r - k] = rng.uniform();
    LaurentPoly p = LaurentPoly::univariate(c, -r);
    const auto t = oracle::terms_of(p);
    // shift so the minimum sits near a random level around zero
    p = p + (rng.uniform(-0.2, 0.5) - oracle::grid_min(t, 4096));
    const auto cert = certify_positive(HermitianLaurentPoly(p), false, 1024);
    const double dense = oracle::grid_min(oracle::terms_of(p), 10 * 1024);
    EXPECT_LE(cert.certified_min, dense + 1e-15);
    EXPECT_LE(cert.certified_min, cert.sampled_min);
  }
}

TEST(CertifyPositive, StraddlingBoundIsInconclusive) {
  // (1 + cos w) * 2 lifted by 1e-13: positive, but not by a provable margin
  const HermitianLaurentPoly p(LaurentPoly::univariate({1.0, 2.0 + 1e-13, 1.0}, -1));
  EXPECT_THROW(certify_positive(p, true), InconclusiveError);
}

TEST(FejerRiesz, Examples) {
  const SpectralFactor f = fejer_riesz(HermitianLaurentPoly(hat_gap()));
  EXPECT_NEAR(f.q_poly.coeff_at(0), (2 + std::sqrt(6.0)) / 4, 1e-12);
  EXPECT_NEAR(f.q_poly.coeff_at(1), (2 - std::sqrt(6.0)) / 4, 1e-12);
  EXPECT_EQ(f.q_poly.size(), 2u);

  const SpectralFactor one = fejer_riesz(HermitianLaurentPoly(LaurentPoly::constant(1.0)));
  EXPECT_EQ(one.q_poly, LaurentPoly::constant(1.0));

  const SpectralFactor dbl = fejer_riesz(HermitianLaurentPoly(LaurentPoly::univariate({1.0, 2.0, 1.0}, -1)));
  EXPECT_NEAR(dbl.q_poly.coeff_at(0), 1.0, 1e-8);
  EXPECT_NEAR(dbl.q_poly.coeff_at(1), 1.0, 1e-8);
  EXPECT_LE(max_coeff_diff(abs_squared(dbl.q_poly), LaurentPoly::univariate({1.0, 2.0, 1.0}, -1)), 1e-8);
}

TEST(FejerRiesz, MinimumPhaseNormalization) {
  testsupport::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto coeffs = rng.stable_coeffs(rng.integer(1, 12));
    const LaurentPoly q = LaurentPoly::univariate(coeffs);
    const LaurentPoly p = abs_squared(q);
    const SpectralFactor f = fejer_riesz(HermitianLaurentPoly(p));
    const auto [lo, hi] = f.q_poly.exponent_range();
    EXPECT_GE(lo, 0);
    EXPECT_LE(hi, static_cast<int>(coeffs.size()) - 1);
    EXPECT_GT(f.q_poly.coeff_at(0), 0.0);
    for (const auto& z : f.selected_roots) EXPECT_LE(std::abs(z), 1.0 + 1e-7);
    // zeros of the returned factor itself, z^r Q(z) = sum_m q(r - m) z^m
    std::vector<double> a(static_cast<std::size_t>(hi) + 1);
    for (int m = 0; m <= hi; ++m) a[static_cast<std::size_t>(m)] = f.q_poly.coeff_at(hi - m);
    if (hi > 0) {
      for (const auto& z : polynomial_roots(a)) EXPECT_LE(std::abs(z), 1.0 + 1e-7);
    }
    EXPECT_LE(max_coeff_diff(abs_squared(f.q_poly), p), 1e-10 * std::max(1.0, p.max_abs_coeff()));
    // roots of z^r P come in pairs lambda, 1/conj(lambda)
    for (const auto& z : f.roots) {
      double best = INFINITY;
      for (const auto& w : f.roots) best = std::min(best, std::abs(w - 1.0 / std::conj(z)));
      EXPECT_LE(best, 1e-7 * std::max(1.0, std::abs(1.0 / z)));
    }
  }
}

TEST(FejerRiesz, Deterministic) {
  testsupport::Rng rng(33);
  const LaurentPoly p = abs_squared(LaurentPoly::univariate(rng.stable_coeffs(9)));
  const SpectralFactor a = fejer_riesz(HermitianLaurentPoly(p));
  const SpectralFactor b = fejer_riesz(HermitianLaurentPoly(p));
  EXPECT_EQ(a.q_poly, b.q_poly);
}

TEST(FejerRiesz, RejectsNegativePolynomial) {
  EXPECT_THROW(fejer_riesz(HermitianLaurentPoly(LaurentPoly::univariate({1.0, 1.0, 1.0}, -1))), MathError);
  EXPECT_THROW(fejer_riesz(HermitianLaurentPoly(LaurentPoly::constant(-1.0))), MathError);
}

TEST(RoundTrip, ResidualsAreSmall) {
  EXPECT_EQ(roundtrip_check(LaurentPoly::constant(1.0)), 0.0);
  const LaurentPoly bspline_factor = LaurentPoly::univariate({(2 + std::sqrt(7.0)) / 4, (2 - std::sqrt(7.0)) / 4});
  EXPECT_LE(roundtrip_check(bspline_factor), 1e-10);
  testsupport::Rng rng(34);
  for (int trial = 0; trial < 500; ++trial)
    EXPECT_LE(roundtrip_check(LaurentPoly::univariate(rng.stable_coeffs(rng.integer(0, 12)))), 1e-8);
  EXPECT_THROW(roundtrip_check(LaurentPoly::constant(1.0, 2)), DimensionError);
}

TEST(PolynomialRoots, Quadratic) {
  const std::vector<double> a{2.0, -3.0, 1.0};  // (z-1)(z-2)
  auto r = polynomial_roots(a);
  std::sort(r.begin(), r.end(), [](auto x, auto y) { return x.real() < y.real(); });
  EXPECT_NEAR(r[0].real(), 1.0, 1e-14);
  EXPECT_NEAR(r[1].real(), 2.0, 1e-14);
  EXPECT_THROW(polynomial_roots(std::vector<double>{1.0}), InvalidArgument);
}
