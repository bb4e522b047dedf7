#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lpscale/families.hpp"
#include "lpscale/io.hpp"
#include "lpscale/refinable.hpp"
#include "support/oracles.hpp"

using namespace lpscale;

namespace {

RefinementMask tight_mask(const Filter& h) { return mask_of(construct_tight(h).lowpass); }

}  // namespace

TEST(Cascade, HatIsExactOnTheGrid) {
  for (int lambda : {2, 3}) {
    const RefinableProfile p = cascade(mask_of(hat_filter(lambda)), lambda == 2 ? 8 : 5);
    EXPECT_DOUBLE_EQ(p.support().second, 2.0);
    EXPECT_FALSE(p.used_subdivision_fallback());
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p.samples()[i], oracle::hat(p.x(i)), 1e-10) << p.x(i);
  }
}

TEST(Cascade, HaarIsTheBox) {
  const Filter haar(DilationSpec(2), LaurentPoly::univariate({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}));
  const RefinableProfile p = cascade(mask_of(haar), 6);
  EXPECT_TRUE(p.used_subdivision_fallback());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_NEAR(p.samples()[i], 1.0, 1e-14);
  EXPECT_LE(p.partition_of_unity_error(), 1e-14);
}

TEST(Cascade, QuadraticBspline) {
  const RefinableProfile p = cascade(mask_of(bspline_filter(3)), 7);
  EXPECT_DOUBLE_EQ(p.support().second, 3.0);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p.samples()[i], oracle::bspline3(p.x(i)), 1e-10);
  EXPECT_NEAR(p.mass(), 1.0, 1e-12);
  EXPECT_NEAR(p.value(1.5), 0.75, 1e-12);
}

TEST(Cascade, ScaledProfilesAreRefinable) {
  struct Case {
    Filter h;
    double support_bound;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= 3; ++k) cases.push_back({dd_filter(k), 8.0 * k - 4});
  for (int k = 1; k <= 4; ++k) cases.push_back({bspline_filter(k), 2.0 * k});
  cases.push_back({hat_filter(3), 4.0});
  for (const auto& c : cases) {
    const RefinableProfile p = cascade(tight_mask(c.h), c.h.dilation().lambda() == 2 ? 9 : 6);
    EXPECT_LE(p.support().second, c.support_bound + 1e-12);
    EXPECT_EQ(p.mass_outside(0.0, c.support_bound), 0.0);
    EXPECT_LE(refinement_residual(p), 1e-6);
    EXPECT_LE(p.partition_of_unity_error(), 1e-6);
  }
}

TEST(Cascade, ResidualDetectsWrongMask) {
  const RefinableProfile p = cascade(tight_mask(hat_filter(2)), 8);
  RefinementMask other = *p.mask();
  other.tau = other.tau + LaurentPoly::univariate({0.05, -0.1, 0.05});
  const RefinableProfile q(p.lambda(), p.level(), p.samples(), other, p.support().second);
  EXPECT_GT(refinement_residual(q), 1e-3);
  EXPECT_THROW(refinement_residual(RefinableProfile(2, 1, {0.0, 1.0, 0.0})), InvalidArgument);
}

TEST(Cascade, RejectsMaskWithoutAccuracy) {
  const RefinementMask m{LaurentPoly::univariate({0.5, 0.0, 0.5}), DilationSpec(2)};
  EXPECT_THROW(cascade(m, 4), MathError);
  EXPECT_THROW(cascade(mask_of(hat_filter(2)), -1), InvalidArgument);
}

TEST(Smoothness, ExampleBounds) {
  const Family dd1 = parse_family("dd", 1);
  const SmoothnessEstimate a = smoothness_bound(family_beta(dd1), *construct_tight(dd_filter(1)).factor, 2);
  EXPECT_NEAR(a.alpha, 2.0 - std::log2(std::sqrt(6.0) / 2) - 1.0, 1e-9);
  EXPECT_TRUE(a.l2);

  const SmoothnessEstimate b = smoothness_bound(family_beta(parse_family("bspline", 3)),
                                                *construct_tight(bspline_filter(3)).factor, 2);
  EXPECT_GE(b.alpha, 1.5);

  const SmoothnessEstimate c =
      smoothness_bound(family_beta(parse_family("hat", 3)), *construct_tight(hat_filter(3)).factor, 3);
  EXPECT_GE(c.alpha, 1.0 - 0.5 * std::log(5.0 / 3.0) / std::log(3.0));
  // the sampled maximum can only undercut the certified one
  for (const auto& e : {a, b, c}) EXPECT_LE(e.xi_sampled, e.xi_sup * (1 + 1e-12));
}

TEST(Smoothness, FormulaAndErrors) {
  // |m| = 2 on the circle: alpha = beta - 1 - 1
  const SmoothnessEstimate e = smoothness_bound(3.0, LaurentPoly::constant(2.0), 2);
  EXPECT_NEAR(e.alpha, 1.0, 1e-12);
  EXPECT_THROW(smoothness_bound(1.0, LaurentPoly(1), 2), MathError);
  EXPECT_THROW(smoothness_bound(1.0, LaurentPoly::constant(1.0), 1), InvalidArgument);
}

TEST(Smoothness, FamilyBeta) {
  EXPECT_DOUBLE_EQ(family_beta(parse_family("dd", 1)), 2.0);
  // P_2(x) = 1 + 2x, so beta = 4 - log2(5/2)
  EXPECT_NEAR(family_beta(parse_family("dd", 2)), 4.0 - std::log2(2.5), 1e-15);
  EXPECT_DOUBLE_EQ(family_beta(parse_family("bspline", 5)), 5.0);
  EXPECT_DOUBLE_EQ(family_beta(parse_family("hat", 4)), 2.0);
  EXPECT_NEAR(dd_polynomial(3, 0.5), 1 + 3 * 0.5 + 6 * 0.25, 1e-15);
}

TEST(Stability, KnownFunctions) {
  const Filter haar(DilationSpec(2), LaurentPoly::univariate({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}));
  const StabilityReport box = stability_probe(cascade(mask_of(haar), 8));
  EXPECT_TRUE(box.stable);
  EXPECT_GT(box.min_sum, 0.9);

  // sum |hat^(w + 2 pi j)|^2 = (2 + cos w) / 3, minimum 1/3 at pi
  const StabilityReport hat = stability_probe(cascade(mask_of(hat_filter(2)), 8));
  EXPECT_TRUE(hat.stable);
  EXPECT_NEAR(hat.min_sum, 1.0 / 3.0, 1e-2);
  EXPECT_NEAR(std::abs(hat.argmin), std::numbers::pi, 1e-12);

  // half the box on [0, 2) has a periodic zero at pi
  const int level = 8;
  std::vector<double> wide(2 * 256 + 1, 0.5);
  wide.back() = 0.0;
  const StabilityReport bad = stability_probe(RefinableProfile(2, level, wide));
  EXPECT_FALSE(bad.stable);
  EXPECT_LT(bad.min_sum, 1e-3);
  EXPECT_THROW(stability_probe(RefinableProfile(2, 1, {1.0}), 1), InvalidArgument);
}

TEST(Profile, CsvFormat) {
  const RefinableProfile p = cascade(mask_of(hat_filter(2)), 2);
  std::ostringstream os;
  io::write_csv(os, p);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "x,value");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    ASSERT_NE(comma, std::string::npos);
    EXPECT_DOUBLE_EQ(std::stod(line.substr(0, comma)), p.x(rows));
    EXPECT_DOUBLE_EQ(std::stod(line.substr(comma + 1)), p.samples()[rows]);
    ++rows;
  }
  EXPECT_EQ(rows, p.size());
  EXPECT_EQ(rows, 9u);
}
