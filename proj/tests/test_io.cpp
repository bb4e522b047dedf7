#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

#include "lpscale/families.hpp"
#include "lpscale/io.hpp"
#include "support/random.hpp"

using namespace lpscale;
using io::json;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// serialize, print, parse
json through_text(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST(Json, PolynomialRoundTripIsBitExact) {
  testsupport::Rng rng(51);
  for (std::size_t dim = 1; dim <= 3; ++dim)
    for (int trial = 0; trial < 20; ++trial) {
      const LaurentPoly p = rng.poly(dim, 5, 8) * rng.uniform(1e-8, 1e8);
      const LaurentPoly back = io::poly_from_json(through_text(io::to_json(p)));
      ASSERT_EQ(back.size(), p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_TRUE(std::ranges::equal(back.exponent(i), p.exponent(i)));
        EXPECT_TRUE(same_bits(back.coeff(i), p.coeff(i)));
      }
    }
  const double third = 1.0 / 3.0;
  EXPECT_TRUE(same_bits(io::poly_from_json(through_text(io::to_json(LaurentPoly::constant(third)))).coeff_at(0), third));
}

TEST(Json, StructuresRoundTrip) {
  testsupport::Rng rng(52);
  const PolyphaseVector h = rng.polyphase(3, 2, 2);
  EXPECT_EQ(io::polyphase_from_json(through_text(io::to_json(h))), h);

  const LaurentMatrix m = build_lp2(h).matrix();
  EXPECT_EQ(max_coeff_diff(io::matrix_from_json(through_text(io::to_json(m))), m), 0.0);

  const DilationSpec qx(IntMatrix{{1, 1}, {1, -1}}, {{0, 0}, {1, 0}});
  EXPECT_EQ(io::dilation_from_json(through_text(io::dilation_json(qx))), qx);
  EXPECT_EQ(io::dilation_from_json(json{{"lambda", 3}}), DilationSpec(3));

  const Filter f = dd_filter(2);
  const Filter g = io::filter_from_json(through_text(io::to_json(f)));
  EXPECT_EQ(g, f);

  const LaurentPoly u = LaurentPoly::univariate({1.5, 0.0, -2.0}, -1);
  EXPECT_EQ(io::univariate_from_json(through_text(io::univariate_json(u))), u);
}

TEST(Json, BankRoundTrip) {
  const WaveletBank bank = construct_tight(hat_filter(3));
  const json j = through_text(io::to_json(bank));
  EXPECT_TRUE(j.contains("certificate"));
  const WaveletBank back = io::bank_from_json(j);
  EXPECT_EQ(back.lowpass, bank.lowpass);
  ASSERT_EQ(back.highpass.size(), bank.highpass.size());
  for (std::size_t i = 0; i < bank.highpass.size(); ++i) EXPECT_EQ(back.highpass[i], bank.highpass[i]);
  ASSERT_TRUE(back.factor && back.source);
  EXPECT_EQ(*back.factor, *bank.factor);
  EXPECT_EQ(*back.source, *bank.source);
  EXPECT_TRUE(back.tight);
  testsupport::Rng rng(53);
  EXPECT_LE(simulate_pr(back, rng.signal(81)), 1e-9);
}

TEST(Json, FilterAcceptsIntegerAndArrayIndices) {
  const Filter a = io::filter_from_json(json::parse(R"({"lambda": 2, "coeffs": [{"k": 0, "v": 0.5}, {"k": [1], "v": 0.5}]})"));
  EXPECT_DOUBLE_EQ(a.at(1), 0.5);
  const Filter b = io::filter_from_json(json::parse(
      R"({"lambda": [[1, 1], [1, -1]], "cosets": [[0, 0], [1, 0]], "coeffs": [{"k": [1, 0], "v": 2.0}]})"));
  EXPECT_DOUBLE_EQ(b.at(std::vector<int>{1, 0}), 2.0);
}

TEST(Json, MalformedInputIsRejected) {
  const char* bad[] = {
      R"({"terms": []})",
      R"({"dim": "two", "terms": []})",
      R"({"dim": 1, "terms": {"k": 0}})",
      R"({"dim": 1, "terms": [{"k": 0.5, "c": 1}]})",
      R"({"dim": 2, "terms": [{"k": [1], "c": 1}]})",
      R"({"dim": 1, "terms": [{"k": 0, "c": "x"}]})",
      R"({"dim": 0, "terms": []})",
  };
  for (const char* text : bad) EXPECT_THROW(io::poly_from_json(json::parse(text)), InvalidArgument) << text;

  EXPECT_THROW(io::filter_from_json(json::parse(R"({"coeffs": []})")), InvalidArgument);
  EXPECT_THROW(io::filter_from_json(json::parse(R"({"lambda": 2, "coeffs": []})")), InvalidArgument);
  EXPECT_THROW(io::filter_from_json(json::parse(R"({"lambda": 2.5, "coeffs": [{"k": 0, "v": 1}]})")), InvalidArgument);
  EXPECT_THROW(io::filter_from_json(json::parse(R"({"lambda": 1, "coeffs": [{"k": 0, "v": 1}]})")), InvalidArgument);
  EXPECT_THROW(io::filter_from_json(json::parse(R"({"lambda": [[1, 1], [1]], "cosets": [], "coeffs": []})")),
               InvalidArgument);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows": 2, "cols": 1, "entries": [[{"dim": 1, "terms": []}]]})")),
               InvalidArgument);
  EXPECT_THROW(io::polyphase_from_json(json::parse(R"({"q": 3, "entries": [{"dim": 1, "terms": [{"k": [0], "c": 1}]},
                                                                          {"dim": 1, "terms": [{"k": [0], "c": 1}]}]})")),
               InvalidArgument);
  EXPECT_THROW(io::univariate_from_json(json::parse(R"({"coeffs": 3})")), InvalidArgument);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InvalidArgument);
}

TEST(Signal, ReadWrite) {
  std::istringstream in("# header\n1.5\n\n-2,ignored\n  3e-3\n");
  const auto x = io::read_signal(in);
  EXPECT_EQ(x, (std::vector<double>{1.5, -2.0, 3e-3}));
  std::ostringstream out;
  io::write_signal(out, {0.1, 1.0 / 3.0});
  std::istringstream back(out.str());
  const auto y = io::read_signal(back);
  EXPECT_TRUE(same_bits(y[0], 0.1));
  EXPECT_TRUE(same_bits(y[1], 1.0 / 3.0));

  std::istringstream junk("1.0\nabc\n");
  EXPECT_THROW(io::read_signal(junk), InvalidArgument);
  std::istringstream trailing("1.0x\n");
  EXPECT_THROW(io::read_signal(trailing), InvalidArgument);
}

TEST(Reports, CarryTheirFields) {
  const WaveletBank bank = construct_tight(hat_filter(2));
  const json c = io::to_json(bank.certificate);
  EXPECT_TRUE(c.contains("paraunitary_residual"));
  EXPECT_TRUE(c.contains("certified_min"));
  const json s = io::to_json(verify_system(build_lp2(*bank.source), theorem_scaling(*bank.source)));
  EXPECT_TRUE(s.is_object());
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}
