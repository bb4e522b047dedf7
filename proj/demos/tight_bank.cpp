// Builds the tight bank of a cubic B-spline, prints its filters and checks
// perfect reconstruction on a random signal.

#include <cstdio>
#include <random>

#include "lpscale/lpscale.hpp"

int main() {
  using namespace lpscale;
  const Filter h = bspline_filter(4);
  const WaveletBank bank = construct_tight(h);

  auto show = [](const char* label, const Filter& f) {
    const auto [lo, taps] = f.taps();
    std::printf("%s (from index %d):", label, lo);
    for (double v : taps) std::printf(" % .6f", v);
    std::printf("\n");
  };
  show("input lowpass ", h);
  show("tight lowpass ", bank.lowpass);
  for (std::size_t i = 0; i < bank.highpass.size(); ++i) show(("highpass " + std::to_string(i) + "    ").c_str(), bank.highpass[i]);

  const auto& c = bank.certificate;
  std::printf("paraunitary residual %.2e, accuracy %d -> %d\n", c.paraunitary_residual, c.accuracy_before,
              c.accuracy_after);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(512);
  for (double& v : x) v = dist(rng);
  std::printf("reconstruction error %.2e\n", simulate_pr(bank, x));

  const RefinableProfile phi = cascade(mask_of(bank.lowpass), 8);
  std::printf("scaled refinable function on [0, %g], refinement residual %.2e\n", phi.support().second,
              refinement_residual(phi));
  return 0;
}
