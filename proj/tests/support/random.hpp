#ifndef LPSCALE_TESTS_RANDOM_HPP
#define LPSCALE_TESTS_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "lpscale/laurent.hpp"
#include "lpscale/lp2.hpp"

namespace testsupport {

using lpscale::Exponent;
using lpscale::LaurentPoly;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  /// Exponents in [-deg, deg]^dim, about `terms` of them, never zero.
  LaurentPoly poly(std::size_t dim, int deg, int terms = 4) { return poly_in(dim, -deg, deg, terms); }

  /// Exponents in [0, deg]^dim.
  LaurentPoly causal(std::size_t dim, int deg, int terms = 4) { return poly_in(dim, 0, deg, terms); }

  LaurentPoly poly_in(std::size_t dim, int lo, int hi, int terms) {
    for (;;) {
      std::vector<std::pair<Exponent, double>> t;
      for (int i = 0; i < terms; ++i) {
        Exponent k(dim);
        for (auto& e : k) e = integer(lo, hi);
        t.emplace_back(k, uniform());
      }
      LaurentPoly p = LaurentPoly::from_terms(dim, t);
      if (!p.is_zero()) return p;
    }
  }

  /// Entries with exponents in [0, deg]^dim.
  lpscale::PolyphaseVector polyphase(std::size_t q, std::size_t dim, int deg) {
    std::vector<LaurentPoly> e;
    for (std::size_t j = 0; j < q; ++j) e.push_back(causal(dim, deg, integer(1, 4)) * 0.5);
    return lpscale::PolyphaseVector(std::move(e));
  }

  /// Real Q(z) = c prod (1 - r z^{-1}) with |r| in [0.2, 0.8] or [1.25, 3];
  /// complex roots come in conjugate pairs.
  std::vector<double> stable_coeffs(int degree) {
    std::vector<std::complex<double>> roots;
    while (static_cast<int>(roots.size()) < degree) {
      const double mod = integer(0, 1) ? uniform(0.2, 0.8) : uniform(1.25, 3.0);
      if (degree - static_cast<int>(roots.size()) >= 2 && integer(0, 1)) {
        const auto r = std::polar(mod, uniform(0.1, 3.0));
        roots.push_back(r);
        roots.push_back(std::conj(r));
      } else {
        roots.emplace_back(integer(0, 1) ? mod : -mod, 0.0);
      }
    }
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
      std::vector<std::complex<double>> n(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        n[i] += c[i];
        n[i + 1] -= r * c[i];
      }
      c = n;
    }
    const double scale = uniform(0.5, 2.0);
    std::vector<double> out;
    for (const auto& v : c) out.push_back(scale * v.real());
    return out;
  }

  std::vector<double> signal(std::size_t n) {
    std::vector<double> x(n);
    for (auto& v : x) v = uniform();
    return x;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testsupport

#endif
