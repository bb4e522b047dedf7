// lpscale command-line tool.
//
//   lpscale construct --input filter.json [--output bank.json]
//   lpscale verify    --input {matrix|bank|polyphase}.json [--lambda L]
//   lpscale factor    --input poly.json | --coeffs a,b,c --offset o
//   lpscale examples  {dd K | bspline K | hat L} [--output DIR] [--level J]
//   lpscale cascade   {FAMILY PARAM | --input filter.json} [--scaled] [--level J] [--output f.csv]
//   lpscale pr-sim    {FAMILY PARAM | --input bank.json} [--signal x.csv] [--seed S]
//
// Exit status: 0 success, 2 mathematical precondition failure,
// 3 input/output or format failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpscale/lpscale.hpp"

namespace {

using namespace lpscale;
using io::json;

constexpr int kExitMath = 2;
constexpr int kExitFormat = 3;

struct RunConfig {
  std::string command;
  std::string input, output, signal;
  std::optional<double> tol;
  std::optional<std::size_t> grid;
  std::optional<int> lambda;
  bool strict = true;
  bool scaled = false;
  std::uint64_t seed = 1;
  int level = 8;
  std::size_t length = 0;
  std::string coeffs;
  int offset = 0;
  std::string family;
  int param = 0;

  double tolerance(double fallback) const { return tol.value_or(fallback); }

  void validate() const {
    if (tol && !(*tol > 0.0)) throw InvalidArgument("--tol must be positive");
    if (grid && *grid < 64) throw InvalidArgument("--grid must be at least 64");
    if (level < 0 || level > 14) throw InvalidArgument("--level must be in 0..14");
    if (lambda && *lambda < 2) throw InvalidArgument("--lambda must be at least 2");
    if (!family.empty()) parse_family(family, param);
  }
};

std::string fmt(double v) { return io::format_double(v); }

void emit(const RunConfig& cfg, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) std::cout << text;
  else io::write_text_file(cfg.output, text);
}

Family selected_family(const RunConfig& cfg) {
  if (cfg.family.empty()) throw InvalidArgument("no family given (expected dd K, bspline K or hat L)");
  return parse_family(cfg.family, cfg.param);
}

ConstructOptions construct_options(const RunConfig& cfg) {
  ConstructOptions opt;
  opt.tol = cfg.tolerance(1e-10);
  opt.strict = cfg.strict;
  if (cfg.grid) opt.positivity_grid = *cfg.grid;
  return opt;
}

// Properties the construction guarantees; a failure here is a
// numerical breakdown rather than bad input.
void require_certificate(const WaveletBank& bank) {
  const auto& c = bank.certificate;
  if (!bank.tight)
    throw MathError("constructed bank is not paraunitary (residual " + fmt(c.paraunitary_residual) + ")");
  if (c.accuracy_before >= 0 && c.accuracy_before != c.accuracy_after)
    throw MathError("accuracy changed from " + std::to_string(c.accuracy_before) + " to " +
                    std::to_string(c.accuracy_after));
  if (!c.support_ok) throw MathError("lowpass support exceeds {0..2s}");
}

int cmd_construct(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InvalidArgument("construct needs --input");
  const io::json doc = io::read_json_file(cfg.input);
  const Filter h = io::filter_from_json(doc);
  // optional precomputed m_H; required for multivariate filters
  const WaveletBank bank = doc.contains("factor")
                               ? construct_tight(h, io::poly_from_json(doc.at("factor")), construct_options(cfg))
                               : construct_tight(h, construct_options(cfg));
  require_certificate(bank);
  emit(cfg, io::to_json(bank));
  return 0;
}

// Recovers H when `a` has the form [H, I - H H*].
std::optional<PolyphaseVector> lp2_source(const LaurentMatrix& a, double tol) {
  if (a.cols() != a.rows() + 1) return std::nullopt;
  const auto first = a.col(0);
  if (std::ranges::all_of(first, [](const LaurentPoly& p) { return p.is_zero(); })) return std::nullopt;
  PolyphaseVector h(first);
  if (max_coeff_diff(build_lp2(h).matrix(), a) > tol) return std::nullopt;
  return h;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InvalidArgument("verify needs --input");
  const json doc = io::read_json_file(cfg.input);
  const double tol = cfg.tolerance(1e-10);
  TorusGrid grid;
  if (cfg.grid) grid.points_per_dim = *cfg.grid;

  LaurentMatrix a;
  std::optional<PolyphaseVector> h;
  std::optional<DilationSpec> dilation;
  if (doc.contains("lowpass")) {
    const WaveletBank bank = io::bank_from_json(doc);
    a = bank.polyphase();
    h = bank.source;
    dilation = bank.lowpass.dilation();
  } else if (doc.contains("rows")) {
    a = io::matrix_from_json(doc);
    h = lp2_source(a, tol);
  } else if (doc.contains("entries")) {
    h = io::polyphase_from_json(doc);
    a = build_lp2(*h).matrix();
  } else {
    throw InvalidArgument("verify: input is neither a matrix, a bank nor a polyphase vector");
  }
  if (!dilation && h && h->dim() == 1) {
    const int lambda = cfg.lambda.value_or(static_cast<int>(h->q()));
    if (static_cast<std::size_t>(lambda) == h->q()) dilation = DilationSpec(lambda);
  }

  json report;
  const ParaunitaryReport pr = is_paraunitary(a, grid, tol);
  report["paraunitary"] = io::to_json(pr);
  std::printf("%-28s %-6s %s\n", "check", "pass", "residual");
  std::printf("%-28s %-6s %s\n", "paraunitary (as given)", pr.paraunitary ? "yes" : "no",
              fmt(std::max(pr.polynomial_residual, pr.sampled_residual)).c_str());
  bool all = pr.paraunitary;
  if (h) {
    const Lp2Matrix phi = build_lp2(*h);
    const SystemReport sr = verify_system(phi, theorem_scaling(*h), tol);
    report["scaled_system"] = io::to_json(sr);
    std::printf("%-28s %-6s %s\n", "scaled system", sr.holds && sr.direct_holds ? "yes" : "no",
                fmt(std::max({sr.inhomogeneous_residual, sr.homogeneous_residual, sr.direct_residual})).c_str());
    std::printf("%-28s %-6s %s\n", "left inverse", "", fmt(left_inverse_residual(phi)).c_str());
    if (dilation) {
      const Filter f = polyphase_reconstruct(*h, *dilation);
      if (f.kind() == FilterKind::lowpass) {
        const AutocorrelationReport ar = mask_autocorrelation_sum(f, grid);
        report["autocorrelation"] = io::to_json(ar);
        const bool ok = ar.max_discrepancy <= 1e-10;
        all = all && ok;
        std::printf("%-28s %-6s %s\n", "mask autocorrelation", ok ? "yes" : "no", fmt(ar.max_discrepancy).c_str());
      }
    }
  } else {
    report["scaled_system"] = nullptr;
    std::printf("%-28s %-6s %s\n", "scaled system", "n/a", "not of the form [H, I - HH*]");
  }
  report["all_pass"] = all;
  if (!cfg.output.empty()) io::write_text_file(cfg.output, report.dump(2) + "\n");
  return 0;
}

int cmd_factor(const RunConfig& cfg) {
  LaurentPoly p;
  if (!cfg.input.empty()) {
    p = io::univariate_from_json(io::read_json_file(cfg.input));
  } else if (!cfg.coeffs.empty()) {
    std::vector<double> c;
    std::stringstream ss(cfg.coeffs);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        c.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InvalidArgument("--coeffs: '" + cell + "' is not a number");
      }
    }
    p = LaurentPoly::univariate(c, cfg.offset);
  } else {
    throw InvalidArgument("factor needs --input or --coeffs");
  }
  const HermitianLaurentPoly hp(p);
  const SpectralFactor f = fejer_riesz(hp);
  json j = io::to_json(f);
  j["residual"] = max_coeff_diff(abs_squared(f.q_poly), p);
  emit(cfg, j);
  return 0;
}

// Coefficients of the scaled masks for the families where they are known
// in closed form.
std::optional<std::vector<double>> expected_mask(const Family& f) {
  const double r6 = std::sqrt(6.0), r7 = std::sqrt(7.0), r3 = std::sqrt(3.0), r43 = std::sqrt(43.0);
  const bool hat2 = (f.kind == Family::Kind::dd && f.param == 1) ||
                    (f.kind == Family::Kind::bspline && f.param == 2) ||
                    (f.kind == Family::Kind::hat && f.param == 2);
  if (hat2) return std::vector<double>{(2 + r6) / 16, (2 + r6) / 8, 0.25, (2 - r6) / 8, (2 - r6) / 16};
  if (f.kind == Family::Kind::bspline && f.param == 3)
    return std::vector<double>{(2 + r7) / 32,     (6 + 3 * r7) / 32, (8 + 2 * r7) / 32,
                               (8 - 2 * r7) / 32, (6 - 3 * r7) / 32, (2 - r7) / 32};
  if (f.kind == Family::Kind::hat && f.param == 3) {
    std::vector<double> v{3 * r3 + r43, 6 * r3 + 2 * r43, 9 * r3 + 3 * r43, 9 * r3 + r43,
                          9 * r3 - r43, 9 * r3 - 3 * r43, 6 * r3 - 2 * r43, 3 * r3 - r43};
    for (double& x : v) x /= 54 * r3;
    return v;
  }
  return std::nullopt;
}

int cmd_examples(const RunConfig& cfg) {
  const Family fam = selected_family(cfg);
  const Filter h = family_filter(fam);
  const WaveletBank bank = construct_tight(h, construct_options(cfg));
  require_certificate(bank);
  const RefinementMask tau = mask_of(bank.lowpass);
  const auto [lo, hi] = tau.tau.exponent_range();
  std::vector<double> coeffs;
  for (int k = lo; k <= hi; ++k) coeffs.push_back(tau.tau.coeff_at(k));

  std::printf("example %s (lambda = %d)\n", fam.name().c_str(), h.dilation().lambda());
  std::printf("scaled mask coefficients, index %d..%d:\n", lo, hi);
  for (std::size_t i = 0; i < coeffs.size(); ++i) std::printf("  [%zu] %s\n", i, fmt(coeffs[i]).c_str());

  int status = 0;
  if (const auto expect = expected_mask(fam)) {
    if (expect->size() != coeffs.size() || lo != 0) {
      std::fprintf(stderr, "mismatch: %zu coefficients, expected %zu\n", coeffs.size(), expect->size());
      status = kExitMath;
    } else {
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (std::abs(coeffs[i] - (*expect)[i]) > cfg.tolerance(1e-10)) {
          std::fprintf(stderr, "mismatch at coefficient %zu: got %s, expected %s\n", i, fmt(coeffs[i]).c_str(),
                       fmt((*expect)[i]).c_str());
          status = kExitMath;
        }
      if (status == 0) std::printf("closed-form coefficients: match\n");
    }
  }
  if (fam.kind == Family::Kind::dd) {
    const bool ok = bank.certificate.certified_min >= 1.0 - 1e-6;
    std::printf("2 - H*H certified minimum: %s (>= 1: %s)\n", fmt(bank.certificate.certified_min).c_str(),
                ok ? "yes" : "no");
    if (!ok) status = kExitMath;
  }
  std::printf("accuracy: %d -> %d\n", bank.certificate.accuracy_before, bank.certificate.accuracy_after);
  std::printf("filters: 1 lowpass + %zu highpass\n", bank.highpass.size());

  const SmoothnessEstimate se = smoothness_bound(family_beta(fam), *bank.factor, h.dilation().lambda());
  std::printf("smoothness: beta = %s, xi_sup = %s, alpha = %s\n", fmt(se.beta).c_str(), fmt(se.xi_sup).c_str(),
              fmt(se.alpha).c_str());

  const RefinableProfile prof = cascade(tau, cfg.level);
  const double res = refinement_residual(prof);
  const double pou = prof.partition_of_unity_error();
  std::printf("cascade J = %d: residual %s, partition of unity %s, support [0, %s]\n", cfg.level, fmt(res).c_str(),
              fmt(pou).c_str(), fmt(prof.support().second).c_str());

  if (!cfg.output.empty()) {
    std::filesystem::create_directories(cfg.output);
    const std::filesystem::path dir(cfg.output);
    json mask = io::to_json(bank.lowpass);
    mask["mask"] = io::univariate_json(tau.tau);
    mask["factor"] = io::univariate_json(*bank.factor);
    mask["smoothness"] = io::to_json(se);
    io::write_text_file((dir / (fam.name() + "_mask.json")).string(), mask.dump(2) + "\n");
    io::write_text_file((dir / (fam.name() + "_bank.json")).string(), io::to_json(bank).dump(2) + "\n");
    std::ostringstream csv;
    io::write_csv(csv, prof);
    io::write_text_file((dir / (fam.name() + "_cascade.csv")).string(), csv.str());
    std::ostringstream csv0;
    io::write_csv(csv0, cascade(mask_of(h), cfg.level));
    io::write_text_file((dir / (fam.name() + "_cascade_unscaled.csv")).string(), csv0.str());
  }
  return status;
}

int cmd_cascade(const RunConfig& cfg) {
  Filter h = cfg.input.empty() ? family_filter(selected_family(cfg)) : io::filter_from_json(io::read_json_file(cfg.input));
  if (cfg.scaled) {
    const WaveletBank bank = construct_tight(h, construct_options(cfg));
    require_certificate(bank);
    h = bank.lowpass;
  }
  const RefinableProfile prof = cascade(mask_of(normalized(h)), cfg.level);
  std::ostringstream csv;
  io::write_csv(csv, prof);
  if (cfg.output.empty()) std::cout << csv.str();
  else io::write_text_file(cfg.output, csv.str());
  std::fprintf(stderr, "refinement residual %s, partition of unity %s\n", fmt(refinement_residual(prof)).c_str(),
               fmt(prof.partition_of_unity_error()).c_str());
  return 0;
}

int cmd_pr_sim(const RunConfig& cfg) {
  WaveletBank bank;
  if (!cfg.input.empty()) {
    const json doc = io::read_json_file(cfg.input);
    bank = doc.contains("lowpass") ? io::bank_from_json(doc)
                                   : construct_tight(io::filter_from_json(doc), construct_options(cfg));
  } else {
    bank = construct_tight(family_filter(selected_family(cfg)), construct_options(cfg));
  }
  const auto lambda = static_cast<std::size_t>(bank.lowpass.dilation().lambda());

  std::vector<double> x;
  if (!cfg.signal.empty()) {
    std::ifstream in(cfg.signal);
    if (!in) throw InvalidArgument("cannot open '" + cfg.signal + "'");
    x = io::read_signal(in);
  } else {
    std::size_t n = cfg.length ? cfg.length : lambda * lambda * lambda * lambda * lambda;
    if (n < 256 && !cfg.length) n = (256 / lambda) * lambda;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    x.resize(n);
    for (double& v : x) v = dist(rng);
  }
  const std::vector<double> y = analyze_synthesize(bank, x);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::abs(x[i] - y[i]));
  std::printf("signal length %zu, lambda %zu, filters %zu, max error %s\n", x.size(), lambda,
              bank.highpass.size() + 1, fmt(err).c_str());
  if (!cfg.output.empty()) {
    std::ostringstream os;
    io::write_signal(os, y);
    io::write_text_file(cfg.output, os.str());
  }
  if (err > cfg.tolerance(1e-9)) {
    std::fprintf(stderr, "reconstruction error %s exceeds %s\n", fmt(err).c_str(), fmt(cfg.tolerance(1e-9)).c_str());
    return kExitMath;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight wavelet filter banks from scalable LP^2 matrices"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* s) {
    s->add_option("--tol", cfg.tol, "Tolerance override");
    s->add_option("--grid", cfg.grid, "Grid density (>= 64)");
    s->add_flag("--strict,!--no-strict", cfg.strict, "Require a certified strict positivity bound");
  };
  auto selector = [&](CLI::App* s) {
    s->add_option("family", cfg.family, "dd, bspline or hat");
    s->add_option("param", cfg.param, "k for dd/bspline, lambda for hat");
  };

  auto* construct = app.add_subcommand("construct", "Build a tight bank from a lowpass filter file");
  construct->add_option("--input", cfg.input, "Filter JSON")->required();
  construct->add_option("--output", cfg.output, "Bank JSON (default stdout)");
  common(construct);

  auto* verify = app.add_subcommand("verify", "Check paraunitarity and the scaling identities");
  verify->add_option("--input", cfg.input, "Matrix, bank or polyphase JSON")->required();
  verify->add_option("--output", cfg.output, "Report JSON");
  verify->add_option("--lambda", cfg.lambda, "Dilation for polyphase input");
  common(verify);

  auto* factor = app.add_subcommand("factor", "Fejer-Riesz factor of a nonnegative Laurent polynomial");
  factor->add_option("--input", cfg.input, "{\"coeffs\": [...], \"offset\": o}");
  factor->add_option("--coeffs", cfg.coeffs, "Comma-separated coefficients");
  factor->add_option("--offset", cfg.offset, "Exponent of the first coefficient");
  factor->add_option("--output", cfg.output, "Factor JSON (default stdout)");
  common(factor);

  auto* examples = app.add_subcommand("examples", "Reproduce a built-in example end to end");
  selector(examples);
  examples->add_option("--output", cfg.output, "Directory for mask JSON and cascade CSV");
  examples->add_option("--level", cfg.level, "Cascade level");
  common(examples);

  auto* casc = app.add_subcommand("cascade", "Sample a refinable function");
  selector(casc);
  casc->add_option("--input", cfg.input, "Filter JSON");
  casc->add_flag("--scaled", cfg.scaled, "Use the lowpass of the constructed tight bank");
  casc->add_option("--level", cfg.level, "Cascade level");
  casc->add_option("--output", cfg.output, "CSV (default stdout)");
  common(casc);

  auto* prsim = app.add_subcommand("pr-sim", "Analysis/synthesis round trip through a bank");
  selector(prsim);
  prsim->add_option("--input", cfg.input, "Bank or filter JSON");
  prsim->add_option("--signal", cfg.signal, "Signal CSV, one value per line");
  prsim->add_option("--seed", cfg.seed, "Seed for the random signal");
  prsim->add_option("--length", cfg.length, "Random signal length");
  prsim->add_option("--output", cfg.output, "Reconstructed signal CSV");
  common(prsim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitFormat;
  }

  try {
    cfg.validate();
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*factor) return cmd_factor(cfg);
    if (*examples) return cmd_examples(cfg);
    if (*casc) return cmd_cascade(cfg);
    if (*prsim) return cmd_pr_sim(cfg);
  } catch (const MathError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMath;
  } catch (const lpscale::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFormat;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: malformed JSON: %s\n", e.what());
    return kExitFormat;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFormat;
  }
  return kExitFormat;
}
