#ifndef LPSCALE_IO_HPP
#define LPSCALE_IO_HPP

// JSON and CSV formats.
//
//   polynomial  {"dim": n, "terms": [{"k": [..], "c": v}, ...]}
//   polyphase   {"q": q, "dim": n, "entries": [polynomial, ...]}
//   matrix      {"rows": r, "cols": c, "dim": n, "entries": [[polynomial, ...], ...]}
//   filter      {"lambda": l or [[..]], "cosets": [[..], ...], "coeffs": [{"k": [..], "v": x}, ...]}
//   univariate  {"coeffs": [..], "offset": o}   sum coeffs[i] z^{-(o+i)}
//
// Format problems raise InvalidArgument.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpscale/errors.hpp"
#include "lpscale/filterbank.hpp"
#include "lpscale/laurent.hpp"
#include "lpscale/lp2.hpp"
#include "lpscale/refinable.hpp"
#include "lpscale/spectral.hpp"

namespace lpscale::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const json& array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array");
  return v;
}

inline Exponent exponent_of(const json& k, std::size_t dim) {
  Exponent e;
  if (k.is_number_integer()) e.push_back(k.get<int>());
  else if (k.is_array())
    for (const auto& v : k) {
      if (!v.is_number_integer()) throw InvalidArgument("exponent entries must be integers");
      e.push_back(v.get<int>());
    }
  else throw InvalidArgument("exponent must be an integer or an integer array");
  if (dim != 0 && e.size() != dim) throw InvalidArgument("exponent length differs from dim");
  return e;
}

inline std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

inline std::size_t count(const json& v, const char* what) {
  const std::int64_t n = integer(v, what);
  if (n < 0) throw InvalidArgument(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(n);
}

inline double number(const json& v) {
  if (!v.is_number()) throw InvalidArgument("expected a number");
  return v.get<double>();
}

}  // namespace detail

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    terms.push_back({{"k", std::vector<int>(p.exponent(i).begin(), p.exponent(i).end())}, {"c", p.coeff(i)}});
  return {{"dim", p.dim()}, {"terms", terms}};
}

inline LaurentPoly poly_from_json(const json& j) {
  const auto dim = detail::count(detail::field(j, "dim"), "dim");
  if (dim == 0) throw InvalidArgument("polynomial dim must be positive");
  std::vector<std::pair<Exponent, double>> terms;
  for (const auto& t : detail::array(j, "terms"))
    terms.emplace_back(detail::exponent_of(detail::field(t, "k"), dim), detail::number(detail::field(t, "c")));
  return LaurentPoly::from_terms(dim, terms);
}

inline json to_json(const PolyphaseVector& h) {
  json e = json::array();
  for (const auto& p : h.entries()) e.push_back(to_json(p));
  return {{"q", h.q()}, {"dim", h.dim()}, {"entries", e}};
}

inline PolyphaseVector polyphase_from_json(const json& j) {
  std::vector<LaurentPoly> e;
  for (const auto& p : detail::array(j, "entries")) e.push_back(poly_from_json(p));
  if (j.contains("q") && detail::count(j.at("q"), "q") != e.size()) throw InvalidArgument("polyphase: q != entry count");
  return PolyphaseVector(std::move(e));
}

inline json to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"dim", m.dim()}, {"entries", rows}};
}

inline LaurentMatrix matrix_from_json(const json& j) {
  const auto rows = detail::count(detail::field(j, "rows"), "rows");
  const auto cols = detail::count(detail::field(j, "cols"), "cols");
  const auto& e = detail::array(j, "entries");
  if (!e.is_array() || e.size() != rows) throw InvalidArgument("matrix: row count mismatch");
  std::vector<LaurentPoly> flat;
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) throw InvalidArgument("matrix: column count mismatch");
    for (const auto& p : row) flat.push_back(poly_from_json(p));
  }
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix: empty");
  return LaurentMatrix(rows, cols, std::move(flat));
}

inline json dilation_json(const DilationSpec& d) {
  json cosets = d.cosets();
  if (d.dim() == 1) return {{"lambda", d.lambda()}, {"cosets", cosets}};
  json mat = json::array();
  for (std::size_t r = 0; r < d.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < d.dim(); ++c) row.push_back(d.matrix()(r, c));
    mat.push_back(row);
  }
  return {{"lambda", mat}, {"cosets", cosets}};
}

inline DilationSpec dilation_from_json(const json& j) {
  const json& l = detail::field(j, "lambda");
  if (l.is_number_integer()) {
    const int lambda = static_cast<int>(detail::integer(l, "lambda"));
    if (!j.contains("cosets")) return DilationSpec(lambda);
    std::vector<Exponent> cosets;
    for (const auto& c : detail::array(j, "cosets")) cosets.push_back(detail::exponent_of(c, 1));
    return DilationSpec(IntMatrix::scalar(lambda), cosets);
  }
  if (!l.is_array() || l.empty()) throw InvalidArgument("lambda must be an integer or a square integer matrix");
  const std::size_t n = l.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!l[r].is_array() || l[r].size() != n) throw InvalidArgument("lambda matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = detail::integer(l[r][c], "lambda entries");
  }
  std::vector<Exponent> cosets;
  for (const auto& c : detail::array(j, "cosets")) cosets.push_back(detail::exponent_of(c, n));
  return DilationSpec(m, cosets);
}

inline json coeffs_json(const LaurentPoly& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json k = p.dim() == 1 ? json(p.exponent(i)[0]) : json(std::vector<int>(p.exponent(i).begin(), p.exponent(i).end()));
    out.push_back({{"k", k}, {"v", p.coeff(i)}});
  }
  return out;
}

inline LaurentPoly coeffs_from_json(const json& arr, std::size_t dim) {
  if (!arr.is_array()) throw InvalidArgument("coeffs must be an array");
  std::vector<std::pair<Exponent, double>> terms;
  for (const auto& t : arr) terms.emplace_back(detail::exponent_of(detail::field(t, "k"), dim), detail::number(detail::field(t, "v")));
  return LaurentPoly::from_terms(dim, terms);
}

inline json to_json(const Filter& f) {
  json j = dilation_json(f.dilation());
  j["coeffs"] = coeffs_json(f.coeffs());
  return j;
}

inline Filter filter_from_json(const json& j) {
  const DilationSpec d = dilation_from_json(j);
  LaurentPoly c = coeffs_from_json(detail::field(j, "coeffs"), d.dim());
  if (c.is_zero()) throw InvalidArgument("filter has no nonzero coefficients");
  return Filter(d, std::move(c));
}

/// {"coeffs": [...], "offset": o} for a univariate polynomial.
inline json univariate_json(const LaurentPoly& p) {
  if (p.dim() != 1) throw DimensionError("univariate_json: univariate polynomial required");
  const auto [lo, hi] = p.exponent_range();
  std::vector<double> c(p.is_zero() ? 1 : static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) c[static_cast<std::size_t>(p.exponent(i)[0] - lo)] = p.coeff(i);
  return {{"coeffs", c}, {"offset", lo}};
}

inline LaurentPoly univariate_from_json(const json& j) {
  std::vector<double> c;
  const json& arr = detail::field(j, "coeffs");
  if (!arr.is_array()) throw InvalidArgument("coeffs must be an array");
  for (const auto& v : arr) c.push_back(detail::number(v));
  const int offset = j.contains("offset") ? static_cast<int>(detail::integer(j.at("offset"), "offset")) : 0;
  return LaurentPoly::univariate(c, offset);
}

inline json to_json(const ParaunitaryReport& r) {
  return {{"paraunitary", r.paraunitary}, {"polynomial_residual", r.polynomial_residual},
          {"sampled_residual", r.sampled_residual}, {"worst_omega", r.worst_omega}, {"points", r.points}};
}

inline json to_json(const SystemReport& r) {
  return {{"holds", r.holds}, {"direct_holds", r.direct_holds}, {"consistent", r.consistent()},
          {"inhomogeneous_residual", r.inhomogeneous_residual}, {"homogeneous_residual", r.homogeneous_residual},
          {"direct_residual", r.direct_residual}};
}

inline json to_json(const AutocorrelationReport& r) {
  return {{"max_discrepancy", r.max_discrepancy}, {"worst_omega", r.worst_omega}, {"max_value", r.max_value},
          {"points", r.points}};
}

inline json to_json(const UniquenessReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"omega", x.omega}, {"numerical_rank", x.numerical_rank}, {"angle", x.angle}});
  return {{"passed", r.passed()}, {"points", r.points}, {"points_outside", r.points_outside},
          {"violations_count", r.violations_count}, {"max_angle", r.max_angle},
          {"min_rank_gap", r.points_outside ? json(r.min_rank_gap) : json(nullptr)},
          {"max_null_ratio", r.max_null_ratio}, {"violations", v}};
}

inline json to_json(const TightnessCertificate& c) {
  json j = {{"paraunitary_residual", c.paraunitary_residual}, {"sampled_residual", c.sampled_residual},
            {"mask_residual", c.mask_residual}, {"highpass_sum_max", c.highpass_sum_max},
            {"factor_residual", c.factor_residual}, {"certified_min", c.certified_min},
            {"positive_accuracy_after", c.positive_accuracy_after}};
  if (c.accuracy_before >= 0) {
    j["accuracy_before"] = c.accuracy_before;
    j["accuracy_after"] = c.accuracy_after;
    j["support_before"] = {c.support_before.first, c.support_before.second};
    j["support_after"] = {c.support_after.first, c.support_after.second};
    j["support_ok"] = c.support_ok;
  }
  return j;
}

inline json to_json(const WaveletBank& b) {
  json j = dilation_json(b.lowpass.dilation());
  j["lowpass"] = coeffs_json(b.lowpass.coeffs());
  json hp = json::array();
  for (const auto& f : b.highpass) hp.push_back(coeffs_json(f.coeffs()));
  j["highpass"] = hp;
  j["tight"] = b.tight;
  if (b.factor) j["factor"] = b.factor->dim() == 1 ? univariate_json(*b.factor) : to_json(*b.factor);
  if (b.source) j["source"] = to_json(*b.source);
  j["certificate"] = to_json(b.certificate);
  return j;
}

/// Reads a bank; "source" and "factor" are restored when present, the
/// certificate is not.
inline WaveletBank bank_from_json(const json& j) {
  const DilationSpec d = dilation_from_json(j);
  WaveletBank b;
  b.lowpass = Filter(d, coeffs_from_json(detail::field(j, "lowpass"), d.dim()));
  for (const auto& h : detail::array(j, "highpass")) b.highpass.emplace_back(d, coeffs_from_json(h, d.dim()));
  b.tight = j.value("tight", false);
  if (j.contains("source")) b.source = polyphase_from_json(j.at("source"));
  if (j.contains("factor"))
    b.factor = j.at("factor").contains("coeffs") ? univariate_from_json(j.at("factor")) : poly_from_json(j.at("factor"));
  return b;
}

inline json to_json(const PositivityCertificate& c) {
  return {{"positive", c.positive}, {"certified_min", c.certified_min}, {"sampled_min", c.sampled_min},
          {"argmin", c.argmin}, {"grid", c.grid}, {"evaluations", c.evaluations}};
}

inline json to_json(const SpectralFactor& f) {
  auto pairs = [](const std::vector<Complex>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back({z.real(), z.imag()});
    return a;
  };
  json j = univariate_json(f.q_poly);
  j["certified_min"] = f.certified_min;
  j["pairing_residual"] = f.pairing_residual;
  j["roots"] = pairs(f.roots);
  j["selected_roots"] = pairs(f.selected_roots);
  return j;
}

inline json to_json(const SmoothnessEstimate& e) {
  return {{"beta", e.beta}, {"xi_sup", e.xi_sup}, {"xi_sampled", e.xi_sampled}, {"alpha", e.alpha},
          {"lambda", e.lambda}, {"l2", e.l2}};
}

inline json to_json(const StabilityReport& r) {
  return {{"min_sum", r.min_sum}, {"argmin", r.argmin}, {"max_sum", r.max_sum}, {"grid", r.grid},
          {"periods", r.periods}, {"stable", r.stable}, {"advisory", true}};
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// "x,value" lines at 17 significant digits.
inline void write_csv(std::ostream& os, const RefinableProfile& p) {
  os << "x,value\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << format_double(p.x(i)) << ',' << format_double(p.samples()[i]) << '\n';
}

/// One value per line; blank lines and '#' comments are skipped.
inline std::vector<double> read_signal(std::istream& is) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    const std::string cell = line.substr(first, comma == std::string::npos ? std::string::npos : comma - first);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || cell.find_first_not_of(" \t\r", used) != std::string::npos)
      throw InvalidArgument("signal: line " + std::to_string(lineno) + " is not a number");
    out.push_back(v);
  }
  return out;
}

inline void write_signal(std::ostream& os, const std::vector<double>& x) {
  for (double v : x) os << format_double(v) << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

}  // namespace lpscale::io

#endif  // LPSCALE_IO_HPP
