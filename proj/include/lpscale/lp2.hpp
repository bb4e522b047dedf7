#ifndef LPSCALE_LP2_HPP
#define LPSCALE_LP2_HPP

// Laplacian-pyramid Laurent polynomial (LP^2) matrices
//
//   Phi_H = [ H   I - H H^* ]            (q x (q+1))
//
// built from a polyphase column H, the quadratic map F used to turn
// Phi_H B Phi_H^* = I into a linear system for a diagonal B, the scaling
// diagonal diag(2 - H^*H, 1, ..., 1), the D*A*U splitting of the
// off-diagonal block of F(Phi_H), and the exceptional set S_H outside
// which that diagonal is the only solution.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "lpscale/detail/int_linalg.hpp"
#include "lpscale/errors.hpp"
#include "lpscale/laurent.hpp"

namespace lpscale {

/// Column H(z) = [H_0, ..., H_{q-1}]^T, q >= 2, not identically zero.
class PolyphaseVector {
 public:
  explicit PolyphaseVector(std::vector<LaurentPoly> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw InvalidArgument("PolyphaseVector: need q >= 2 entries");
    const std::size_t dim = entries_.front().dim();
    bool nonzero = false;
    for (const auto& e : entries_) {
      if (e.dim() != dim) throw DimensionError("PolyphaseVector: entries of differing dimension");
      nonzero = nonzero || !e.is_zero();
    }
    if (!nonzero) throw InvalidArgument("PolyphaseVector: H is identically zero");
  }

  std::size_t q() const { return entries_.size(); }
  std::size_t dim() const { return entries_.front().dim(); }
  const LaurentPoly& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const LaurentPoly> entries() const { return entries_; }

  /// H^* H = sum_j |H_j|^2
  LaurentPoly norm_squared() const {
    LaurentPoly s(dim());
    for (const auto& e : entries_) s += abs_squared(e);
    return s;
  }

  /// Every entry multiplied by the scalar polynomial m.
  PolyphaseVector scaled(const LaurentPoly& m) const {
    std::vector<LaurentPoly> out;
    out.reserve(q());
    for (const auto& e : entries_) out.push_back(m * e);
    return PolyphaseVector(std::move(out));
  }

  LaurentMatrix as_column() const { return LaurentMatrix::column(entries_); }

  bool operator==(const PolyphaseVector&) const = default;

 private:
  std::vector<LaurentPoly> entries_;
};

/// I - H H^*, the last q columns of Phi_H.
inline LaurentMatrix lp2_complement(const PolyphaseVector& h) {
  const std::size_t q = h.q();
  LaurentMatrix m(q, q, h.dim());
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      LaurentPoly e = -(h[r] * h[c].involution());
      if (r == c) e = e + 1.0;
      m(r, c) = std::move(e);
    }
  return m;
}

/// Phi_H together with the column it was generated from.
class Lp2Matrix {
 public:
  explicit Lp2Matrix(PolyphaseVector source) : source_(std::move(source)) {
    const std::size_t q = source_.q();
    const LaurentMatrix rest = lp2_complement(source_);
    matrix_ = LaurentMatrix(q, q + 1, source_.dim());
    for (std::size_t r = 0; r < q; ++r) {
      matrix_(r, 0) = source_[r];
      for (std::size_t c = 0; c < q; ++c) matrix_(r, c + 1) = rest(r, c);
    }
  }

  const PolyphaseVector& source() const { return source_; }
  const LaurentMatrix& matrix() const { return matrix_; }
  std::size_t q() const { return source_.q(); }

 private:
  PolyphaseVector source_;
  LaurentMatrix matrix_;
};

inline Lp2Matrix build_lp2(const PolyphaseVector& h) { return Lp2Matrix(h); }

/// Residual of Phi_H [H^*; I] = I, computed as a polynomial identity.
inline double left_inverse_residual(const Lp2Matrix& p) {
  const std::size_t q = p.q();
  const LaurentMatrix hstar = p.source().as_column().conj_transpose();
  LaurentMatrix stacked(q + 1, q, p.source().dim());
  for (std::size_t c = 0; c < q; ++c) stacked(0, c) = hstar(0, c);
  for (std::size_t r = 0; r < q; ++r) stacked(r + 1, r) = LaurentPoly::constant(1.0, p.source().dim());
  return max_coeff_diff(p.matrix() * stacked, LaurentMatrix::identity(q, p.source().dim()));
}

/// Outcome of a paraunitarity test: A A^* = I as a polynomial identity
/// and on a torus grid.
struct ParaunitaryReport {
  bool paraunitary = false;
  double polynomial_residual = 0.0;  ///< max coefficient of A A^* - I
  double sampled_residual = 0.0;     ///< max over grid of ||A(z)A^*(z) - I||_max
  std::vector<double> worst_omega;
  std::size_t points = 0;
};

inline ParaunitaryReport is_paraunitary(const LaurentMatrix& a, const TorusGrid& grid = {},
                                        double tol = 1e-10) {
  ParaunitaryReport rep;
  const LaurentMatrix aat = a * a.conj_transpose();
  rep.polynomial_residual = max_coeff_diff(aat, LaurentMatrix::identity(a.rows(), a.dim()));

  const std::size_t n = grid.size(a.dim());
  rep.points = n;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(a.rows()),
                                                         static_cast<Eigen::Index>(a.rows()));
  for (std::size_t i = 0; i < n; ++i) {
    const TorusPoint t = grid.point(i, a.dim());
    const Eigen::MatrixXcd at = a.eval(t);
    const double res = (at * at.adjoint() - id).cwiseAbs().maxCoeff();
    if (i == 0 || res > rep.sampled_residual) {
      rep.sampled_residual = res;
      rep.worst_omega.assign(t.omega().begin(), t.omega().end());
    }
  }
  rep.paraunitary = rep.polynomial_residual <= tol && rep.sampled_residual <= tol;
  return rep;
}

/// Diagonal B = diag(b_0, ..., b_q).
struct ScalingDiagonal {
  std::vector<LaurentPoly> diag;

  LaurentMatrix matrix() const { return LaurentMatrix::diagonal(diag); }
};

/// b_0 = 2 - H^*H, b_1 = ... = b_q = 1. Always solves Phi_H B Phi_H^* = I.
inline ScalingDiagonal theorem_scaling(const PolyphaseVector& h) {
  ScalingDiagonal b;
  b.diag.reserve(h.q() + 1);
  b.diag.push_back(2.0 - h.norm_squared());
  for (std::size_t j = 0; j < h.q(); ++j) b.diag.push_back(LaurentPoly::constant(1.0, h.dim()));
  return b;
}

/// d = (q-1)(q+2)/2, the length of F(x) for x of length q.
constexpr std::size_t f_map_length(std::size_t q) { return (q - 1) * (q + 2) / 2; }

/// F(x) = [F_0; F_1; ...; F_{q-1}] with
///   F_0 = (|x_0|^2 - |x_i|^2)_{i=1..q-1},
///   F_k = (x_{k-1} conj(x_j))_{j=k..q-1},
/// conjugation realized by the involution.
inline std::vector<LaurentPoly> f_map(std::span<const LaurentPoly> x) {
  const std::size_t q = x.size();
  if (q < 2) throw InvalidArgument("f_map: need at least two components");
  std::vector<LaurentPoly> out;
  out.reserve(f_map_length(q));
  const LaurentPoly x0sq = abs_squared(x[0]);
  for (std::size_t i = 1; i < q; ++i) out.push_back(x0sq - abs_squared(x[i]));
  for (std::size_t k = 1; k < q; ++k)
    for (std::size_t j = k; j < q; ++j) out.push_back(x[k - 1] * x[j].involution());
  return out;
}

/// Pointwise version of F on C^q.
inline Eigen::VectorXcd f_map(const Eigen::VectorXcd& x) {
  const auto q = static_cast<std::size_t>(x.size());
  if (q < 2) throw InvalidArgument("f_map: need at least two components");
  Eigen::VectorXcd out(static_cast<Eigen::Index>(f_map_length(q)));
  Eigen::Index row = 0;
  for (Eigen::Index i = 1; i < x.size(); ++i) out(row++) = std::norm(x(0)) - std::norm(x(i));
  for (Eigen::Index k = 1; k < x.size(); ++k)
    for (Eigen::Index j = k; j < x.size(); ++j) out(row++) = x(k - 1) * std::conj(x(j));
  return out;
}

/// F(Phi_H): F applied to each column of Phi_H (d x (q+1)).
inline LaurentMatrix f_of_phi(const Lp2Matrix& p) {
  const std::size_t q = p.q();
  const std::size_t d = f_map_length(q);
  LaurentMatrix out(d, q + 1, p.source().dim());
  for (std::size_t c = 0; c <= q; ++c) {
    const auto col = f_map(p.matrix().col(c));
    for (std::size_t r = 0; r < d; ++r) out(r, c) = col[r];
  }
  return out;
}

/// F(Phi_H) assembled entry by entry from the closed-form case tables
/// for the F_0 and F_k blocks. Independent of f_of_phi; the two must agree.
inline LaurentMatrix f_of_phi_closed_form(const PolyphaseVector& h) {
  const std::size_t q = h.q();
  const std::size_t dim = h.dim();
  std::vector<LaurentPoly> sq;
  for (std::size_t j = 0; j < q; ++j) sq.push_back(abs_squared(h[j]));
  const LaurentPoly one = LaurentPoly::constant(1.0, dim);

  LaurentMatrix out(f_map_length(q), q + 1, dim);
  std::size_t row = 0;
  // F_0 block; i and j are 1-based as in the tables.
  for (std::size_t i = 1; i <= q - 1; ++i, ++row) {
    for (std::size_t j = 1; j <= q + 1; ++j) {
      LaurentPoly e;
      if (j == 1) e = sq[0] - sq[i];
      else if (j == 2) e = (one - sq[0]) * (one - sq[0]) - sq[i] * sq[0];
      else if (j == i + 2) e = sq[0] * sq[i] - (one - sq[i]) * (one - sq[i]);
      else e = (sq[0] - sq[i]) * sq[j - 2];
      out(row, j - 1) = std::move(e);
    }
  }
  // F_k blocks, k = 1..q-1.
  for (std::size_t k = 1; k <= q - 1; ++k) {
    for (std::size_t i = 1; i <= q - k; ++i, ++row) {
      const LaurentPoly cross = h[k - 1] * h[i + k - 1].involution();
      for (std::size_t j = 1; j <= q + 1; ++j) {
        LaurentPoly e;
        if (j == 1) e = cross;
        else if (j == k + 1 || j == i + k + 1) e = -((one - sq[j - 2]) * cross);
        else e = cross * sq[j - 2];
        out(row, j - 1) = std::move(e);
      }
    }
  }
  return out;
}

/// Result of checking a candidate diagonal against the scalar identity
/// (row 0 diagonal entry equal to 1) and F(Phi_H) b = 0, cross-checked
/// against Phi_H B Phi_H^* = I directly.
struct SystemReport {
  bool holds = false;            ///< inhomogeneous and homogeneous parts both hold
  bool direct_holds = false;     ///< Phi B Phi^* = I
  double inhomogeneous_residual = 0.0;
  double homogeneous_residual = 0.0;
  double direct_residual = 0.0;
  bool consistent() const { return holds == direct_holds; }
};

inline SystemReport verify_system(const Lp2Matrix& p, const ScalingDiagonal& b, double tol = 1e-10) {
  const std::size_t q = p.q();
  if (b.diag.size() != q + 1)
    throw DimensionError("verify_system: diagonal has " + std::to_string(b.diag.size()) +
                         " entries, expected " + std::to_string(q + 1));
  const PolyphaseVector& h = p.source();
  SystemReport rep;

  // |H_0|^2 b_0 + (1-|H_0|^2)^2 b_1 + sum_{j>=1} |H_0|^2 |H_j|^2 b_{j+1} = 1
  const LaurentPoly h0sq = abs_squared(h[0]);
  const LaurentPoly one_minus = 1.0 - h0sq;
  LaurentPoly lhs = h0sq * b.diag[0] + one_minus * one_minus * b.diag[1];
  for (std::size_t j = 1; j < q; ++j) lhs += h0sq * abs_squared(h[j]) * b.diag[j + 1];
  rep.inhomogeneous_residual = max_coeff_diff(lhs, LaurentPoly::constant(1.0, h.dim()));

  const LaurentMatrix fb = f_of_phi(p) * LaurentMatrix::column(b.diag);
  rep.homogeneous_residual = fb.max_abs_coeff();
  rep.holds = rep.inhomogeneous_residual <= tol && rep.homogeneous_residual <= tol;

  const LaurentMatrix direct = p.matrix() * b.matrix() * p.matrix().conj_transpose();
  rep.direct_residual = max_coeff_diff(direct, LaurentMatrix::identity(q, h.dim()));
  rep.direct_holds = rep.direct_residual <= tol;
  return rep;
}

/// F~(Phi_H) = [F_1; ...; F_{q-1}](Phi_H) = D A U.
struct DauFactorization {
  LaurentMatrix d;  ///< diagonal, (q-1)q/2 square
  IntMatrix a;      ///< 0/1 scalar matrix, (q-1)q/2 x (q+1)
  LaurentMatrix u;  ///< upper triangular, (q+1) square
  std::size_t rank_a = 0;

  LaurentMatrix product() const { return d * LaurentMatrix::from_scalars(a, d.dim()) * u; }
};

inline DauFactorization dau_factorization(const Lp2Matrix& p) {
  const std::size_t q = p.q();
  const std::size_t dim = p.source().dim();
  const PolyphaseVector& h = p.source();
  const std::size_t m = (q - 1) * q / 2;

  DauFactorization f{LaurentMatrix(m, m, dim), IntMatrix(m, q + 1), LaurentMatrix(q + 1, q + 1, dim), 0};
  std::size_t row = 0;
  for (std::size_t k = 1; k <= q - 1; ++k)
    for (std::size_t i = 1; i <= q - k; ++i, ++row) {
      f.d(row, row) = h[k - 1] * h[i + k - 1].involution();
      for (std::size_t j = 1; j <= q + 1; ++j)
        f.a(row, j - 1) = (j == 1 || j == k + 1 || j == i + k + 1) ? 1 : 0;
    }
  f.u(0, 0) = LaurentPoly::constant(1.0, dim);
  for (std::size_t j = 0; j < q; ++j) {
    f.u(0, j + 1) = abs_squared(h[j]);
    f.u(j + 1, j + 1) = LaurentPoly::constant(-1.0, dim);
  }
  f.rank_a = rank(f.a);
  return f;
}

/// Rows of F(Phi_H) belonging to F_1, ..., F_{q-1}.
inline LaurentMatrix f_tilde(const LaurentMatrix& f_phi, std::size_t q) {
  return f_phi.row_block(q - 1, (q - 1) * q / 2);
}

/// Membership of t in S_H, deciding "= 0" as "<= tol" on evaluated values.
inline bool in_exceptional_set(const PolyphaseVector& h, const TorusPoint& t, double tol = 1e-9) {
  const std::size_t q = h.q();
  std::vector<Complex> v;
  v.reserve(q);
  for (std::size_t j = 0; j < q; ++j) v.push_back(h[j].eval(t));
  if (q == 2) {
    return std::abs(v[0] * std::conj(v[1])) <= tol ||
           std::abs(1.0 - std::norm(v[0]) - std::norm(v[1])) <= tol;
  }
  for (std::size_t k = 1; k <= q - 1; ++k)
    for (std::size_t i = 1; i <= q - k; ++i)
      if (std::abs(v[k - 1] * std::conj(v[i + k - 1])) <= tol) return true;
  return false;
}

struct UniquenessViolation {
  std::vector<double> omega;
  std::size_t numerical_rank = 0;
  double angle = 0.0;  ///< radians between the kernel and the expected direction
};

struct UniquenessReport {
  std::size_t points = 0;
  std::size_t points_outside = 0;  ///< points not in S_H, where the check applies
  std::size_t violations_count = 0;
  double max_angle = 0.0;
  double min_rank_gap = std::numeric_limits<double>::infinity();  ///< min sigma_q / sigma_1
  double max_null_ratio = 0.0;                                    ///< max sigma_{q+1} / sigma_1
  std::vector<UniquenessViolation> violations;

  bool passed() const { return violations_count == 0 && points_outside > 0; }
  bool no_points_outside() const { return points_outside == 0; }
};

struct UniquenessOptions {
  double set_tol = 1e-9;     ///< S_H membership threshold
  double rank_tol = 1e-8;    ///< relative singular value cutoff
  double angle_tol = 1e-6;   ///< radians
  std::size_t max_listed = 16;
};

/// Angle between two complex lines, insensitive to phase. Computed from
/// the orthogonal residual so small angles stay accurate.
inline double line_angle(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Eigen::VectorXcd ua = a.normalized();
  const Eigen::VectorXcd ub = b.normalized();
  const Complex overlap = ua.dot(ub);
  const Eigen::VectorXcd perp = ub - ua * overlap;
  return std::atan2(perp.norm(), std::abs(overlap));
}

inline void check_uniqueness_at(const PolyphaseVector& h, const LaurentMatrix& f_phi,
                                const LaurentPoly& b0, const TorusPoint& t,
                                const UniquenessOptions& opt, UniquenessReport& rep) {
  ++rep.points;
  if (in_exceptional_set(h, t, opt.set_tol)) return;
  ++rep.points_outside;
  const std::size_t q = h.q();
  const Eigen::MatrixXcd m = f_phi.eval(t);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double s1 = s(0);
  std::size_t numerical_rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > opt.rank_tol * s1) ++numerical_rank;

  const auto qi = static_cast<Eigen::Index>(q);
  if (qi - 1 < s.size()) rep.min_rank_gap = std::min(rep.min_rank_gap, s(qi - 1) / s1);
  if (qi < s.size()) rep.max_null_ratio = std::max(rep.max_null_ratio, s(qi) / s1);

  Eigen::VectorXcd expected(qi + 1);
  expected(0) = b0.eval(t);
  for (Eigen::Index j = 1; j <= qi; ++j) expected(j) = 1.0;
  const Eigen::VectorXcd kernel = svd.matrixV().col(qi);
  const double angle = line_angle(kernel, expected);
  rep.max_angle = std::max(rep.max_angle, angle);

  if (numerical_rank != q || angle > opt.angle_tol) {
    ++rep.violations_count;
    if (rep.violations.size() < opt.max_listed)
      rep.violations.push_back(
          {std::vector<double>(t.omega().begin(), t.omega().end()), numerical_rank, angle});
  }
}

/// At each sampled point outside S_H, the kernel of F(Phi_H)(z) must be
/// one-dimensional and spanned by [2 - H^*H, 1, ..., 1](z).
inline UniquenessReport uniqueness_check(const PolyphaseVector& h, const TorusGrid& grid,
                                         const UniquenessOptions& opt = {}) {
  const Lp2Matrix p(h);
  const LaurentMatrix f_phi = f_of_phi(p);
  const LaurentPoly b0 = 2.0 - h.norm_squared();
  UniquenessReport rep;
  const std::size_t n = grid.size(h.dim());
  for (std::size_t i = 0; i < n; ++i) check_uniqueness_at(h, f_phi, b0, grid.point(i, h.dim()), opt, rep);
  return rep;
}

/// Same check at caller-chosen points.
inline UniquenessReport uniqueness_check(const PolyphaseVector& h, std::span<const TorusPoint> points,
                                         const UniquenessOptions& opt = {}) {
  const Lp2Matrix p(h);
  const LaurentMatrix f_phi = f_of_phi(p);
  const LaurentPoly b0 = 2.0 - h.norm_squared();
  UniquenessReport rep;
  for (const auto& t : points) check_uniqueness_at(h, f_phi, b0, t, opt, rep);
  return rep;
}

}  // namespace lpscale

#endif  // LPSCALE_LP2_HPP
