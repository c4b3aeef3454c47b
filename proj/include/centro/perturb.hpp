#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "centro/centro_core.hpp"
#include "centro/eigen.hpp"
#include "centro/error.hpp"
#include "centro/matrix.hpp"
#include "centro/spectra.hpp"

namespace centro {

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Rayleigh estimate and max-norm residual of M v = lambda v.
inline std::pair<double, double> eigen_residual(const DenseMatrix& m, std::span<const double> v) {
  const std::vector<double> mv = m * v;
  const double lambda = dot(v, mv) / dot(v, v);
  double res = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) res = std::max(res, std::abs(mv[i] - lambda * v[i]));
  return {lambda, res};
}

inline double eigen_tol(const DenseMatrix& m, std::span<const double> v, double rel) {
  return rel * std::max(1.0, centro::max_abs(m)) * std::max(max_abs(v), 1e-300) *
         static_cast<double>(std::max<std::size_t>(m.rows(), 1));
}

}  // namespace detail

/// Rank-one update M + v q^T. With M v = lambda v only lambda moves, to
/// lambda + v^T q.
inline DenseMatrix brauer_update(const DenseMatrix& m, std::span<const double> v, std::span<const double> q) {
  if (!m.is_square() || v.size() != m.rows() || q.size() != m.rows())
    fail(Errc::DimensionMismatch, "Brauer update needs n x n matrix and two n-vectors");
  if (detail::max_abs(v) == 0.0) fail(Errc::NotAnEigenvector, "zero vector");
  const auto [lambda, res] = detail::eigen_residual(m, v);
  (void)lambda;
  if (res > detail::eigen_tol(m, v, 1e-9)) fail(Errc::NotAnEigenvector, "M v != lambda v");
  DenseMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += v[i] * q[j];
  return out;
}

struct PerronData {
  double value = 0.0;
  std::vector<double> vector;  ///< nonnegative, max entry 1
  bool symmetric = false;      ///< J v == v
};

/// Perron root and a nonnegative eigenvector by shifted power iteration.
/// For centrosymmetric input the vector is averaged with its reversal, which
/// stays in the Perron eigenspace.
inline PerronData perron_vector(const DenseMatrix& m) {
  if (!m.is_square() || m.rows() == 0) fail(Errc::DimensionMismatch, "Perron vector needs a square matrix");
  if (nonneg_margin(m) < 0.0) fail(Errc::InvalidInput, "Perron vector needs a nonnegative matrix");
  const std::size_t n = m.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, m(i, i));
  const double shift = max_diag + 1.0;
  const std::size_t cap = std::max<std::size_t>(100 * n * n, 20000);

  std::vector<double> v(n, 1.0), w(n);
  bool converged = false;
  for (std::size_t it = 0; it < cap; ++it) {
    w = m * std::span<const double>(v);
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    const double scale = detail::max_abs(w);
    if (scale == 0.0) fail(Errc::ConvergenceFailure, "power iteration collapsed to zero");
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= scale;
      diff = std::max(diff, std::abs(w[i] - v[i]));
    }
    v.swap(w);
    if (diff < 1e-12) {
      converged = true;
      break;
    }
  }
  for (double& x : v) x = std::max(x, 0.0);

  // Power iteration leaves ~1e-10 errors (or stalls on near ties); finish
  // with inverse iteration shifted just past the root. A stalled run takes
  // the root from the eigensolver instead.
  {
    double rho = detail::eigen_residual(m, v).first;
    if (!converged) rho = spectral_radius(m);
    const double sigma = rho + 1e-9 * std::max(1.0, std::abs(rho));
    DenseMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= sigma;
    std::vector<double> cur = converged ? v : std::vector<double>(n, 1.0);
    double best = converged ? detail::eigen_residual(m, v).second / detail::max_abs(v)
                            : std::numeric_limits<double>::infinity();
    for (int step = 0; step < 4; ++step) {
      std::vector<double> next;
      try {
        next = solve(shifted, DenseMatrix::column(cur)).col(0);
      } catch (const Error&) {
        break;
      }
      double big = 0.0;
      for (double x : next)
        if (std::abs(x) > std::abs(big)) big = x;
      if (big == 0.0 || !std::isfinite(big)) break;
      for (double& x : next) x = std::max(x / big, 0.0);
      const double res = detail::eigen_residual(m, next).second;
      cur = next;
      if (res < best) {
        best = res;
        v = next;
      }
    }
  }

  PerronData out;
  if (centro_residual(m) == 0.0) {
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = 0.5 * (v[i] + v[n - 1 - i]);
    const auto [lam, res] = detail::eigen_residual(m, s);
    (void)lam;
    if (res <= detail::eigen_tol(m, s, 1e-8)) {
      v = std::move(s);
      out.symmetric = true;
    }
  }
  const double vmax = detail::max_abs(v);
  for (double& x : v) x /= vmax;
  if (!out.symmetric) {
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) asym = std::max(asym, std::abs(v[i] - v[n - 1 - i]));
    out.symmetric = asym <= 1e-10;
  }
  const auto [lambda, res] = detail::eigen_residual(m, v);
  if (res > detail::eigen_tol(m, v, 1e-9)) fail(Errc::ConvergenceFailure, "Perron residual too large");
  out.value = std::max(lambda, 0.0);
  out.vector = std::move(v);
  return out;
}

/// C + (eps / v^T v) v v^T with v the symmetric Perron vector: raises the
/// Perron root by eps and keeps C centrosymmetric and nonnegative.
inline CentroMatrix perron_bump(const CentroMatrix& c, double eps) {
  if (eps < 0.0) fail(Errc::InvalidInput, "Perron bump needs eps >= 0");
  if (nonneg_margin(c.mat()) < 0.0) fail(Errc::InvalidInput, "Perron bump needs a nonnegative matrix");
  if (eps == 0.0) return c;
  const PerronData pd = perron_vector(c.mat());
  if (!pd.symmetric)
    fail(Errc::PerronVectorNotSymmetric, "no symmetric Perron vector found for the bump");
  const std::vector<double>& v = pd.vector;
  const double s = eps / detail::dot(v, v);
  DenseMatrix out = c.mat();
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += (s * v[i]) * v[j];
  return CentroMatrix(std::move(out));
}

/// Rank-r update M + X Cmat. X's columns must be independent eigenvectors.
inline DenseMatrix rado_update(const DenseMatrix& m, const DenseMatrix& x, const DenseMatrix& cmat) {
  if (!m.is_square() || x.rows() != m.rows() || cmat.rows() != x.cols() || cmat.cols() != m.rows())
    fail(Errc::DimensionMismatch, "Rado update needs n x n M, n x r X, r x n C");
  if (numerical_rank(x) != x.cols()) fail(Errc::RankDeficientX, "X must have full column rank");
  for (std::size_t k = 0; k < x.cols(); ++k) {
    const std::vector<double> col = x.col(k);
    const auto [lambda, res] = detail::eigen_residual(m, col);
    (void)lambda;
    if (res > detail::eigen_tol(m, col, 1e-9))
      fail(Errc::NotEigenvectors, "column " + std::to_string(k) + " of X is not an eigenvector");
  }
  return m + x * cmat;
}

/// The r x r matrix Omega + Cmat X whose eigenvalues replace the ones
/// carried by X's columns.
inline DenseMatrix rado_reduced_matrix(const DenseMatrix& m, const DenseMatrix& x, const DenseMatrix& cmat) {
  DenseMatrix out = cmat * x;
  for (std::size_t k = 0; k < x.cols(); ++k) {
    const std::vector<double> col = x.col(k);
    out(k, k) += detail::eigen_residual(m, col).first;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constant row sum realizations

struct RowSumForm {
  DenseMatrix matrix;
  double alpha = 0.0;
};

/// D^{-1} M D with D = diag(Perron vector): same spectrum and diagonal,
/// every row summing to the Perron root.
inline RowSumForm to_row_sum_form(const DenseMatrix& m) {
  const PerronData pd = perron_vector(m);
  const std::vector<double>& d = pd.vector;
  for (double x : d)
    if (!(x > 1e-14)) fail(Errc::ZeroPerronComponent, "Perron vector has a zero component");
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * (d[j] / d[i]);
  return {std::move(out), pd.value};
}

/// Companion matrix (superdiagonal ones, last row -c_0..-c_{n-1}) of
/// prod (x - lambda_i) for a zero-sum list whose head is its largest real.
/// Nonnegative exactly when every lower coefficient is <= 0.
inline DenseMatrix companion_realize(const SpectrumList& list) {
  const std::size_t n = list.size();
  if (n == 0) fail(Errc::InvalidInput, "empty list");
  if (list.reals().empty()) fail(Errc::InvalidInput, "list needs a real head");
  const double scale = std::max(1.0, list.max_modulus());
  if (std::abs(list.sum()) > 1e-12 * scale * static_cast<double>(n))
    fail(Errc::InvalidInput, "companion realization needs a zero-sum list");
  const double head = list.reals().front();

  // q(x) = prod over the tail, ascending coefficients, monic.
  std::vector<double> q{1.0};
  auto mul = [&q](std::span<const double> f) {
    std::vector<double> r(q.size() + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += q[i] * f[j];
    q = std::move(r);
  };
  for (std::size_t i = 1; i < list.reals().size(); ++i) {
    const double f[] = {-list.reals()[i], 1.0};
    mul(f);
  }
  for (const Complex& z : list.pairs()) {
    const double f[] = {std::norm(z), -2.0 * z.real(), 1.0};
    mul(f);
  }

  // p(x) = (x - head) q(x); p_k = q_{k-1} - head q_k.
  std::vector<double> p(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double lower = k == 0 ? 0.0 : q[k - 1];
    const double term = head * q[k];
    double pk = lower - term;
    const double tol = 1e-12 * (std::abs(lower) + std::abs(term));
    if (pk > 0.0 && pk <= tol) pk = 0.0;
    if (pk > 0.0)
      fail(Errc::CompanionNotNonnegative,
           "characteristic coefficient of x^" + std::to_string(k) + " is positive");
    p[k] = pk;
  }
  p[n - 1] = 0.0;  // trace zero

  DenseMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1.0;
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = p[j] == 0.0 ? 0.0 : -p[j];
  return c;
}

namespace detail {

/// beta * companion of prod (y - mu) with mu = {1, tail / beta}. This is the
/// row-sum form of companion_realize's output (Perron vector powers of beta)
/// written out directly; coefficients are accumulated in long double.
inline DenseMatrix unit_row_sum_companion(const SpectrumList& tail, double beta) {
  const std::size_t n = tail.size() + 1;
  using ld = long double;
  std::vector<ld> q{1.0L};
  auto mul = [&q](std::initializer_list<ld> f) {
    std::vector<ld> r(q.size() + f.size() - 1, 0.0L);
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::size_t j = 0;
      for (ld c : f) r[i + j++] += q[i] * c;
    }
    q = std::move(r);
  };
  const ld b = beta;
  for (double r : tail.reals()) mul({-static_cast<ld>(r) / b, 1.0L});
  for (const Complex& z : tail.pairs()) {
    const ld re = static_cast<ld>(z.real()) / b, im = static_cast<ld>(z.imag()) / b;
    mul({re * re + im * im, -2.0L * re, 1.0L});
  }
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = beta;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const ld lower = k == 0 ? 0.0L : q[k - 1];
    ld pk = lower - q[k];
    const ld tol = 1e-12L * (std::abs(lower) + std::abs(q[k]));
    if (pk > 0.0L && pk <= tol) pk = 0.0L;
    if (pk > 0.0L)
      fail(Errc::CompanionNotNonnegative, "characteristic coefficient of x^" + std::to_string(k) + " is positive");
    c(n - 1, k) = pk == 0.0L ? 0.0 : static_cast<double>(-pk * b);
  }
  return c;
}

}  // namespace detail

/// Nonnegative, zero-trace matrix with constant row sums beta = -sum(tail)
/// and spectrum {beta, tail}. Zero tail entries are split off into a
/// block-triangular border so the companion part stays irreducible.
inline RowSumForm trace_zero_row_sum_realize(const SpectrumList& tail) {
  const std::size_t n = tail.size() + 1;
  const double scale = std::max(1.0, tail.max_modulus());
  std::vector<double> nz_reals;
  std::size_t zeros = 0;
  for (double r : tail.reals()) {
    if (std::abs(r) <= 1e-14 * scale)
      ++zeros;
    else
      nz_reals.push_back(r);
  }
  const SpectrumList nz_tail = SpectrumList::from_parts(nz_reals, tail.pairs());
  const double beta = -nz_tail.sum();
  if (nz_tail.empty()) return {DenseMatrix(n, n), 0.0};

  RowSumForm core{detail::unit_row_sum_companion(nz_tail, beta), beta};
  if (zeros == 0) return core;

  const std::size_t k = core.matrix.rows();
  DenseMatrix out(n, n);
  out.set_block(0, 0, core.matrix);
  for (std::size_t i = k; i < n; ++i) out(i, 0) = beta;
  return {std::move(out), beta};
}

/// Nonnegative matrix with spectrum `list` (largest real first, tail in the
/// Suleimanova region) and diagonal exactly `diag`: a zero-trace constant
/// row sum realization of {-sum(tail), tail} plus e diag^T.
inline DenseMatrix realize_with_diagonal(const SpectrumList& list, std::span<const double> diag) {
  const std::size_t n = list.size();
  if (diag.size() != n) fail(Errc::DimensionMismatch, "diagonal length differs from list size");
  if (list.reals().empty()) fail(Errc::InvalidInput, "list needs a real Perron value");
  for (double w : diag)
    if (!(w >= 0.0)) fail(Errc::InvalidInput, "prescribed diagonal entries must be nonnegative");
  const double head = list.reals().front();
  const SpectrumList tail = SpectrumList::from_parts(
      std::vector<double>(list.reals().begin() + 1, list.reals().end()), list.pairs());
  const double scale = std::max(1.0, list.max_modulus()) * static_cast<double>(n);
  if (head + tail.sum() < -1e-12 * scale)
    fail(Errc::InvalidInput, "Perron value is below the negated tail sum");
  double dsum = 0.0;
  for (double w : diag) dsum += w;
  if (std::abs(dsum - list.sum()) > 1e-10 * scale)
    fail(Errc::DiagonalSumMismatch, "diagonal entries must sum to the spectrum sum");

  const RowSumForm b = trace_zero_row_sum_realize(tail);
  DenseMatrix a = b.matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) += diag[j];
  return a;
}

}  // namespace centro
