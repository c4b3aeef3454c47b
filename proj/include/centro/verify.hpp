#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "centro/centro_core.hpp"
#include "centro/eigen.hpp"
#include "centro/error.hpp"
#include "centro/realization.hpp"
#include "centro/spectra.hpp"

namespace centro {

// ---------------------------------------------------------------------------
// Assignment

/// Minimum-cost perfect assignment (Hungarian method with potentials).
/// Returns assignment[row] = column.
inline std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based arrays; column 0 is a sentinel.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

namespace detail {

/// Perfect matching using only edges with dist <= threshold (Kuhn's augmenting paths).
inline bool has_perfect_matching(const std::vector<std::vector<double>>& dist, double threshold) {
  const std::size_t n = dist.size();
  std::vector<std::ptrdiff_t> match_col(n, -1);
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<bool> seen(n, false);
    auto augment = [&](auto&& self, std::size_t r) -> bool {
      for (std::size_t c = 0; c < n; ++c) {
        if (seen[c] || dist[r][c] > threshold) continue;
        seen[c] = true;
        if (match_col[c] < 0 || self(self, static_cast<std::size_t>(match_col[c]))) {
          match_col[c] = static_cast<std::ptrdiff_t>(r);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, row)) return false;
  }
  return true;
}

}  // namespace detail

/// Bijection minimizing the maximum distance; among those, the one with the
/// smallest total distance.
inline std::vector<std::size_t> bottleneck_assignment(const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  if (n == 0) return {};
  std::vector<double> levels;
  levels.reserve(n * n);
  for (const auto& row : dist) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (detail::has_perfect_matching(dist, levels[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  const double threshold = levels[lo];
  double big = 1.0;
  for (double d : levels) big += d;
  big *= static_cast<double>(n) + 1.0;
  std::vector<std::vector<double>> cost = dist;
  for (auto& row : cost)
    for (double& c : row)
      if (c > threshold) c = big;
  return min_cost_assignment(cost);
}

// ---------------------------------------------------------------------------
// Spectrum matching

/// Default acceptance: 1e-8 absolute for |target| <= 100, else 1e-10 relative.
inline double default_match_tol(std::complex<double> target) {
  const double mag = std::abs(target);
  return mag <= 100.0 ? 1e-8 : 1e-10 * mag;
}

struct MatchedPair {
  std::complex<double> target;
  std::complex<double> computed;
  double distance = 0.0;
};

struct SpectrumMatch {
  std::vector<MatchedPair> matched_pairs;
  double max_distance = 0.0;
  /// Like max_distance, but a repeated target value is compared with the
  /// mean of the values matched to it.
  double cluster_distance = 0.0;
  bool matched = false;
};

/// Optimal (bottleneck) bijection between two multisets. With `abs_tol`
/// set, every pair must lie within it; otherwise the default rule applies.
inline SpectrumMatch match_spectra(const std::vector<std::complex<double>>& target,
                                   const std::vector<std::complex<double>>& computed,
                                   std::optional<double> abs_tol = std::nullopt) {
  if (target.size() != computed.size())
    fail(Errc::CardinalityMismatch, "target has " + std::to_string(target.size()) +
                                        " values, computed has " + std::to_string(computed.size()));
  const std::size_t n = target.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::abs(target[i] - computed[j]);
  const auto assignment = bottleneck_assignment(dist);
  SpectrumMatch out;
  out.matched = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = dist[i][assignment[i]];
    out.matched_pairs.push_back({target[i], computed[assignment[i]], d});
    out.max_distance = std::max(out.max_distance, d);
  }

  // A k-fold root of a defective matrix splits by about eps^(1/k) once the
  // entries are rounded, while the mean of the split values stays accurate.
  // Such clusters are judged by their mean; each member must still lie
  // within tol^(1/k) (scaled) of the target.
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < n; ++j)
      if (!seen[j] && std::abs(target[j] - target[i]) <= spectrum_tol(target[i])) {
        seen[j] = true;
        group.push_back(j);
      }
    const double tol = abs_tol ? *abs_tol : default_match_tol(target[i]);
    const double k = static_cast<double>(group.size());
    std::complex<double> mean = 0.0;
    double worst = 0.0;
    for (std::size_t j : group) {
      mean += computed[assignment[j]];
      worst = std::max(worst, dist[j][assignment[j]]);
    }
    mean /= k;
    const double d = group.size() == 1 ? worst : std::abs(mean - target[i]);
    const double radius = group.size() == 1 ? tol : std::pow(tol, 1.0 / k) * std::pow(std::max(1.0, std::abs(target[i])), 1.0 - 1.0 / k);
    out.cluster_distance = std::max(out.cluster_distance, d);
    if (!(d <= tol) || !(worst <= std::max(tol, radius))) out.matched = false;
  }
  return out;
}

inline SpectrumMatch match_spectra(const SpectrumList& target,
                                   const std::vector<std::complex<double>>& computed,
                                   std::optional<double> abs_tol = std::nullopt) {
  return match_spectra(target.values(), computed, abs_tol);
}

// ---------------------------------------------------------------------------
// Reports

struct RealizationReport {
  SpectrumMatch spectrum;
  double centro_residual = 0.0;
  double nonneg_margin = 0.0;
  RealizationKind kind = RealizationKind::RealCentro;
  Provenance provenance;

  bool kind_holds() const {
    switch (kind) {
      case RealizationKind::RealCentro: return true;
      case RealizationKind::NonnegCentro: return nonneg_margin >= 0.0;
      case RealizationKind::PositiveCentro: return nonneg_margin > 0.0;
    }
    return false;
  }

  /// Accepted iff the spectrum matches, the matrix is exactly
  /// centrosymmetric, and the claimed kind holds.
  bool accepted() const { return spectrum.matched && centro_residual == 0.0 && kind_holds(); }
};

/// Recomputes every predicate from the raw matrix.
inline RealizationReport verify_matrix(const DenseMatrix& m, const SpectrumList& target,
                                       RealizationKind claimed = RealizationKind::RealCentro,
                                       std::optional<double> abs_tol = std::nullopt) {
  RealizationReport rep;
  rep.centro_residual = m.is_square() ? centro_residual(m) : std::numeric_limits<double>::infinity();
  rep.nonneg_margin = nonneg_margin(m);
  rep.kind = claimed;
  rep.spectrum = match_spectra(target, eigenvalues(m), abs_tol);
  return rep;
}

inline RealizationReport verify_realization(const Realization& r, const SpectrumList& target,
                                            std::optional<double> abs_tol = std::nullopt) {
  RealizationReport rep = verify_matrix(r.matrix.mat(), target, r.kind, abs_tol);
  rep.provenance = r.provenance;
  return rep;
}

}  // namespace centro
