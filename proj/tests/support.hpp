#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "centro/centro.hpp"

namespace testing_support {

using centro::Complex;
using centro::DenseMatrix;
using centro::SpectrumList;

inline double max_match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return centro::match_spectra(a, b).max_distance;
}

inline double spectrum_error(const DenseMatrix& m, const SpectrumList& target) {
  return centro::match_spectra(target, centro::eigenvalues(m)).cluster_distance;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double lo = -1.0,
                                 double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

/// Random list: Perron head plus tail drawn from the region Re <= 0, |Re| >= |Im|.
inline SpectrumList random_suleimanova(std::mt19937_64& rng, std::size_t reals, std::size_t pairs,
                                       double extra = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> r;
  std::vector<Complex> p;
  double tail = 0.0;
  for (std::size_t i = 1; i < reals; ++i) {
    r.push_back(-5.0 * u(rng));
    tail += r.back();
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    const double a = -(0.2 + 5.0 * u(rng));
    const double b = std::max(1e-3, -a * u(rng));
    p.emplace_back(a, b);
    tail += 2.0 * a;
  }
  r.insert(r.begin(), -tail + extra * u(rng));
  return SpectrumList::from_parts(r, p);
}

}  // namespace testing_support
