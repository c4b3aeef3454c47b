#pragma once

// Worked examples printed in the literature, transcribed verbatim.

#include <string>
#include <vector>

#include "centro/error.hpp"
#include "centro/matrix.hpp"
#include "centro/realize.hpp"
#include "centro/spectra.hpp"

namespace centro::fixtures {

namespace detail {

inline DenseMatrix scaled(std::initializer_list<std::initializer_list<double>> rows, double div) {
  DenseMatrix m(rows);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= div;
  return m;
}

}  // namespace detail

inline SpectrumList example1_spectrum() {
  return SpectrumList::from_parts({20, -1, -2, -3}, {{-2, 2}, {-3, 1}, {-1, 1}});
}

inline SpectrumList example1_shifted_spectrum() {
  return SpectrumList::from_parts({18, -1, -2, -3}, {{-2, 2}, {-3, 1}, {-1, 1}});
}

/// Zero-diagonal matrix with spectrum example1_shifted_spectrum(); entries / 2.
inline DenseMatrix example1_c_prime() {
  return detail::scaled({{0, 4, 5, 3, 3, 3, 3, 5, 4, 6},
                         {4, 0, 4, 3, 3, 3, 3, 6, 6, 4},
                         {5, 5, 0, 3, 3, 3, 3, 6, 3, 5},
                         {7, 4, 5, 0, 0, 2, 2, 5, 4, 7},
                         {3, 4, 5, 6, 0, 2, 4, 5, 4, 3},
                         {3, 4, 5, 4, 2, 0, 6, 5, 4, 3},
                         {7, 4, 5, 2, 2, 0, 0, 5, 4, 7},
                         {5, 3, 6, 3, 3, 3, 3, 0, 5, 5},
                         {4, 6, 6, 3, 3, 3, 3, 4, 0, 4},
                         {6, 4, 5, 3, 3, 3, 3, 5, 4, 0}},
                        2.0);
}

/// C' + (2/10) e e^T; entries / 10.
inline DenseMatrix example1_c() {
  return detail::scaled({{2, 22, 27, 17, 17, 17, 17, 27, 22, 32},
                         {22, 2, 22, 17, 17, 17, 17, 32, 32, 22},
                         {27, 27, 2, 17, 17, 17, 17, 32, 17, 27},
                         {37, 22, 27, 2, 2, 12, 12, 27, 22, 37},
                         {17, 22, 27, 32, 2, 12, 22, 27, 22, 17},
                         {17, 22, 27, 22, 12, 2, 32, 27, 22, 17},
                         {37, 22, 27, 12, 12, 2, 2, 27, 22, 37},
                         {27, 17, 32, 17, 17, 17, 17, 2, 27, 27},
                         {22, 32, 32, 17, 17, 17, 17, 22, 2, 22},
                         {32, 22, 27, 17, 17, 17, 17, 27, 22, 2}},
                        10.0);
}

inline SpectrumList example2_spectrum() {
  return SpectrumList::from_parts({10, 3}, {{1, 1}, {-2, 2}, {-2, 2}});
}

inline DenseMatrix example2_a1() { return DenseMatrix{{0, 0, 4}, {2, 0, 2}, {0, 4, 0}}; }

inline DenseMatrix example2_base() {
  return DenseMatrix{{4, 1, 0, 3}, {5.5, 3.5, 2.5, 6.5}, {6.5, 2.5, 3.5, 5.5}, {3, 0, 1, 4}};
}

inline DenseMatrix example2_matrix() {
  return DenseMatrix{{0, 0, 4, 1, 0, 0, 0, 3},     {2, 0, 2, 1, 0, 0, 0, 3},
                     {0, 4, 0, 1, 0, 0, 0, 3},     {5.5, 0, 0, 3.5, 2.5, 0, 0, 6.5},
                     {6.5, 0, 0, 2.5, 3.5, 0, 0, 5.5}, {3, 0, 0, 0, 1, 0, 4, 0},
                     {3, 0, 0, 0, 1, 2, 0, 2},     {3, 0, 0, 0, 1, 4, 0, 0}};
}

/// Lambda_0 = {10, 3, 1 +- i}, Lambda_1 = {-2 +- 2i}, Lambda_2 empty,
/// anchors (4, 7/2).
inline PartitionedProblem example2_partition(bool with_printed_blocks) {
  PartitionedProblem p;
  p.lambda0 = SpectrumList::from_parts({10, 3}, {{1, 1}});
  p.sublists = {SpectrumList::from_parts({}, {{-2, 2}}), SpectrumList{}};
  p.omegas = {4.0, 3.5};
  if (with_printed_blocks) {
    p.blocks = {example2_a1(), DenseMatrix{{3.5}}};
    p.base = example2_base();
  }
  return p;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"example1", "example2"};
  return n;
}

}  // namespace centro::fixtures
