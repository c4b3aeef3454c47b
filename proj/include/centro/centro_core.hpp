#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "centro/error.hpp"
#include "centro/matrix.hpp"

namespace centro {

/// Exchange matrix: ones on the antidiagonal.
inline DenseMatrix counteridentity(std::size_t n) {
  DenseMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  return j;
}

/// J M: rows reversed.
inline DenseMatrix flip_rows(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(m.rows() - 1 - i, j);
  return out;
}

/// M J: columns reversed.
inline DenseMatrix flip_cols(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, m.cols() - 1 - j);
  return out;
}

/// J M J: rotation by 180 degrees.
inline DenseMatrix rotate180(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(m.rows() - 1 - i, m.cols() - 1 - j);
  return out;
}

inline std::vector<double> reversed(std::vector<double> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

/// max |c_ij - c_{n-i+1, n-j+1}|; zero means exactly centrosymmetric.
inline double centro_residual(const DenseMatrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r = std::max(r, std::abs(m(i, j) - m(m.rows() - 1 - i, m.cols() - 1 - j)));
  return r;
}

/// Smallest entry; nonnegative matrices have margin >= 0.
inline double nonneg_margin(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (double x : m.data()) lo = std::min(lo, x);
  return lo;
}

inline double is_centrosymmetric(const DenseMatrix& m) { return centro_residual(m); }
inline double is_nonnegative(const DenseMatrix& m) { return nonneg_margin(m); }

/// Square matrix with c_ij == c_{n-i+1, n-j+1} holding bit-exactly.
class CentroMatrix {
 public:
  CentroMatrix() = default;

  explicit CentroMatrix(DenseMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) fail(Errc::DimensionMismatch, "centrosymmetric matrix must be square");
    if (centro_residual(mat_) != 0.0)
      fail(Errc::NotCentrosymmetric, "matrix is not exactly centrosymmetric");
  }

  const DenseMatrix& mat() const noexcept { return mat_; }
  std::size_t order() const noexcept { return mat_.rows(); }
  bool odd() const noexcept { return order() % 2 == 1; }
  std::size_t half() const noexcept { return order() / 2; }

 private:
  DenseMatrix mat_;
};

struct CentroBlocksEven {
  DenseMatrix a;
  DenseMatrix b;
};

struct CentroBlocksOdd {
  DenseMatrix a;
  DenseMatrix b;
  std::vector<double> x;
  std::vector<double> y;
  double c = 0.0;
};

using CentroBlocks = std::variant<CentroBlocksEven, CentroBlocksOdd>;

/// [[A, JBJ], [B, JAJ]].
inline CentroMatrix assemble_even(const CentroBlocksEven& blk) {
  const std::size_t m = blk.a.rows();
  if (!blk.a.is_square() || blk.b.rows() != m || blk.b.cols() != m)
    fail(Errc::DimensionMismatch, "even assembly needs square A and B of equal order");
  DenseMatrix c(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      c(i, j) = blk.a(i, j);
      c(2 * m - 1 - i, 2 * m - 1 - j) = blk.a(i, j);
      c(m + i, j) = blk.b(i, j);
      c(m - 1 - i, 2 * m - 1 - j) = blk.b(i, j);
    }
  return CentroMatrix(std::move(c));
}

/// [[A, x, JBJ], [y^T, c, y^T J], [B, Jx, JAJ]].
inline CentroMatrix assemble_odd(const CentroBlocksOdd& blk) {
  const std::size_t m = blk.a.rows();
  if (!blk.a.is_square() || blk.b.rows() != m || blk.b.cols() != m || blk.x.size() != m ||
      blk.y.size() != m)
    fail(Errc::DimensionMismatch, "odd assembly needs m x m blocks and m-vectors");
  const std::size_t n = 2 * m + 1;
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      c(i, j) = blk.a(i, j);
      c(n - 1 - i, n - 1 - j) = blk.a(i, j);
      c(m + 1 + i, j) = blk.b(i, j);
      c(m - 1 - i, n - 1 - j) = blk.b(i, j);
    }
  for (std::size_t i = 0; i < m; ++i) {
    c(i, m) = blk.x[i];
    c(n - 1 - i, m) = blk.x[i];
    c(m, i) = blk.y[i];
    c(m, n - 1 - i) = blk.y[i];
  }
  c(m, m) = blk.c;
  return CentroMatrix(std::move(c));
}

inline CentroMatrix assemble(const CentroBlocks& blocks) {
  return std::visit(
      [](const auto& b) -> CentroMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, CentroBlocksEven>)
          return assemble_even(b);
        else
          return assemble_odd(b);
      },
      blocks);
}

inline CentroBlocks split(const CentroMatrix& cm) {
  const DenseMatrix& c = cm.mat();
  const std::size_t m = cm.half();
  if (!cm.odd()) return CentroBlocksEven{c.block(0, 0, m, m), c.block(m, 0, m, m)};
  CentroBlocksOdd blk{c.block(0, 0, m, m), c.block(m + 1, 0, m, m), std::vector<double>(m),
                      std::vector<double>(m), c(m, m)};
  for (std::size_t i = 0; i < m; ++i) {
    blk.x[i] = c(i, m);
    blk.y[i] = c(m, i);
  }
  return blk;
}

inline CentroBlocks split(const DenseMatrix& c) { return split(CentroMatrix(c)); }

struct Reduced {
  DenseMatrix plus;   ///< A + JB, bordered by c, sqrt(2) x, sqrt(2) y in odd order
  DenseMatrix minus;  ///< A - JB
};

/// Orthogonally similar block pair. For odd order the border sits in the
/// top-left corner: [[c, sqrt2 y^T], [sqrt2 x, A + JB]].
inline Reduced reduce(const CentroMatrix& cm) {
  const CentroBlocks blocks = split(cm);
  if (const auto* e = std::get_if<CentroBlocksEven>(&blocks)) {
    const DenseMatrix jb = flip_rows(e->b);
    return {e->a + jb, e->a - jb};
  }
  const auto& o = std::get<CentroBlocksOdd>(blocks);
  const std::size_t m = o.a.rows();
  const DenseMatrix jb = flip_rows(o.b);
  const double r2 = std::sqrt(2.0);
  DenseMatrix plus(m + 1, m + 1);
  plus(0, 0) = o.c;
  for (std::size_t i = 0; i < m; ++i) {
    plus(0, i + 1) = r2 * o.y[i];
    plus(i + 1, 0) = r2 * o.x[i];
  }
  plus.set_block(1, 1, o.a + jb);
  return {std::move(plus), o.a - jb};
}

inline Reduced reduce(const DenseMatrix& c) { return reduce(CentroMatrix(c)); }

/// Inverse of reduce: A = (P + M)/2, B = J (P - M)/2, border unscaled by sqrt(2).
inline CentroMatrix inverse_reduce(const DenseMatrix& plus, const DenseMatrix& minus) {
  if (!plus.is_square() || !minus.is_square())
    fail(Errc::DimensionMismatch, "reduced blocks must be square");
  const std::size_t m = minus.rows();
  if (plus.rows() == m) {
    return assemble_even({0.5 * (plus + minus), 0.5 * flip_rows(plus - minus)});
  }
  if (plus.rows() != m + 1)
    fail(Errc::DimensionMismatch, "plus block must have the order of the minus block, or one more");
  const double r2 = std::sqrt(2.0);
  const DenseMatrix inner = plus.block(1, 1, m, m);
  CentroBlocksOdd blk{0.5 * (inner + minus), 0.5 * flip_rows(inner - minus), std::vector<double>(m),
                      std::vector<double>(m), plus(0, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    blk.x[i] = plus(i + 1, 0) / r2;
    blk.y[i] = plus(0, i + 1) / r2;
  }
  return assemble_odd(blk);
}

/// [[a, -b], [b, a]]: real block with eigenvalues a +- ib.
inline DenseMatrix rotation_block(double a, double b) { return DenseMatrix{{a, -b}, {b, a}}; }

}  // namespace centro
