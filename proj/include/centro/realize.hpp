#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centro/centro_core.hpp"
#include "centro/eigen.hpp"
#include "centro/error.hpp"
#include "centro/matrix.hpp"
#include "centro/perturb.hpp"
#include "centro/realization.hpp"
#include "centro/spectra.hpp"
#include "centro/verify.hpp"

namespace centro {

inline constexpr const char* kObstructionCitation =
    "Theorem: one real eigenvalue with an odd number of conjugate pairs";

struct DiagonalSpec {
  std::vector<double> entries;

  bool palindromic() const {
    const std::size_t n = entries.size();
    for (std::size_t i = 0; i < n / 2; ++i)
      if (entries[i] != entries[n - 1 - i]) return false;
    return true;
  }
  double sum() const {
    double s = 0.0;
    for (double w : entries) s += w;
    return s;
  }
};

namespace detail {

inline double list_scale(const SpectrumList& list) {
  return std::max(1.0, list.max_modulus()) * static_cast<double>(std::max<std::size_t>(list.size(), 1));
}

/// diag(reals) followed by one rotation block per pair.
inline DenseMatrix real_block_form(const SpectrumList& list) {
  std::vector<DenseMatrix> blocks;
  for (double r : list.reals()) blocks.push_back(DenseMatrix{{r}});
  for (const Complex& z : list.pairs()) blocks.push_back(rotation_block(z.real(), z.imag()));
  return direct_sum(blocks);
}

/// Entry-by-entry average with the 180-degree mirror; a no-op on exactly
/// centrosymmetric input.
inline DenseMatrix mirror_average(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = 0.5 * (m(i, j) + m(r - 1 - i, c - 1 - j));
  return out;
}

inline Realization make(CentroMatrix m, RealizationKind kind, Construction c, std::string statement,
                        std::vector<SpectrumList> partition = {}) {
  Realization r{std::move(m), kind, {}};
  r.provenance.construction = c;
  r.provenance.statement = std::move(statement);
  r.provenance.partition = std::move(partition);
  return r;
}

inline bool perron_dominant(const SpectrumList& list, bool strict = false) {
  if (list.reals().empty()) return false;
  const double head = list.reals().front();
  const double tol = 1e-12 * list_scale(list);
  for (double r : std::vector<double>(list.reals().begin() + 1, list.reals().end()))
    if (strict ? std::abs(r) >= head : std::abs(r) > head + tol) return false;
  for (const Complex& z : list.pairs())
    if (strict ? std::abs(z) >= head : std::abs(z) > head + tol) return false;
  return head >= 0.0;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real centrosymmetric

/// Real centrosymmetric matrix for any self-conjugate list of order >= 3
/// (and real lists of order 1 or 2). Entries may be negative.
inline Realization realize_real_centro(const SpectrumList& list) {
  const std::size_t n = list.size();
  if (n == 0) fail(Errc::InvalidInput, "empty list");
  std::vector<SpectrumList> halves;
  if (n < 3) {
    if (!list.all_real())
      fail(Errc::NotRealizableRealCentro, "a 2x2 centrosymmetric matrix has real eigenvalues");
    const auto& r = list.reals();
    halves = {SpectrumList::from_reals({r[0]}),
              SpectrumList::from_reals(std::vector<double>(r.begin() + 1, r.end()))};
  } else {
    halves = split_for_real_centro(list).sublists;
  }
  CentroMatrix c = inverse_reduce(detail::real_block_form(halves[0]), detail::real_block_form(halves[1]));
  const bool nonneg = nonneg_margin(c.mat()) >= 0.0;
  Realization out = detail::make(std::move(c), RealizationKind::RealCentro, Construction::RealCentro,
                                 "real block forms of the two halves, reassembled", halves);
  if (!nonneg) out.provenance.notes.push_back("not nonnegative");
  return out;
}

// ---------------------------------------------------------------------------
// Nonnegative real lists

inline Realization realize_nonneg_real(const SpectrumList& list) {
  if (!list.all_real()) fail(Errc::InvalidInput, "list must be real");
  if (list.empty()) fail(Errc::InvalidInput, "empty list");
  const auto& l = list.reals();
  for (double x : l)
    if (x < 0.0) fail(Errc::NegativeEntryInList, "negative entry in a nonnegative list");
  const std::size_t n = l.size();
  const std::size_t m = n / 2;
  std::vector<double> plus, minus;
  if (n % 2 == 0) {
    plus.assign(l.begin(), l.begin() + m);
  } else {
    plus.push_back(l[m]);
    plus.insert(plus.end(), l.begin(), l.begin() + m);
  }
  minus.assign(l.begin() + (n - m), l.end());
  CentroMatrix c = inverse_reduce(DenseMatrix::diagonal(plus), DenseMatrix::diagonal(minus));
  return detail::make(std::move(c), RealizationKind::NonnegCentro, Construction::NonnegReal,
                      "diagonal half-sum and half-difference blocks",
                      {SpectrumList::from_reals(plus), SpectrumList::from_reals(minus)});
}

// ---------------------------------------------------------------------------
// Positive realizations

/// Rows: all ones, then row i has ones up to column n-1-i and -1 at n-i.
inline DenseMatrix perfect_matrix(std::size_t n) {
  DenseMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(0, j) = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j + i < n; ++j) p(i, j) = 1.0;
    p(i, n - i) = -1.0;
  }
  return p;
}

/// Diagonal of P diag(lambda) P^{-1} by its closed form.
inline std::vector<double> perfect_diagonal(std::span<const double> lambda) {
  const std::size_t k = lambda.size();
  std::vector<double> d(k, 0.0);
  if (k == 0) return d;
  if (k == 1) {
    d[0] = lambda[0];
    return d;
  }
  for (std::size_t j = 2; j <= k; ++j) {
    const std::size_t s = k - j + 2;
    double v = lambda[0] / std::ldexp(1.0, static_cast<int>(s - 1));
    for (std::size_t i = 2; i <= s; ++i) v += lambda[i - 1] / std::ldexp(1.0, static_cast<int>(s - i + 1));
    d[j - 1] = v;
  }
  d[0] = d[1];
  return d;
}

inline DenseMatrix perfect_similarity(std::span<const double> lambda) {
  const DenseMatrix p = perfect_matrix(lambda.size());
  return p * DenseMatrix::diagonal(lambda) * inverse(p);
}

/// Strictly positive centrosymmetric matrix for a nonnegative real list with
/// a strictly dominant head.
inline Realization realize_positive(const SpectrumList& list) {
  if (!list.all_real()) fail(Errc::InvalidInput, "list must be real");
  if (list.empty()) fail(Errc::InvalidInput, "empty list");
  const auto& l = list.reals();
  for (double x : l)
    if (x < 0.0) fail(Errc::NegativeEntryInList, "negative entry in a nonnegative list");
  const std::size_t n = l.size();
  if (n == 1) {
    if (!(l[0] > 0.0)) fail(Errc::InvalidInput, "the 1x1 zero matrix is not positive");
    return detail::make(CentroMatrix(DenseMatrix{{l[0]}}), RealizationKind::PositiveCentro,
                        Construction::PositivePerfect, "1x1");
  }
  if (!(l[0] > l[1])) fail(Errc::PerronNotStrict, "head must strictly exceed the second entry");
  const std::size_t m = n / 2;
  const std::size_t k = n - m;
  const std::vector<double> first(l.begin(), l.begin() + k);
  const std::vector<double> second(l.begin() + k, l.end());
  DenseMatrix pdp = perfect_similarity(first);
  if (n % 2 == 1) {
    // Move the last index to the front, where the border lives.
    DenseMatrix moved(k, k);
    auto idx = [k](std::size_t i) { return i == 0 ? k - 1 : i - 1; };
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) moved(i, j) = pdp(idx(i), idx(j));
    pdp = std::move(moved);
  }
  CentroMatrix c = inverse_reduce(pdp, DenseMatrix::diagonal(second));
  return detail::make(std::move(c), RealizationKind::PositiveCentro, Construction::PositivePerfect,
                      "Perfect similarity P D P^-1 on the leading half",
                      {SpectrumList::from_reals(first), SpectrumList::from_reals(second)});
}

// ---------------------------------------------------------------------------
// Obstruction and Suleimanova lists

inline bool check_obstruction(const SpectrumList& list) {
  return list.real_count() == 1 && list.pair_count() % 2 == 1;
}

[[noreturn]] inline void fail_obstructed() {
  fail(Errc::ObstructedList,
       std::string(kObstructionCitation) +
           ": a list with exactly one real entry and an odd number of conjugate pairs is not the "
           "spectrum of any centrosymmetric nonnegative matrix");
}

inline Realization realize_suleimanova(const SpectrumList& list) {
  const SuleimanovaTag tag = classify(list);
  if (tag.kind == SuleimanovaKind::NotSuleimanova) fail(Errc::InvalidInput, "list is not of Suleimanova type");
  if (list.sum() < -1e-12 * detail::list_scale(list)) fail(Errc::InvalidInput, "list has negative sum");
  if (check_obstruction(list)) fail_obstructed();
  const std::size_t n = list.size();
  if (n == 1)
    return detail::make(CentroMatrix(DenseMatrix{{list.reals()[0]}}), RealizationKind::NonnegCentro,
                        Construction::Suleimanova, "1x1");

  const Partition part = split_suleimanova(list, tag);
  const SpectrumList& first = part.sublists[0];
  const SpectrumList& second = part.sublists[1];
  const DenseMatrix minus = detail::real_block_form(second);
  std::vector<double> omega;
  if (n % 2 == 1) omega.push_back(0.0);
  for (std::size_t i = 0; i < minus.rows(); ++i) omega.push_back(minus(i, i) == 0.0 ? 0.0 : -minus(i, i));
  const DenseMatrix plus = realize_with_diagonal(first, omega);
  const CentroMatrix base = inverse_reduce(plus, minus);
  const double eps = std::max(0.0, list.reals().front() - *part.replaced_head);
  Realization out = detail::make(perron_bump(base, eps), RealizationKind::NonnegCentro,
                                 Construction::Suleimanova,
                                 "negated tail sum as head, prescribed-diagonal half, Perron bump",
                                 part.sublists);
  out.provenance.anchors = {*part.replaced_head, eps};
  return out;
}

// ---------------------------------------------------------------------------
// 4x4 closed forms

inline Realization realize_4x4_real(const SpectrumList& list) {
  if (!list.all_real() || list.size() != 4) fail(Errc::InvalidInput, "need four real values");
  const auto& l = list.reals();
  const double tol = 1e-12 * detail::list_scale(list);
  if (list.sum() < -tol) fail(Errc::NotRealizable4x4, "negative sum");
  if (!detail::perron_dominant(list)) fail(Errc::NotRealizable4x4, "head does not dominate");
  const double l1 = l[0], l2 = l[1], l3 = l[2], l4 = l[3];
  auto tag4 = [](Realization r, const char* which) {
    r.provenance.construction = Construction::FourByFourReal;
    r.provenance.notes.push_back(which);
    return r;
  };
  if (l4 >= 0.0) return tag4(realize_nonneg_real(list), "case 1: nonnegative");
  if (l2 <= 0.0) return tag4(realize_suleimanova(list), "case 2: Suleimanova");
  DenseMatrix plus, minus;
  const char* which = nullptr;
  if (l3 >= 0.0 || l2 + l3 >= 0.0) {
    plus = DenseMatrix{{l1, 0.0}, {0.0, l2}};
    minus = DenseMatrix{{l4, 0.0}, {0.0, l3}};
    which = l3 >= 0.0 ? "case 3: one negative" : "case 4: two negatives, l2 + l3 >= 0";
  } else {
    const double s = l1 + l2 + l3;
    plus = DenseMatrix{{-l3, 1.0}, {-l3 * s - l1 * l2, s}};
    minus = DenseMatrix{{l3, 0.0}, {0.0, l4}};
    which = "case 4: two negatives, l2 + l3 < 0";
  }
  CentroMatrix c = inverse_reduce(plus, minus);
  if (nonneg_margin(c.mat()) < 0.0) fail(Errc::NotRealizable4x4, "closed form produced a negative entry");
  Realization r = detail::make(std::move(c), RealizationKind::NonnegCentro, Construction::FourByFourReal,
                               "4x4 real closed form",
                               {SpectrumList::from_reals({l1, l2}), SpectrumList::from_reals({l3, l4})});
  r.provenance.notes.push_back(which);
  return r;
}

namespace detail {

inline void require(bool ok, const char* label, const std::string& what) {
  if (!ok) fail(Errc::ConditionViolation, std::string("condition ") + label + " violated: " + what, label);
}

inline Realization diag4(const DenseMatrix& a, const DenseMatrix& b, Construction c, std::string statement,
                         std::vector<SpectrumList> parts, double w1, double w2) {
  Realization r = make(assemble_even({a, b}), RealizationKind::NonnegCentro, c, std::move(statement),
                       std::move(parts));
  r.provenance.anchors = {w1, w2};
  return r;
}

}  // namespace detail

/// Four reals (l1 the Perron value, order otherwise as given) and diagonal
/// (w1, w2, w2, w1).
inline Realization realize_4x4_diag_real(const std::array<double, 4>& l, double w1, double w2) {
  const double l1 = l[0], l2 = l[1], l3 = l[2], l4 = l[3];
  const double scale = 4.0 * std::max({1.0, std::abs(l1), std::abs(l2), std::abs(l3), std::abs(l4)});
  const double tol = 1e-12 * scale;
  if (l1 + l2 + l3 + l4 < -tol) fail(Errc::InvalidInput, "negative sum");
  for (int j = 1; j < 4; ++j)
    if (std::abs(l[j]) > l1 + tol) fail(Errc::InvalidInput, "head does not dominate");
  detail::require(0.0 <= w1 && w1 <= l1 && 0.0 <= w2 && w2 <= l1, "i", "0 <= w_k <= l1");
  detail::require(std::abs(w1 + w2 - 0.5 * (l1 + l2 + l3 + l4)) <= tol, "ii", "w1 + w2 = sum / 2");
  detail::require(w1 >= l3 && w2 >= l4, "iii", "w1 >= l3 and w2 >= l4");
  const double k = (2.0 * w1 - l3) * (2.0 * w2 - l4) - l1 * l2;
  detail::require(k >= -tol * scale, "iv", "(2w1 - l3)(2w2 - l4) >= l1 l2");
  const double kh = std::max(0.0, 0.5 * k);
  const DenseMatrix a{{w1, 0.5}, {kh, w2}};
  const DenseMatrix b{{kh, w2 - l4}, {w1 - l3, 0.5}};
  return detail::diag4(a, b, Construction::FourByFourDiagReal, "4x4 real list with prescribed diagonal",
                       {SpectrumList::from_reals({l1, l2}), SpectrumList::from_reals({l3, l4})}, w1, w2);
}

/// {l1, l2, a + ib, a - ib} with b > 0 and diagonal (w1, w2, w2, w1).
inline Realization realize_4x4_diag_complex(double l1, double l2, Complex z, double w1, double w2) {
  const double a = z.real();
  const double b = std::abs(z.imag());
  if (!(b > 0.0)) fail(Errc::NotStrictlyComplex, "the pair must have nonzero imaginary part");
  const double scale = 4.0 * std::max({1.0, std::abs(l1), std::abs(l2), std::abs(z)});
  const double tol = 1e-12 * scale;
  detail::require(l1 + l2 - 2.0 * std::abs(a) >= -tol && l1 - l2 - 2.0 * b >= -tol, "pre",
                  "l1 + l2 >= 2|a| and l1 - l2 >= 2b");
  detail::require(0.0 <= w1 && w1 <= l1 && 0.0 <= w2 && w2 <= l1, "i", "0 <= w_k <= l1");
  detail::require(std::abs(w1 + w2 - 0.5 * (l1 + l2 + 2.0 * a)) <= tol, "ii", "w1 + w2 = (l1 + l2 + 2a) / 2");
  const double k = (2.0 * w1 - a) * (2.0 * w2 - a) - l1 * l2;
  detail::require(k - b * b >= -tol * scale, "iii", "(2w1 - a)(2w2 - a) >= l1 l2 + b^2");
  detail::require(w1 >= a && w2 >= a, "iv", "w_k >= a");
  const DenseMatrix am{{w1, 1.0}, {std::max(0.0, 0.5 * (k - b * b)), w2}};
  const DenseMatrix bm{{0.5 * (k + b * b), w2 - a}, {w1 - a, 0.0}};
  return detail::diag4(am, bm, Construction::FourByFourDiagComplex,
                       "4x4 list with one conjugate pair and prescribed diagonal",
                       {SpectrumList::from_reals({l1, l2}), SpectrumList::from_parts({}, {Complex(a, b)})}, w1,
                       w2);
}

// ---------------------------------------------------------------------------
// Block-partitioned construction

/// Lambda = Lambda_0 + 2 (Lambda_1 + ... + Lambda_h) [+ middle]. Blocks and
/// base may be supplied; otherwise they are built here.
struct PartitionedProblem {
  SpectrumList lambda0;
  std::vector<SpectrumList> sublists;  ///< Lambda_1..Lambda_h, h = floor(p0 / 2)
  std::vector<double> omegas;          ///< w_1..w_h
  std::optional<SpectrumList> middle;  ///< odd p0 only
  std::optional<double> omega_mid;
  std::optional<DenseMatrix> base;                  ///< p0 x p0, spectrum Lambda_0
  std::vector<std::optional<DenseMatrix>> blocks;   ///< A_1..A_h, each in CS_{w_k}
  std::optional<DenseMatrix> middle_block;          ///< centrosymmetric, spectrum Gamma_mid
};

struct PartitionedAssembly {
  DenseMatrix a;        ///< block diagonal of A_k, A_mid, J A_k J
  DenseMatrix x;        ///< n x p0 eigenvector columns
  DenseMatrix cmat;     ///< p0 x n (A + X C) or p0 x p0 (A + X C X^T)
  DenseMatrix base;     ///< B, p0 x p0
  std::vector<double> omega;  ///< diagonal of B, palindromic
  bool normalized = false;    ///< even-order middle block: X^T X = I
};

namespace detail {

/// Nonnegative matrix in CS_w with spectrum {w} + tail, tail in the
/// Suleimanova region.
inline DenseMatrix constant_row_sum_block(const SpectrumList& tail, double w) {
  const SuleimanovaTag tag = classify(merge({SpectrumList::from_reals({w}), tail}));
  if (tag.kind == SuleimanovaKind::NotSuleimanova || w + tail.sum() < -1e-12 * list_scale(tail))
    fail(Errc::ConditionViolation, "no constant row sum block for a sublist", "(i)");
  const RowSumForm core = trace_zero_row_sum_realize(tail);
  const std::size_t k = tail.size() + 1;
  const double shift = (w - core.alpha) / static_cast<double>(k);
  DenseMatrix out = core.matrix;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) += shift;
  return out;
}

inline void check_block(const DenseMatrix& blk, const SpectrumList& gamma, double w, bool centro) {
  if (!blk.is_square() || blk.rows() != gamma.size())
    fail(Errc::ConditionViolation, "sub-realizer has the wrong order", "(i)");
  if (nonneg_margin(blk) < 0.0) fail(Errc::ConditionViolation, "sub-realizer is not nonnegative", "(i)");
  if (centro && centro_residual(blk) != 0.0)
    fail(Errc::ConditionViolation, "middle sub-realizer is not centrosymmetric", "(i)");
  if (!match_spectra(gamma, eigenvalues(blk)).matched)
    fail(Errc::ConditionViolation, "sub-realizer spectrum differs from its list", "(i)");
  if (!centro)
    for (double s : row_sums(blk))
      if (std::abs(s - w) > 1e-10 * std::max(1.0, std::abs(w)))
        fail(Errc::ConditionViolation, "sub-realizer does not have constant row sums", "(i)");
}

inline DenseMatrix build_base(const PartitionedProblem& pr, const std::vector<double>& omega) {
  const std::size_t p0 = pr.lambda0.size();
  const SpectrumList& l0 = pr.lambda0;
  if (p0 == 1) return DenseMatrix{{l0.reals()[0]}};
  if (p0 == 2 && l0.all_real()) {
    const double lead = l0.reals()[0], mu = l0.reals()[1];
    return DenseMatrix{{omega[0], 0.5 * (lead - mu)}, {0.5 * (lead - mu), omega[1]}};
  }
  if (p0 == 4) {
    try {
      if (l0.all_real()) {
        const auto& r = l0.reals();
        return realize_4x4_diag_real({r[0], r[1], r[2], r[3]}, omega[0], omega[1]).matrix.mat();
      }
      if (l0.pair_count() == 1)
        return realize_4x4_diag_complex(l0.reals()[0], l0.reals()[1], l0.pairs()[0], omega[0], omega[1])
            .matrix.mat();
    } catch (const Error& e) {
      fail(Errc::ConditionViolation, std::string("base block: ") + e.what(), "(ii)");
    }
  }
  fail(Errc::ConditionViolation, "no built-in construction for the base block; supply one", "(ii)");
}

}  // namespace detail

inline PartitionedAssembly assemble_partitioned(const SpectrumList& list, const PartitionedProblem& pr) {
  const std::size_t p0 = pr.lambda0.size();
  if (p0 == 0) fail(Errc::InvalidInput, "Lambda_0 is empty");
  const bool odd = p0 % 2 == 1;
  const std::size_t h = p0 / 2;
  if (odd != pr.middle.has_value())
    fail(Errc::MiddleBlockParityMismatch, "a middle sublist is required exactly when p0 is odd");
  if (pr.sublists.size() != h || pr.omegas.size() != h)
    fail(Errc::InvalidInput, "need floor(p0/2) sublists and as many diagonal anchors");
  if (!pr.blocks.empty() && pr.blocks.size() != h) fail(Errc::InvalidInput, "blocks must match sublists");
  if (pr.lambda0.reals().empty() || list.reals().empty() ||
      std::abs(pr.lambda0.reals().front() - list.reals().front()) > 1e-12 * detail::list_scale(list))
    fail(Errc::InvalidInput, "Lambda_0 must contain the Perron value");
  {
    std::vector<SpectrumList> parts{pr.lambda0};
    for (const auto& s : pr.sublists) {
      parts.push_back(s);
      parts.push_back(s);
    }
    if (pr.middle) parts.push_back(*pr.middle);
    const auto joined = merge(parts).values();
    const auto want = list.values();
    if (joined.size() != want.size() || !match_spectra(want, joined, 1e-10 * detail::list_scale(list)).matched)
      fail(Errc::InvalidInput, "partition does not reproduce the list");
  }

  // Middle block first: its Perron value may fix w_mid.
  std::optional<DenseMatrix> mid;
  std::vector<double> y;
  double w_mid = 0.0;
  if (odd) {
    if (pr.middle_block) {
      mid = *pr.middle_block;
      w_mid = pr.omega_mid ? *pr.omega_mid : perron_vector(*mid).value;
    } else {
      if (!pr.omega_mid && pr.middle->empty())
        w_mid = pr.lambda0.reals().front();
      else if (!pr.omega_mid)
        fail(Errc::InvalidInput, "middle anchor needed to build the middle block");
      else
        w_mid = *pr.omega_mid;
      const SpectrumList gamma = merge({SpectrumList::from_reals({w_mid}), *pr.middle});
      if (gamma.size() == 1) {
        mid = DenseMatrix{{w_mid}};
      } else {
        try {
          mid = gamma.reals().back() >= 0.0 && gamma.all_real() ? realize_nonneg_real(gamma).matrix.mat()
                                                                : realize_suleimanova(gamma).matrix.mat();
        } catch (const Error& e) {
          fail(Errc::ConditionViolation, std::string("middle block: ") + e.what(), "(i)");
        }
      }
    }
    detail::check_block(*mid, merge({SpectrumList::from_reals({w_mid}), *pr.middle}), w_mid, true);
    const PerronData pd = perron_vector(*mid);
    if (!pd.symmetric) fail(Errc::PerronVectorNotSymmetric, "middle block has no symmetric Perron vector");
    y = pd.vector;
  }

  std::vector<double> omega(p0);
  for (std::size_t k = 0; k < h; ++k) omega[k] = omega[p0 - 1 - k] = pr.omegas[k];
  if (odd) omega[h] = w_mid;
  for (std::size_t k = 0; k < h; ++k)
    if (!(pr.omegas[k] >= 0.0 && pr.omegas[k] <= list.reals().front() + 1e-12 * detail::list_scale(list)))
      fail(Errc::ConditionViolation, "anchor outside [0, Perron value]", "(i)");

  DenseMatrix base;
  if (pr.base) {
    base = *pr.base;
    if (!base.is_square() || base.rows() != p0)
      fail(Errc::ConditionViolation, "base block has the wrong order", "(ii)");
    if (centro_residual(base) != 0.0 || nonneg_margin(base) < 0.0)
      fail(Errc::ConditionViolation, "base block must be centrosymmetric nonnegative", "(ii)");
    for (std::size_t i = 0; i < p0; ++i)
      if (std::abs(base(i, i) - omega[i]) > 1e-10 * std::max(1.0, std::abs(omega[i])))
        fail(Errc::ConditionViolation, "base diagonal differs from the anchors", "(ii)");
  } else {
    base = detail::build_base(pr, omega);
  }
  if (!match_spectra(pr.lambda0, eigenvalues(base)).matched)
    fail(Errc::ConditionViolation, "base block spectrum differs from Lambda_0", "(ii)");
  for (std::size_t i = 0; i < p0; ++i) omega[i] = base(i, i);

  // Sub-realizers A_k in CS_{w_k}.
  std::vector<DenseMatrix> blocks(h);
  for (std::size_t k = 0; k < h; ++k) {
    const SpectrumList gamma = merge({SpectrumList::from_reals({omega[k]}), pr.sublists[k]});
    blocks[k] = (!pr.blocks.empty() && pr.blocks[k]) ? *pr.blocks[k]
                                                      : detail::constant_row_sum_block(pr.sublists[k], omega[k]);
    detail::check_block(blocks[k], gamma, omega[k], false);
  }

  std::vector<DenseMatrix> diag_blocks;
  std::vector<std::size_t> start;
  std::size_t n = 0;
  auto push = [&](DenseMatrix b) {
    start.push_back(n);
    n += b.rows();
    diag_blocks.push_back(std::move(b));
  };
  for (std::size_t k = 0; k < h; ++k) push(blocks[k]);
  if (odd) push(*mid);
  for (std::size_t k = h; k-- > 0;) push(rotate180(blocks[k]));
  if (n != list.size()) fail(Errc::InvalidInput, "block orders do not add up to n");

  PartitionedAssembly out;
  out.a = direct_sum(diag_blocks);
  out.base = base;
  out.omega = omega;
  out.normalized = odd && mid->rows() % 2 == 0;
  out.x = DenseMatrix(n, p0);
  for (std::size_t c = 0; c < p0; ++c) {
    const std::size_t s = diag_blocks[c].rows();
    const bool is_mid = odd && c == h;
    const double norm = out.normalized ? (is_mid ? std::sqrt(detail::dot(y, y)) : std::sqrt(double(s))) : 1.0;
    for (std::size_t i = 0; i < s; ++i) out.x(start[c] + i, c) = (is_mid ? y[i] : 1.0) / norm;
  }

  DenseMatrix bw = base;
  for (std::size_t i = 0; i < p0; ++i) bw(i, i) = 0.0;  // B - Omega, diagonal exact
  if (out.normalized) {
    out.cmat = bw;
  } else {
    out.cmat = DenseMatrix(p0, n);
    for (std::size_t c = 0; c < p0; ++c) {
      const std::size_t s = diag_blocks[c].rows();
      std::size_t col = 0;
      double scale = 1.0;
      if (odd && c == h) {
        col = start[c] + s / 2;
        scale = y[s / 2];
        if (!(scale > 0.0)) fail(Errc::ZeroPerronComponent, "middle Perron vector vanishes at its centre");
      } else {
        col = c < h ? start[c] : start[c] + s - 1;
      }
      for (std::size_t i = 0; i < p0; ++i) out.cmat(i, col) = bw(i, c) / scale;
    }
  }
  return out;
}

inline Realization realize_partitioned(const SpectrumList& list, const PartitionedProblem& pr) {
  const PartitionedAssembly as = assemble_partitioned(list, pr);
  const DenseMatrix update = as.normalized ? as.cmat * as.x.transpose() : as.cmat;
  const DenseMatrix m = detail::mirror_average(rado_update(as.a, as.x, update));
  std::vector<SpectrumList> parts{pr.lambda0};
  parts.insert(parts.end(), pr.sublists.begin(), pr.sublists.end());
  if (pr.middle) parts.push_back(*pr.middle);
  Realization r = detail::make(CentroMatrix(m), RealizationKind::NonnegCentro, Construction::Partitioned,
                               as.normalized ? "block partition, symmetric update A + X C X^T"
                                             : "block partition, eigenvector update A + X C",
                               std::move(parts));
  r.provenance.anchors = as.omega;
  return r;
}

// ---------------------------------------------------------------------------
// Dispatcher

namespace detail {

/// Half of every value occurring an even number of times, and the rest.
inline std::pair<SpectrumList, SpectrumList> split_doubled(const SpectrumList& list) {
  std::vector<double> half_r, rest_r;
  const auto& r = list.reals();
  for (std::size_t i = 0; i < r.size();) {
    std::size_t j = i;
    while (j < r.size() && std::abs(r[j] - r[i]) <= spectrum_tol(r[i])) ++j;
    const std::size_t cnt = j - i;
    for (std::size_t t = 0; t < cnt / 2; ++t) half_r.push_back(r[i]);
    if (cnt % 2) rest_r.push_back(r[i]);
    i = j;
  }
  std::vector<Complex> half_p, rest_p;
  const auto& p = list.pairs();
  std::vector<bool> used(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (used[i]) continue;
    std::size_t cnt = 0;
    for (std::size_t j = i; j < p.size(); ++j)
      if (!used[j] && std::abs(p[j] - p[i]) <= spectrum_tol(p[i])) {
        used[j] = true;
        ++cnt;
      }
    for (std::size_t t = 0; t < cnt / 2; ++t) half_p.push_back(p[i]);
    if (cnt % 2) rest_p.push_back(p[i]);
  }
  return {SpectrumList::from_parts(half_r, half_p), SpectrumList::from_parts(rest_r, rest_p)};
}

/// Lambda_0 = the unpaired part (with the Perron value), p0 in {2, 4};
/// the doubled part in a single sublist; anchors scanned upward from the
/// smallest admissible value.
inline Realization partition_heuristic(const SpectrumList& list) {
  if (!perron_dominant(list)) fail(Errc::InvalidInput, "Perron value does not dominate");
  auto [half, rest] = split_doubled(list);
  const double lead = list.reals().front();
  if (rest.reals().empty() || rest.reals().front() != lead) {
    // The Perron value was paired off; move one copy of it back.
    std::vector<double> hr = half.reals();
    auto it = std::find(hr.begin(), hr.end(), lead);
    if (it == hr.end()) fail(Errc::InvalidInput, "no unpaired Perron value");
    hr.erase(it);
    std::vector<double> rr = rest.reals();
    rr.push_back(lead);
    rr.push_back(lead);
    half = SpectrumList::from_parts(hr, half.pairs());
    rest = SpectrumList::from_parts(rr, rest.pairs());
  }
  const std::size_t p0 = rest.size();
  if (p0 != 2 && p0 != 4) fail(Errc::InvalidInput, "unpaired part has " + std::to_string(p0) + " entries");
  if (half.empty()) fail(Errc::InvalidInput, "nothing to pair");
  const double lo = std::max(0.0, -half.sum());
  std::vector<std::string> tried;
  if (p0 == 2) {
    if (!rest.all_real()) fail(Errc::InvalidInput, "2x2 base needs real entries");
    const double w = 0.5 * rest.sum();
    PartitionedProblem pr{rest, {half}, {w}, std::nullopt, std::nullopt, std::nullopt, {}, std::nullopt};
    return realize_partitioned(list, pr);
  }
  const double total = 0.5 * rest.sum();
  const double hi = std::min(lead, total);
  constexpr int kSteps = 32;
  for (int swap = 0; swap < 2; ++swap) {
    for (int s = 0; s <= kSteps; ++s) {
      const double w_sub = lo + (hi - lo) * s / kSteps;
      const double w_free = total - w_sub;
      if (w_sub > hi || w_free < 0.0) continue;
      PartitionedProblem pr;
      pr.lambda0 = rest;
      if (swap == 0) {
        pr.sublists = {half, SpectrumList{}};
        pr.omegas = {w_sub, w_free};
      } else {
        pr.sublists = {SpectrumList{}, half};
        pr.omegas = {w_free, w_sub};
      }
      try {
        return realize_partitioned(list, pr);
      } catch (const Error&) {
      }
    }
  }
  fail(Errc::InvalidInput, "no admissible anchors found");
}

inline Realization realize_4x4_auto(const SpectrumList& list, const std::optional<DiagonalSpec>& diag) {
  if (list.size() != 4) fail(Errc::InvalidInput, "not a 4x4 problem");
  if (!diag) {
    if (list.all_real()) return realize_4x4_real(list);
    if (list.pair_count() == 1) {
      const double l1 = list.reals()[0], l2 = list.reals()[1];
      const Complex z = list.pairs()[0];
      const double total = 0.5 * (l1 + l2 + 2.0 * z.real());
      constexpr int kSteps = 64;
      for (int s = 0; s <= kSteps; ++s) {
        const double w1 = total * s / kSteps;
        try {
          return realize_4x4_diag_complex(l1, l2, z, w1, total - w1);
        } catch (const Error&) {
        }
      }
    }
    fail(Errc::InvalidInput, "no 4x4 closed form applies");
  }
  const auto& w = diag->entries;
  if (w.size() != 4 || !diag->palindromic()) fail(Errc::InvalidInput, "diagonal must be (w1, w2, w2, w1)");
  if (list.all_real()) {
    const auto& r = list.reals();
    // Head first; try each ordering of the remaining three.
    std::array<double, 3> t{r[1], r[2], r[3]};
    std::sort(t.begin(), t.end());
    std::optional<Error> last;
    do {
      try {
        return realize_4x4_diag_real({r[0], t[0], t[1], t[2]}, w[0], w[1]);
      } catch (const Error& e) {
        last = e;
      }
    } while (std::next_permutation(t.begin(), t.end()));
    throw *last;
  }
  if (list.pair_count() == 1)
    return realize_4x4_diag_complex(list.reals()[0], list.reals()[1], list.pairs()[0], w[0], w[1]);
  fail(Errc::InvalidInput, "two conjugate pairs have no 4x4 closed form here");
}

}  // namespace detail

/// First construction that applies and passes the oracle check.
inline Realization auto_realize(const SpectrumList& list, const std::optional<DiagonalSpec>& diag = std::nullopt) {
  if (list.empty()) fail(Errc::InvalidInput, "empty list");
  if (check_obstruction(list)) fail_obstructed();

  std::vector<std::string> attempts;
  auto attempt = [&](const char* name, auto&& build) -> std::optional<Realization> {
    try {
      Realization r = build();
      const RealizationReport rep = verify_realization(r, list);
      if (rep.accepted()) return r;
      attempts.push_back(std::string(name) + ": oracle rejected the result");
    } catch (const Error& e) {
      attempts.push_back(std::string(name) + ": " + e.what());
    }
    return std::nullopt;
  };
  auto finish = [&]() -> Realization {
    std::string msg = "no construction applies";
    for (const auto& a : attempts) msg += "; " + a;
    fail(Errc::NoApplicableConstruction, msg);
  };

  if (diag) {
    if (auto r = attempt("4x4-diag", [&] { return detail::realize_4x4_auto(list, diag); })) return *r;
    return finish();
  }
  const bool nonneg_reals = list.all_real() && list.reals().back() >= 0.0;
  if (nonneg_reals) {
    if (auto r = attempt("nonneg-real", [&] { return realize_nonneg_real(list); })) return *r;
    if (auto r = attempt("positive", [&] { return realize_positive(list); })) return *r;
  }
  if (classify(list).kind != SuleimanovaKind::NotSuleimanova)
    if (auto r = attempt("suleimanova", [&] { return realize_suleimanova(list); })) return *r;
  if (list.size() == 4)
    if (auto r = attempt("4x4", [&] { return detail::realize_4x4_auto(list, std::nullopt); })) return *r;
  if (auto r = attempt("partitioned", [&] { return detail::partition_heuristic(list); })) return *r;
  if (auto r = attempt("real-centro", [&] { return realize_real_centro(list); })) return *r;
  return finish();
}

}  // namespace centro
