#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centro/error.hpp"

namespace centro {

using Complex = std::complex<double>;

/// Relative tolerance used for conjugate matching and real detection.
inline constexpr double kSpectrumRelTol = 1e-12;

inline double spectrum_tol(Complex z) { return kSpectrumRelTol * (1.0 + std::abs(z)); }

inline bool is_real_value(Complex z) { return std::abs(z.imag()) <= spectrum_tol(z); }

/// Self-conjugate multiset of complex values.
///
/// Stored canonically: real entries sorted descending, and one
/// representative per conjugate pair (positive imaginary part) sorted by
/// descending real part then descending imaginary part.
class SpectrumList {
 public:
  SpectrumList() = default;

  explicit SpectrumList(const std::vector<Complex>& values) {
    std::vector<Complex> upper, lower;
    for (const Complex& z : values) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(Errc::InvalidInput, "spectrum entries must be finite");
      if (is_real_value(z))
        reals_.push_back(z.real());
      else if (z.imag() > 0)
        upper.push_back(z);
      else
        lower.push_back(z);
    }
    std::vector<bool> used(lower.size(), false);
    for (const Complex& z : upper) {
      const double tol = spectrum_tol(z);
      bool found = false;
      for (std::size_t k = 0; k < lower.size(); ++k) {
        if (used[k]) continue;
        const Complex& w = lower[k];
        if (std::abs(z.imag() + w.imag()) <= tol && std::abs(z.real() - w.real()) <= tol) {
          used[k] = true;
          found = true;
          break;
        }
      }
      if (!found) fail(Errc::NotConjugateClosed, "no conjugate partner for an entry with positive imaginary part");
      pairs_.push_back(z);
    }
    if (upper.size() != lower.size())
      fail(Errc::NotConjugateClosed, "unmatched entry with negative imaginary part");
    canonicalize();
  }

  /// Builds a list from already-separated parts; pair representatives must
  /// have positive imaginary part.
  static SpectrumList from_parts(std::vector<double> reals, std::vector<Complex> pairs) {
    SpectrumList s;
    for (const Complex& z : pairs)
      if (!(z.imag() > 0)) fail(Errc::InvalidInput, "pair representative needs Im > 0");
    s.reals_ = std::move(reals);
    s.pairs_ = std::move(pairs);
    s.canonicalize();
    return s;
  }

  static SpectrumList from_reals(std::vector<double> reals) { return from_parts(std::move(reals), {}); }

  const std::vector<double>& reals() const noexcept { return reals_; }
  const std::vector<Complex>& pairs() const noexcept { return pairs_; }
  std::size_t real_count() const noexcept { return reals_.size(); }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  std::size_t size() const noexcept { return reals_.size() + 2 * pairs_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool all_real() const noexcept { return pairs_.empty(); }

  /// Canonical expansion: reals (descending), then z, conj(z) per pair.
  std::vector<Complex> values() const {
    std::vector<Complex> v;
    v.reserve(size());
    for (double r : reals_) v.emplace_back(r, 0.0);
    for (const Complex& z : pairs_) {
      v.push_back(z);
      v.push_back(std::conj(z));
    }
    return v;
  }

  double sum() const {
    double s = 0.0;
    for (double r : reals_) s += r;
    for (const Complex& z : pairs_) s += 2.0 * z.real();
    return s;
  }

  double max_modulus() const {
    double m = 0.0;
    for (double r : reals_) m = std::max(m, std::abs(r));
    for (const Complex& z : pairs_) m = std::max(m, std::abs(z));
    return m;
  }

  /// The largest real entry when it dominates every modulus in the list.
  std::optional<double> perron() const {
    if (reals_.empty()) return std::nullopt;
    const double head = reals_.front();
    if (head < 0) return std::nullopt;
    if (head + spectrum_tol(head) < max_modulus()) return std::nullopt;
    return head;
  }

  bool operator==(const SpectrumList&) const = default;

 private:
  void canonicalize() {
    std::sort(reals_.begin(), reals_.end(), std::greater<>());
    std::sort(pairs_.begin(), pairs_.end(), [](const Complex& a, const Complex& b) {
      if (a.real() != b.real()) return a.real() > b.real();
      return a.imag() > b.imag();
    });
  }

  std::vector<double> reals_;
  std::vector<Complex> pairs_;
};

/// Multiset union of lists.
inline SpectrumList merge(const std::vector<SpectrumList>& lists) {
  std::vector<double> reals;
  std::vector<Complex> pairs;
  for (const auto& l : lists) {
    reals.insert(reals.end(), l.reals().begin(), l.reals().end());
    pairs.insert(pairs.end(), l.pairs().begin(), l.pairs().end());
  }
  return SpectrumList::from_parts(std::move(reals), std::move(pairs));
}

// ---------------------------------------------------------------------------
// Classification

enum class SuleimanovaKind { RealSuleimanova, ComplexSuleimanova, NotSuleimanova };

inline std::string to_string(SuleimanovaKind k) {
  switch (k) {
    case SuleimanovaKind::RealSuleimanova: return "RealSuleimanova";
    case SuleimanovaKind::ComplexSuleimanova: return "ComplexSuleimanova";
    case SuleimanovaKind::NotSuleimanova: return "NotSuleimanova";
  }
  return "?";
}

struct SuleimanovaTag {
  SuleimanovaKind kind = SuleimanovaKind::NotSuleimanova;
  std::size_t r_real = 0;
  std::size_t m_pairs = 0;
};

/// Membership in the region Re z <= 0, |Re z| >= |Im z| (boundary inclusive).
inline bool in_suleimanova_region(Complex z) {
  const double tol = spectrum_tol(z);
  return z.real() <= tol && std::abs(z.real()) + tol >= std::abs(z.imag());
}

inline SuleimanovaTag classify(const SpectrumList& list) {
  SuleimanovaTag tag{SuleimanovaKind::NotSuleimanova, list.real_count(), list.pair_count()};
  if (list.reals().empty() || list.reals().front() < 0) return tag;
  for (std::size_t i = 1; i < list.reals().size(); ++i)
    if (!in_suleimanova_region({list.reals()[i], 0.0})) return tag;
  for (const Complex& z : list.pairs())
    if (!in_suleimanova_region(z)) return tag;
  tag.kind = list.all_real() ? SuleimanovaKind::RealSuleimanova : SuleimanovaKind::ComplexSuleimanova;
  return tag;
}

/// Overload for raw input; throws NotConjugateClosed when closure fails.
inline SuleimanovaTag classify(const std::vector<Complex>& values) { return classify(SpectrumList(values)); }

// ---------------------------------------------------------------------------
// Partitions

enum class Parity { EvenP0, OddP0 };

struct Partition {
  /// Two-way splits: {Lambda_1, Lambda_2}. Block partitions: {Lambda_0,
  /// Lambda_1, ..., Lambda_k[, middle]} where each non-middle Lambda_k>0
  /// occurs twice in the parent list.
  std::vector<SpectrumList> sublists;
  std::vector<double> anchors;
  Parity parity = Parity::EvenP0;
  /// Set when the Perron value was replaced by the negated tail sum; the
  /// first sublist then starts with this head instead of the original one.
  std::optional<double> replaced_head;
};

namespace detail {

inline SpectrumList take(const std::vector<double>& reals, std::size_t r0, std::size_t nr,
                         const std::vector<Complex>& pairs, std::size_t p0, std::size_t np) {
  return SpectrumList::from_parts(std::vector<double>(reals.begin() + r0, reals.begin() + r0 + nr),
                                  std::vector<Complex>(pairs.begin() + p0, pairs.begin() + p0 + np));
}

}  // namespace detail

/// Two self-conjugate halves whose block-diagonal real forms reassemble into
/// a real centrosymmetric matrix. The first half has ceil(n/2) entries.
inline Partition split_for_real_centro(const SpectrumList& list) {
  const std::size_t n = list.size();
  if (n < 3) fail(Errc::InvalidInput, "real centrosymmetric split needs n >= 3");
  const std::size_t r = list.real_count();
  const std::size_t m = list.pair_count();
  const std::size_t h1 = (n + 1) / 2;

  std::size_t k1 = 0;  // pairs placed in the first half
  if (n % 2 == 0) {
    if (m % 2 == 0) {
      k1 = m / 2;
    } else {
      // Each half has odd size n/2 and therefore needs a real entry.
      if (r < 2)
        fail(Errc::NotRealizableRealCentro,
             "even order with an odd number of conjugate pairs and no real entries: "
             "both halves have odd size and no real eigenvalue to place");
      k1 = m / 2;
    }
  } else {
    k1 = (m + 1) / 2;
  }
  const std::size_t r1 = h1 - 2 * k1;
  Partition p;
  p.parity = n % 2 == 0 ? Parity::EvenP0 : Parity::OddP0;
  p.sublists.push_back(detail::take(list.reals(), 0, r1, list.pairs(), 0, k1));
  p.sublists.push_back(detail::take(list.reals(), r1, r - r1, list.pairs(), k1, m - k1));
  return p;
}

/// Split of the list with its Perron value replaced by the negated tail sum,
/// following the case analysis on the parity of the real count and of the
/// number of conjugate pairs. Pairs are handed to the first half in order of
/// descending imaginary part.
inline Partition split_suleimanova(const SpectrumList& list, const SuleimanovaTag& tag) {
  if (tag.kind == SuleimanovaKind::NotSuleimanova)
    fail(Errc::InvalidInput, "list is not of Suleimanova type");
  const std::size_t r = list.real_count();
  const std::size_t m = list.pair_count();
  if (r == 0) fail(Errc::InvalidInput, "Suleimanova list needs a real Perron value");
  if (r == 1 && m % 2 == 1)
    fail(Errc::ObstructedList,
         "one real eigenvalue with an odd number of conjugate pairs cannot be the spectrum of a "
         "centrosymmetric nonnegative matrix");

  std::vector<double> tail(list.reals().begin() + 1, list.reals().end());
  std::vector<Complex> pairs = list.pairs();
  std::stable_sort(pairs.begin(), pairs.end(), [](const Complex& a, const Complex& b) {
    if (a.imag() != b.imag()) return a.imag() > b.imag();
    return a.real() > b.real();
  });

  double tail_sum = 0.0;
  for (double x : tail) tail_sum += x;
  for (const Complex& z : pairs) tail_sum += 2.0 * z.real();
  const double head = -tail_sum;

  // t1: tail reals joining the head in the first half; k1: pairs in it.
  std::size_t t1 = 0, k1 = 0;
  const std::size_t t = tail.size();
  if (r % 2 == 0) {
    if (m % 2 == 0) {
      t1 = r / 2 - 1;
      k1 = m / 2;
    } else {
      t1 = r / 2;
      k1 = m / 2;
    }
  } else {
    if (m % 2 == 0) {
      t1 = (r + 1) / 2 - 1;
      k1 = m / 2;
    } else {
      // r >= 3 here: the first half keeps one element more than the second.
      t1 = (r + 1) / 2;
      k1 = m / 2;
    }
  }

  std::vector<double> first_reals{head};
  first_reals.insert(first_reals.end(), tail.begin(), tail.begin() + t1);
  Partition p;
  p.parity = list.size() % 2 == 0 ? Parity::EvenP0 : Parity::OddP0;
  p.replaced_head = head;
  p.sublists.push_back(SpectrumList::from_parts(
      std::move(first_reals), std::vector<Complex>(pairs.begin(), pairs.begin() + k1)));
  p.sublists.push_back(SpectrumList::from_parts(std::vector<double>(tail.begin() + t1, tail.begin() + t),
                                                std::vector<Complex>(pairs.begin() + k1, pairs.end())));
  return p;
}

}  // namespace centro
