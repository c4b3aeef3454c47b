#include <gtest/gtest.h>

#include <random>

#include "centro/centro.hpp"
#include "support.hpp"

using namespace centro;
using testing_support::spectrum_error;

namespace {

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error";
  return Error(Errc::InvalidInput, "none");
}

void expect_valid(const Realization& r, const SpectrumList& l, double tol = 1e-8) {
  const RealizationReport rep = verify_realization(r, l, tol);
  EXPECT_EQ(rep.centro_residual, 0.0);
  EXPECT_TRUE(rep.spectrum.matched) << rep.spectrum.max_distance;
  EXPECT_TRUE(rep.kind_holds()) << rep.nonneg_margin;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(RealCentro, OddSinglePair) {
  const SpectrumList l = SpectrumList::from_parts({1}, {{0, 1}});
  const Realization r = realize_real_centro(l);
  EXPECT_EQ(r.kind, RealizationKind::RealCentro);
  EXPECT_EQ(r.matrix.mat().rows(), 3u);
  expect_valid(r, l);
}

TEST(RealCentro, EvenOddPairs) {
  const SpectrumList l = SpectrumList::from_parts({2, 1}, {{0, 1}});
  const Realization r = realize_real_centro(l);
  EXPECT_EQ(r.matrix.mat().rows(), 4u);
  expect_valid(r, l);
}

TEST(RealCentro, AllReal) {
  const SpectrumList l = SpectrumList::from_reals({3, 2, 1});
  expect_valid(realize_real_centro(l), l);
}

TEST(RealCentro, TwoByTwoNeedsReals) {
  EXPECT_EQ(error_of([] { realize_real_centro(SpectrumList::from_parts({}, {{0, 1}})); }).code(),
            Errc::NotRealizableRealCentro);
}

TEST(RealCentro, RandomLists) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-4, 4);
  std::uniform_int_distribution<int> cnt(0, 5);
  int done = 0;
  for (int t = 0; t < 300; ++t) {
    const int nr = cnt(rng), np = cnt(rng);
    if (nr + 2 * np < 3) continue;
    if ((nr + 2 * np) % 2 == 0 && nr < 2 && np % 2 == 1) continue;  // no real centro realization
    std::vector<double> r(nr);
    std::vector<Complex> p(np);
    for (double& x : r) x = u(rng);
    for (Complex& z : p) z = {u(rng), 0.1 + std::abs(u(rng))};
    const SpectrumList l = SpectrumList::from_parts(r, p);
    expect_valid(realize_real_centro(l), l);
    ++done;
  }
  EXPECT_GT(done, 150);
}

// ---------------------------------------------------------------------------

TEST(NonnegReal, EvenHalfSums) {
  const Realization r = realize_nonneg_real(SpectrumList::from_reals({4, 3, 2, 1}));
  EXPECT_EQ(r.matrix.mat(), (DenseMatrix{{3, 0, 0, 1}, {0, 2, 1, 0}, {0, 1, 2, 0}, {1, 0, 0, 3}}));
  expect_valid(r, SpectrumList::from_reals({4, 3, 2, 1}), 1e-14);
}

TEST(NonnegReal, EqualValues) {
  const Realization r = realize_nonneg_real(SpectrumList::from_reals({5, 5, 5}));
  EXPECT_EQ(r.matrix.mat(), DenseMatrix::diagonal(std::vector<double>{5, 5, 5}));
}

TEST(NonnegReal, TwoByTwo) {
  EXPECT_EQ(realize_nonneg_real(SpectrumList::from_reals({1, 0})).matrix.mat(),
            (DenseMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(NonnegReal, RejectsNegative) {
  EXPECT_EQ(error_of([] { realize_nonneg_real(SpectrumList::from_reals({3, -1})); }).code(),
            Errc::NegativeEntryInList);
}

// ---------------------------------------------------------------------------

TEST(Perfect, MatrixOrderThree) {
  EXPECT_EQ(perfect_matrix(3), (DenseMatrix{{1, 1, 1}, {1, 1, -1}, {1, -1, 0}}));
}

TEST(Perfect, FirstColumnIsOnes) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const DenseMatrix p = perfect_matrix(n);
    const DenseMatrix pe = p.transpose();  // rows of P^T are columns of P
    for (double x : pe.row(0)) EXPECT_EQ(x, 1.0);
    EXPECT_EQ(numerical_rank(p), n);
  }
}

TEST(Perfect, DiagonalTwo) {
  const std::vector<double> d = perfect_diagonal(std::vector<double>{6, 2});
  EXPECT_EQ(d, (std::vector<double>{4, 4}));
  const DenseMatrix s = perfect_similarity(std::vector<double>{6, 2});
  EXPECT_NEAR(s(0, 0), 4.0, 1e-14);
  EXPECT_NEAR(s(1, 1), 4.0, 1e-14);
}

TEST(Perfect, DiagonalMatchesProduct) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0, 10);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> l(1 + t % 8);
    for (double& x : l) x = u(rng);
    std::sort(l.rbegin(), l.rend());
    const DenseMatrix s = perfect_similarity(l);
    const auto d = perfect_diagonal(l);
    for (std::size_t j = 0; j < l.size(); ++j) EXPECT_NEAR(s(j, j), d[j], 1e-10);
  }
}

TEST(Positive, FourByFour) {
  const SpectrumList l = SpectrumList::from_reals({6, 2, 1, 0});
  const Realization r = realize_positive(l);
  EXPECT_GT(nonneg_margin(r.matrix.mat()), 0.0);
  expect_valid(r, l);
}

TEST(Positive, OddOrders) {
  for (const auto& v : {std::vector<double>{3, 1, 0}, std::vector<double>{9, 4, 4, 1, 0}, std::vector<double>{2}}) {
    const SpectrumList l = SpectrumList::from_reals(v);
    const Realization r = realize_positive(l);
    EXPECT_GT(nonneg_margin(r.matrix.mat()), 0.0);
    expect_valid(r, l);
  }
}

TEST(Positive, NeedsStrictHead) {
  EXPECT_EQ(error_of([] { realize_positive(SpectrumList::from_reals({3, 3, 1})); }).code(), Errc::PerronNotStrict);
}

// ---------------------------------------------------------------------------

TEST(Obstruction, Examples) {
  EXPECT_TRUE(check_obstruction(SpectrumList::from_parts({4}, {{-2, 2}})));
  EXPECT_FALSE(check_obstruction(SpectrumList::from_parts({4, 1}, {{-2, 2}})));
  EXPECT_FALSE(check_obstruction(fixtures::example1_spectrum()));
  EXPECT_FALSE(check_obstruction(SpectrumList::from_parts({4}, {{-1, 1}, {-1, 1}})));
  EXPECT_TRUE(check_obstruction(SpectrumList::from_parts({9}, {{-1, 1}, {-1, 2}, {-1, 0.5}})));
}

TEST(Suleimanova, ExampleOne) {
  const Realization r = realize_suleimanova(fixtures::example1_spectrum());
  EXPECT_EQ(r.matrix.mat().rows(), 10u);
  EXPECT_EQ(r.kind, RealizationKind::NonnegCentro);
  expect_valid(r, fixtures::example1_spectrum());
  ASSERT_EQ(r.provenance.anchors.size(), 2u);
  EXPECT_EQ(r.provenance.anchors[0], 18.0);
  EXPECT_EQ(r.provenance.anchors[1], 2.0);
}

TEST(Suleimanova, RealFour) {
  const SpectrumList l = SpectrumList::from_reals({6, -1, -2, -3});
  expect_valid(realize_suleimanova(l), l);
}

TEST(Suleimanova, Zero) {
  const Realization r = realize_suleimanova(SpectrumList::from_reals({0, 0, 0, 0}));
  EXPECT_EQ(r.matrix.mat(), DenseMatrix(4, 4));
}

TEST(Suleimanova, Obstructed) {
  const Error e = error_of([] { realize_suleimanova(SpectrumList::from_parts({4}, {{-2, 2}})); });
  EXPECT_EQ(e.code(), Errc::ObstructedList);
}

TEST(Suleimanova, RandomLists) {
  std::mt19937_64 rng(41);
  int n = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t reals = 1 + t % 5, pairs = (t / 5) % 4;
    if (reals == 1 && pairs % 2 == 1) continue;
    const SpectrumList l = testing_support::random_suleimanova(rng, reals, pairs, 2.0);
    const Realization r = realize_suleimanova(l);
    expect_valid(r, l);
    ++n;
  }
  EXPECT_GT(n, 200);
}

// ---------------------------------------------------------------------------

TEST(FourByFour, NonnegativeCase) {
  const SpectrumList l = SpectrumList::from_reals({4, 3, 2, 1});
  expect_valid(realize_4x4_real(l), l);
}

TEST(FourByFour, TwoNegativesDisplay) {
  const SpectrumList l = SpectrumList::from_reals({5, 2, -3, -4});
  const Realization r = realize_4x4_real(l);
  const auto& blk = std::get<CentroBlocksEven>(split(r.matrix));
  // 1/2 [[0, 1], [-(l2 + l3)(l1 + l3), sum]]
  EXPECT_EQ(blk.a, (DenseMatrix{{0, 0.5}, {1, 0}}));
  expect_valid(r, l);
}

TEST(FourByFour, OneNegative) {
  const SpectrumList l = SpectrumList::from_reals({3, 2, 1, -3});
  expect_valid(realize_4x4_real(l), l);
}

TEST(FourByFour, NotRealizable) {
  EXPECT_EQ(error_of([] { realize_4x4_real(SpectrumList::from_reals({3, 1, -2, -4})); }).code(),
            Errc::NotRealizable4x4);
  EXPECT_EQ(error_of([] { realize_4x4_real(SpectrumList::from_reals({3, 3, 2, -5})); }).code(),
            Errc::NotRealizable4x4);
}

TEST(FourByFour, RandomReal) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1, 1);
  int ok = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> v{1, u(rng), u(rng), u(rng)};
    const SpectrumList l = SpectrumList::from_reals(v);
    if (l.sum() < 0) continue;
    try {
      const Realization r = realize_4x4_real(l);
      expect_valid(r, l);
      ++ok;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotRealizable4x4);
    }
  }
  EXPECT_GT(ok, 500);
}

TEST(FourByFourDiag, RealExample) {
  const Realization r = realize_4x4_diag_real({2, 0, 0, 0}, 1, 0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.matrix.mat()(i, i), (std::array<double, 4>{1, 0, 0, 1})[i]);
  expect_valid(r, SpectrumList::from_reals({2, 0, 0, 0}));
}

TEST(FourByFourDiag, RealSuleimanovaAlwaysWorks) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    const double l2 = -u(rng), l3 = -u(rng), l4 = -u(rng);
    const double l1 = -(l2 + l3 + l4) + u(rng);
    const double half = 0.5 * (l1 + l2 + l3 + l4);
    const double w1 = half * u(rng), w2 = half - w1;
    const Realization r = realize_4x4_diag_real({l1, l2, l3, l4}, w1, w2);
    const std::array<double, 4> w{w1, w2, w2, w1};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.matrix.mat()(i, i), w[i]);
    expect_valid(r, SpectrumList::from_reals({l1, l2, l3, l4}), 1e-9);
  }
}

TEST(FourByFourDiag, RealConditions) {
  auto label = [](auto f) { return error_of(f).detail(); };
  EXPECT_EQ(label([] { realize_4x4_diag_real({6, 1, -1, -2}, -0.5, 2.5); }), "i");
  EXPECT_EQ(label([] { realize_4x4_diag_real({6, 1, -1, -2}, 1, 1.5); }), "ii");
  EXPECT_EQ(label([] { realize_4x4_diag_real({6, 1, 2, -5}, 1, 1); }), "iii");
  EXPECT_EQ(label([] { realize_4x4_diag_real({6, 5, -5, -2}, 1, 1); }), "iv");
  EXPECT_EQ(error_of([] { realize_4x4_diag_real({6, 5, -5, -2}, 1, 1); }).code(), Errc::ConditionViolation);
}

TEST(FourByFourDiag, ComplexExampleTwoBase) {
  const Realization r = realize_4x4_diag_complex(10, 3, {1, 1}, 4, 3.5);
  EXPECT_EQ(r.matrix.mat(), fixtures::example2_base());
  expect_valid(r, SpectrumList::from_parts({10, 3}, {{1, 1}}));
}

TEST(FourByFourDiag, ComplexNeedsPair) {
  EXPECT_EQ(error_of([] { realize_4x4_diag_complex(10, 3, {1, 0}, 4, 3.5); }).code(), Errc::NotStrictlyComplex);
}

TEST(FourByFourDiag, ComplexConditions) {
  auto label = [](auto f) { return error_of(f).detail(); };
  EXPECT_EQ(label([] { realize_4x4_diag_complex(10, 9, {1, 1}, 5.5, 5.5); }), "pre");
  EXPECT_EQ(label([] { realize_4x4_diag_complex(10, 3, {1, 1}, -1, 8.5); }), "i");
  EXPECT_EQ(label([] { realize_4x4_diag_complex(10, 3, {1, 1}, 4, 4); }), "ii");
  EXPECT_EQ(label([] { realize_4x4_diag_complex(10, 3, {1, 1}, 7.5, 0); }), "iii");
  EXPECT_EQ(label([] { realize_4x4_diag_complex(10, 0, {3, 1}, 5.5, 2.5); }), "iv");
}

TEST(FourByFourDiag, ComplexSuleimanovaPair) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0, 1);
  int ok = 0;
  for (int t = 0; t < 300; ++t) {
    const double a = -u(rng), b = -a * u(rng) + 1e-3;
    const double l2 = u(rng) * 2;
    const double l1 = std::max({l2 + 2 * b, 2 * std::abs(a) - l2, -2 * a - l2}) + u(rng);
    const double half = 0.5 * (l1 + l2 + 2 * a);
    if (half < 0) continue;
    const double w1 = half * u(rng), w2 = half - w1;
    if ((2 * w1 - a) * (2 * w2 - a) < l1 * l2 + b * b) continue;
    const Realization r = realize_4x4_diag_complex(l1, l2, {a, b}, w1, w2);
    EXPECT_EQ(r.matrix.mat()(1, 1), w2);
    EXPECT_EQ(r.matrix.mat()(3, 3), w1);
    expect_valid(r, SpectrumList::from_parts({l1, l2}, {{a, b}}), 1e-9);
    ++ok;
  }
  EXPECT_GT(ok, 50);
}

// ---------------------------------------------------------------------------

TEST(Partitioned, ExampleTwoPrinted) {
  const Realization r = realize_partitioned(fixtures::example2_spectrum(), fixtures::example2_partition(true));
  EXPECT_EQ(r.matrix.mat(), fixtures::example2_matrix());
  expect_valid(r, fixtures::example2_spectrum());
}

TEST(Partitioned, ExampleTwoBuilt) {
  const Realization r = realize_partitioned(fixtures::example2_spectrum(), fixtures::example2_partition(false));
  expect_valid(r, fixtures::example2_spectrum());
}

TEST(Partitioned, EigenvectorColumns) {
  for (bool printed : {true, false}) {
    const auto as = assemble_partitioned(fixtures::example2_spectrum(), fixtures::example2_partition(printed));
    EXPECT_GE(nonneg_margin(as.x), 0.0);
    EXPECT_LT(max_abs_diff(as.a * as.x, as.x * DenseMatrix::diagonal(as.omega)), 1e-10);
    EXPECT_EQ(as.omega, (std::vector<double>{4, 3.5, 3.5, 4}));
  }
}

TEST(Partitioned, EmptySublistsGiveBase) {
  PartitionedProblem pr;
  pr.lambda0 = SpectrumList::from_parts({10, 3}, {{1, 1}});
  pr.sublists = {SpectrumList{}, SpectrumList{}};
  pr.omegas = {4, 3.5};
  const Realization r = realize_partitioned(pr.lambda0, pr);
  EXPECT_LT(max_abs_diff(r.matrix.mat(), fixtures::example2_base()), 1e-12);
}

TEST(Partitioned, EvenTwoBase) {
  const SpectrumList l = SpectrumList::from_parts({8, 2}, {{-2, 2}, {-2, 2}});
  PartitionedProblem pr;
  pr.lambda0 = SpectrumList::from_reals({8, 2});
  pr.sublists = {SpectrumList::from_parts({}, {{-2, 2}})};
  pr.omegas = {5};
  const Realization r = realize_partitioned(l, pr);
  EXPECT_EQ(r.matrix.mat().rows(), 6u);
  expect_valid(r, l);
}

TEST(Partitioned, OddBaseSupplied) {
  // p0 = 3 with a caller-supplied base of diagonal (7/2, 2, 7/2).
  const DenseMatrix base = realize_nonneg_real(SpectrumList::from_reals({6, 2, 1})).matrix.mat();
  ASSERT_EQ(base.diag(), (std::vector<double>{3.5, 2, 3.5}));
  for (const auto& mid : {SpectrumList::from_reals({-1}), SpectrumList::from_reals({-0.5, -0.5})}) {
    PartitionedProblem pr;
    pr.lambda0 = SpectrumList::from_reals({6, 2, 1});
    pr.sublists = {SpectrumList::from_parts({}, {{-1, 0.5}})};
    pr.omegas = {3.5};
    pr.middle = mid;
    pr.omega_mid = 2;
    pr.base = base;
    const SpectrumList l = merge({pr.lambda0, pr.sublists[0], pr.sublists[0], mid});
    const auto as = assemble_partitioned(l, pr);
    EXPECT_EQ(as.normalized, mid.size() % 2 == 1);
    EXPECT_GE(nonneg_margin(as.x), 0.0);
    EXPECT_LT(max_abs_diff(as.a * as.x, as.x * DenseMatrix::diagonal(as.omega)), 1e-10);
    expect_valid(realize_partitioned(l, pr), l);
  }
}

TEST(Partitioned, ParityMismatch) {
  PartitionedProblem pr = fixtures::example2_partition(false);
  pr.middle = SpectrumList::from_reals({1});
  EXPECT_EQ(error_of([&] { realize_partitioned(fixtures::example2_spectrum(), pr); }).code(),
            Errc::MiddleBlockParityMismatch);
}

TEST(Partitioned, ConditionLabels) {
  PartitionedProblem bad_block = fixtures::example2_partition(true);
  bad_block.blocks[0] = DenseMatrix{{0, 0, 4}, {2, 0, 2}, {0, 4, 1}};  // last row sums to 5

  PartitionedProblem bad_anchor = fixtures::example2_partition(false);
  bad_anchor.omegas = {1, 6.5};  // no 4x4 base with this diagonal
  EXPECT_EQ(error_of([&] { realize_partitioned(fixtures::example2_spectrum(), bad_anchor); }).detail(), "(ii)");
  EXPECT_EQ(error_of([&] { realize_partitioned(fixtures::example2_spectrum(), bad_block); }).detail(), "(i)");

  PartitionedProblem bad_base = fixtures::example2_partition(true);
  bad_base.base = fixtures::example2_base();
  (*bad_base.base)(0, 0) = 5;
  EXPECT_EQ(error_of([&] { realize_partitioned(fixtures::example2_spectrum(), bad_base); }).detail(), "(ii)");
}

// ---------------------------------------------------------------------------

TEST(Auto, ExampleOne) {
  const Realization r = auto_realize(fixtures::example1_spectrum());
  EXPECT_EQ(r.provenance.construction, Construction::Suleimanova);
  expect_valid(r, fixtures::example1_spectrum());
}

TEST(Auto, NonnegReals) {
  const Realization r = auto_realize(SpectrumList::from_reals({4, 3, 2, 1}));
  EXPECT_EQ(r.provenance.construction, Construction::NonnegReal);
}

TEST(Auto, ExampleTwo) {
  const Realization r = auto_realize(fixtures::example2_spectrum());
  EXPECT_EQ(r.provenance.construction, Construction::Partitioned);
  expect_valid(r, fixtures::example2_spectrum());
}

TEST(Auto, Obstructed) {
  const Error e = error_of([] { auto_realize(SpectrumList::from_parts({4}, {{-2, 2}})); });
  EXPECT_EQ(e.code(), Errc::ObstructedList);
  EXPECT_NE(std::string(e.what()).find(kObstructionCitation), std::string::npos);
}

TEST(Auto, FallsBackToRealCentro) {
  // Perron value does not dominate: no nonnegative matrix has this spectrum.
  const SpectrumList l = SpectrumList::from_reals({1, 2, -5});
  const Realization r = auto_realize(l);
  EXPECT_EQ(r.kind, RealizationKind::RealCentro);
  EXPECT_EQ(r.provenance.notes.back(), "not nonnegative");
}

TEST(Auto, WithDiagonal) {
  const Realization r = auto_realize(SpectrumList::from_parts({10, 3}, {{1, 1}}), DiagonalSpec{{4, 3.5, 3.5, 4}});
  EXPECT_EQ(r.matrix.mat(), fixtures::example2_base());
}

TEST(Auto, ObstructionNeverNonneg) {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 50; ++t) {
    const SpectrumList l = testing_support::random_suleimanova(rng, 1, 1 + 2 * (t % 3));
    EXPECT_EQ(error_of([&] { auto_realize(l); }).code(), Errc::ObstructedList);
  }
}
