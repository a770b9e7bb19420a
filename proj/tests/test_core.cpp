#include <random>

#include <gtest/gtest.h>

#include "gardner/g_matrix.hpp"
#include "gardner/trick.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gardner;
using test_support::ints;
using test_support::sample_board;

namespace {

oracle::Board to_board(const SquareMatrix<long long>& m) {
  oracle::Board b(m.size(), std::vector<long long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) b[i][j] = m(i, j);
  }
  return b;
}

SquareMatrix<long long> random_small(std::size_t d, long long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> pick(0, hi);
  SquareMatrix<long long> m(d);
  for (auto& x : m.entries()) x = pick(rng);
  return m;
}

// Random addition table with small labels; half of them get one entry bumped.
SquareMatrix<long long> random_table_or_near_miss(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> label(0, 4);
  std::vector<long long> lambda(d), mu(d);
  for (auto& x : lambda) x = label(rng);
  for (auto& x : mu) x = label(rng);
  SquareMatrix<long long> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = mu[i] + lambda[j];
  }
  if (rng() % 2) {
    std::uniform_int_distribution<std::size_t> pos(0, d * d - 1);
    m.entries()[pos(rng)] += (rng() % 2) ? 1 : -1;
  }
  return m;
}

}  // namespace

TEST(PermutationSum, SampleBoardIdentity) {
  EXPECT_EQ(permutation_sum(sample_board(), Permutation::identity(5)), 57);
}

TEST(PermutationSum, ZeroAndOnes) {
  for (std::size_t d = 1; d <= 5; ++d) {
    for_each_permutation(d, [&](const Permutation& s) {
      EXPECT_EQ(permutation_sum(IntMatrix::zero(d), s), 0);
      EXPECT_EQ(permutation_sum(IntMatrix::ones(d), s), static_cast<long>(d));
    });
  }
}

TEST(PermutationSum, DimensionMismatch) {
  EXPECT_THROW(permutation_sum(IntMatrix::zero(3), Permutation::identity(2)), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
  EXPECT_EQ(Permutation::from_one_based({2, 1}).to_string(), "(2 1)");
}

TEST(BruteForceCheck, Examples) {
  EXPECT_EQ(is_g_matrix_bruteforce(sample_board()), Integer(57));
  EXPECT_FALSE(is_g_matrix_bruteforce(IntMatrix{{1, 0}, {0, 0}}));
  // lambda = (3, 0), mu = (0, 2): the placements cover 3 + 2 and 0 + 5.
  const IntMatrix table{{3, 0}, {5, 2}};
  EXPECT_EQ(table(0, 0) + table(1, 1), 5);
  EXPECT_EQ(table(0, 1) + table(1, 0), 5);
  EXPECT_EQ(is_g_matrix_bruteforce(table), Integer(5));
}

TEST(BruteForceCheck, NegativeEntryRejected) {
  // Constant permutation sums but a negative entry.
  EXPECT_FALSE(is_g_matrix_bruteforce(IntMatrix{{-1, 0}, {2, 3}}));
}

TEST(BruteForceCheck, FactorialGuard) {
  EXPECT_THROW(is_g_matrix_bruteforce(IntMatrix::zero(10)), GuardExceeded);
  EXPECT_THROW(is_g_matrix_bruteforce(IntMatrix::zero(4), 3), GuardExceeded);
  EXPECT_EQ(is_g_matrix_bruteforce(IntMatrix::zero(4), 4), Integer(0));
}

TEST(FastCheck, Examples) {
  auto board = is_g_matrix_fast(sample_board());
  ASSERT_TRUE(board);
  EXPECT_EQ(*board.value, 57);
  EXPECT_FALSE(board.witness);

  auto zero = is_g_matrix_fast(IntMatrix::zero(4));
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero.value, 0);

  auto identity = is_g_matrix_fast(IntMatrix::identity(2));
  ASSERT_FALSE(identity);
  ASSERT_TRUE(identity.witness);
  EXPECT_EQ(identity.witness->quadruple, (Quadruple{1, 1, 2, 2}));
  EXPECT_EQ(identity.witness->first, Permutation::identity(2));
  EXPECT_EQ(identity.witness->second, Permutation::from_one_based({2, 1}));
  EXPECT_EQ(identity.witness->first_sum, 2);
  EXPECT_EQ(identity.witness->second_sum, 0);
}

TEST(FastCheck, SideOneAlwaysTropical) {
  EXPECT_EQ(*is_g_matrix_fast(IntMatrix{{7}}).value, 7);
  auto neg = is_g_matrix_fast(IntMatrix{{-1}});
  EXPECT_FALSE(neg);
  EXPECT_TRUE(neg.negative_entry);
}

TEST(FastCheck, AgreesWithBruteForceExhaustively) {
  // Every matrix with entries in {0..3} for d = 2, 3.
  for (std::size_t d : {2u, 3u}) {
    SquareMatrix<long long> m(d, 0);
    auto e = m.entries();
    std::size_t checked = 0;
    for (;;) {
      const auto fast = is_g_matrix_fast(m);
      const auto slow = is_g_matrix_bruteforce(m);
      ASSERT_EQ(fast.value, slow) << m;
      const long long independent = oracle::common_permutation_sum(to_board(m));
      ASSERT_EQ(fast.value.value_or(-1), independent) << m;
      ++checked;
      std::size_t k = 0;
      while (k < e.size() && e[k] == 3) e[k++] = 0;
      if (k == e.size()) break;
      ++e[k];
    }
    EXPECT_EQ(checked, d == 2 ? 256u : 262144u);
  }
}

TEST(FastCheck, AgreesWithBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(20240607);
  std::size_t positives = 0;
  for (std::size_t d : {4u, 5u}) {
    for (int trial = 0; trial < 10000; ++trial) {
      const auto m = (trial % 2) ? random_small(d, 3, rng) : random_table_or_near_miss(d, rng);
      const auto fast = is_g_matrix_fast(m);
      ASSERT_EQ(fast.value, is_g_matrix_bruteforce(m)) << m;
      positives += fast.value.has_value();
    }
  }
  // The near-miss generator must actually exercise the positive branch.
  EXPECT_GT(positives, 1000u);
}

TEST(FastCheck, WitnessSoundness) {
  std::mt19937_64 rng(7);
  std::size_t witnesses = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t d = 2 + trial % 5;
    const auto m = random_table_or_near_miss(d, rng);
    const auto r = is_g_matrix_fast(m);
    if (!r.witness) continue;
    ++witnesses;
    const auto& w = *r.witness;
    EXPECT_NE(permutation_sum(m, w.first), permutation_sum(m, w.second));
    EXPECT_EQ(permutation_sum(m, w.first), w.first_sum);
    EXPECT_EQ(permutation_sum(m, w.second), w.second_sum);
    // The two placements differ by exactly one transposition.
    std::size_t differing = 0;
    for (std::size_t i = 0; i < d; ++i) differing += w.first(i) != w.second(i);
    EXPECT_EQ(differing, 2u);
    const auto [i, j, k, l] = w.quadruple;
    EXPECT_NE(m(i - 1, j - 1) + m(k - 1, l - 1), m(i - 1, l - 1) + m(k - 1, j - 1));
  }
  EXPECT_GT(witnesses, 500u);
}

TEST(FastCheck, ValueZeroRigidity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = random_table_or_near_miss(1 + trial % 5, rng);
    const auto r = is_g_matrix_fast(m);
    if (r.value && *r.value == 0) {
      EXPECT_EQ(m, SquareMatrix<long long>::zero(m.size()));
    }
  }
  EXPECT_FALSE(is_g_matrix_fast(SquareMatrix<long long>{{1, -1}, {-1, 1}}));
}

TEST(Decompose, SampleBoard) {
  const auto labels = decompose_canonical(GMatrix::certify(sample_board()));
  EXPECT_EQ(labels.lambda(), ints({12, 1, 4, 18, 0}));
  EXPECT_EQ(labels.mu(), ints({7, 0, 4, 9, 2}));
  EXPECT_TRUE(labels.is_canonical());
  EXPECT_EQ(labels.total(), 57);
}

TEST(Decompose, ZeroAndOnes) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto zero = decompose_canonical(GMatrix::certify(IntMatrix::zero(d)));
    EXPECT_EQ(zero.lambda(), std::vector<Integer>(d, 0));
    EXPECT_EQ(zero.mu(), std::vector<Integer>(d, 0));
    const auto ones = decompose_canonical(GMatrix::certify(IntMatrix::ones(d)));
    EXPECT_EQ(ones.lambda(), std::vector<Integer>(d, 1));
    EXPECT_EQ(ones.mu(), std::vector<Integer>(d, 0));
  }
}

TEST(Decompose, RowsFirstIsTheMirror) {
  const auto labels = decompose_canonical(GMatrix::certify(sample_board()), DecompositionOrder::RowsFirst);
  // Row minima 7 0 4 9 2, then column minima of the remainder 12 1 4 18 0
  // shifted so the smallest column label is 0.
  EXPECT_EQ(labels.mu(), ints({7, 0, 4, 9, 2}));
  EXPECT_EQ(labels.lambda(), ints({12, 1, 4, 18, 0}));
  const auto shifted = decompose_canonical(GMatrix::certify(IntMatrix{{3, 4}, {3, 4}}),
                                           DecompositionOrder::RowsFirst);
  EXPECT_EQ(shifted.mu(), ints({3, 3}));
  EXPECT_EQ(shifted.lambda(), ints({0, 1}));
  EXPECT_FALSE(shifted.is_canonical());
}

TEST(Compose, Examples) {
  const auto board = compose(Labeling(ints({12, 1, 4, 18, 0}), ints({7, 0, 4, 9, 2})));
  EXPECT_EQ(board.matrix(), sample_board());
  EXPECT_EQ(board.value(), 57);

  const auto zero = compose(Labeling(ints({0, 0, 0}), ints({0, 0, 0})));
  EXPECT_EQ(zero.matrix(), IntMatrix::zero(3));
  EXPECT_EQ(zero.value(), 0);

  const auto small = compose(Labeling(ints({1, 0}), ints({0, 2})));
  EXPECT_EQ(small.matrix(), (IntMatrix{{1, 0}, {3, 2}}));
  EXPECT_EQ(small.value(), 3);
  EXPECT_EQ(is_g_matrix_bruteforce(small.matrix()), Integer(3));
}

TEST(Compose, RejectsNegativeLabels) {
  EXPECT_THROW(Labeling(ints({-1, 0}), ints({0, 0})), std::invalid_argument);
  EXPECT_THROW(Labeling(ints({1, 0}), ints({0, -2})), std::invalid_argument);
  EXPECT_THROW(Labeling(ints({1}), ints({0, 0})), std::invalid_argument);
}

TEST(GMatrixType, CertifyRejectsAndExplains) {
  try {
    GMatrix::certify(IntMatrix::identity(2));
    FAIL() << "identity accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(1 2) and (2 1)"), std::string::npos) << e.what();
  }
  EXPECT_FALSE(GMatrix::try_certify(IntMatrix::identity(3)));
}

TEST(RoundTrip, ComposeAfterDecompose) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t d = 1 + trial % 6;
    const auto board = trick_generate(d, rng() % 60, TrickMode::Quick, rng());
    EXPECT_EQ(compose(decompose_canonical(board)), board);
  }
}

TEST(RoundTrip, DecomposeAfterComposeOnCanonicalLabelings) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> label(0, 30);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t d = 1 + trial % 6;
    std::vector<Integer> lambda, mu;
    for (std::size_t k = 0; k < d; ++k) {
      lambda.emplace_back(label(rng));
      mu.emplace_back(label(rng));
    }
    mu[rng() % d] = 0;
    const Labeling l(lambda, mu);
    EXPECT_EQ(decompose_canonical(compose(l)), l);
  }
}

TEST(RoundTrip, RowsFirstAlsoReconstructs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto board = trick_generate(1 + trial % 6, rng() % 40, TrickMode::Uniform, rng());
    const auto labels = decompose_canonical(board, DecompositionOrder::RowsFirst);
    EXPECT_EQ(compose(labels), board);
    EXPECT_EQ(*std::min_element(labels.lambda().begin(), labels.lambda().end()), 0);
  }
}

TEST(Scale, SampleBoardToValueOne) {
  const auto point = scale(GMatrix::certify(sample_board()), Rational(1, 57));
  EXPECT_EQ(point.value(), 1);
  EXPECT_EQ(point(0, 0), Rational(1, 3));
  EXPECT_EQ(*is_g_matrix_fast(point.matrix()).value, 1);
  for (const auto& x : point.matrix().entries()) EXPECT_LE(x, 1);
}

TEST(Scale, ZeroAndBarycenter) {
  EXPECT_EQ(scale(GMatrix::certify(IntMatrix::zero(3)), Rational(5, 7)).matrix(), RationalMatrix::zero(3));
  const auto bary = scale(GMatrix::certify(IntMatrix::ones(4)), Rational(1, 4));
  EXPECT_EQ(bary.value(), 1);
  EXPECT_EQ(bary(2, 3), Rational(1, 4));
}

TEST(Scale, RejectsNonpositiveFactor) {
  const auto g = GMatrix::certify(IntMatrix::ones(2));
  EXPECT_THROW(scale(g, Rational(0)), std::invalid_argument);
  EXPECT_THROW(scale(g, Rational(-1, 2)), std::invalid_argument);
}

TEST(Scale, ValueScalesLinearly) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = trick_generate(1 + trial % 5, rng() % 50, TrickMode::Uniform, rng());
    const Rational c = abs(random_rational(rng, 50, 50)) + Rational(1, 1000);
    EXPECT_EQ(*is_g_matrix_fast(scale(g, c).matrix()).value, c * Rational(g.value()));
  }
}

TEST(Trick, DegenerateSizes) {
  for (auto mode : {TrickMode::Uniform, TrickMode::Quick}) {
    EXPECT_EQ(trick_generate(1, 7, mode, 99).matrix(), (IntMatrix{{7}}));
    EXPECT_EQ(trick_generate(2, 0, mode, 99).matrix(), IntMatrix::zero(2));
  }
  EXPECT_THROW(trick_generate(0, 3, TrickMode::Uniform, 1), std::invalid_argument);
}

TEST(Trick, PostConditionAndDeterminism) {
  for (auto mode : {TrickMode::Uniform, TrickMode::Quick}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto board = trick_generate(5, 57, mode, seed);
      EXPECT_EQ(*is_g_matrix_fast(board.matrix()).value, 57);
      EXPECT_EQ(board, trick_generate(5, 57, mode, seed));
    }
  }
}

TEST(Trick, LargeValuesStayFast) {
  const auto board = trick_generate(6, 1'000'000'000'000ULL, TrickMode::Uniform, 5);
  EXPECT_EQ(board.value(), Integer("1000000000000"));
}

TEST(Trick, UniformModeHitsEveryBoardEvenly) {
  // d = 2, N = 2 has (N + 1)^2 = 9 boards.
  std::map<std::vector<long>, int> histogram;
  const int draws = 90000;
  for (int s = 0; s < draws; ++s) {
    const auto board = trick_generate(2, 2, TrickMode::Uniform, static_cast<std::uint64_t>(s));
    std::vector<long> key;
    for (const auto& x : board.matrix().entries()) key.push_back(x.get_si());
    ++histogram[key];
  }
  ASSERT_EQ(histogram.size(), 9u);
  // Chi-square with 8 degrees of freedom; 26.12 is the 0.999 quantile.
  const double expected = draws / 9.0;
  double chi2 = 0;
  for (const auto& [key, count] : histogram) chi2 += (count - expected) * (count - expected) / expected;
  EXPECT_LT(chi2, 26.12);
}

TEST(Trick, RandomCompositionSumsAndCovers) {
  std::mt19937_64 rng(1);
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int k = 0; k < 20000; ++k) {
    auto c = random_composition(3, 3, rng);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0] + c[1] + c[2], 3u);
    ++seen[c];
  }
  EXPECT_EQ(seen.size(), 10u);  // C(5, 2) compositions
}
