#include <random>

#include <gtest/gtest.h>

#include "gardner/duality.hpp"
#include "gardner/polytope.hpp"
#include "gardner/trick.hpp"
#include "test_support.hpp"

using namespace gardner;
using linalg::RationalVector;
using test_support::frac;

namespace {

AffineSubspace random_subspace(std::size_t ambient, std::mt19937_64& rng) {
  for (;;) {
    RationalVector q(ambient);
    for (auto& x : q) x = random_rational(rng, 5, 6);
    std::vector<RationalVector> spanning(rng() % ambient);
    for (auto& v : spanning) {
      v.resize(ambient);
      for (auto& x : v) x = (rng() % 3 == 0) ? Rational(0) : random_rational(rng, 4, 5);
    }
    const auto l = AffineSubspace::from_spanning_set(q, spanning);
    if (!l.contains_origin()) return l;
  }
}

}  // namespace

TEST(PermutationMatrix, Examples) {
  EXPECT_EQ(permutation_matrix(Permutation::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(permutation_matrix(Permutation::from_one_based({2, 1})), (IntMatrix{{0, 1}, {1, 0}}));
  for (std::size_t d = 1; d <= 5; ++d) {
    for_each_permutation(d, [&](const Permutation& s) {
      const auto p = permutation_matrix(s);
      EXPECT_TRUE(is_doubly_stochastic(p));
      EXPECT_EQ(p.sum(), static_cast<long>(d));
    });
  }
}

TEST(DoublyStochastic, Examples) {
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_TRUE(is_doubly_stochastic(Rational(1, static_cast<long>(d)) * RationalMatrix::ones(d)));
  }
  for (std::size_t d = 2; d <= 5; ++d) EXPECT_FALSE(is_doubly_stochastic(vertex_matrix(Vertex::row(1, d))));
  EXPECT_FALSE(is_doubly_stochastic(RationalMatrix{{frac(3, 2), frac(-1, 2)}, {frac(-1, 2), frac(3, 2)}}));
}

TEST(Pairing, Examples) {
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_EQ(pairing(IntMatrix::ones(d), IntMatrix::ones(d)), static_cast<long>(d * d));
    for_each_permutation(d, [&](const Permutation& s) {
      const auto p = permutation_matrix(s);
      for (const auto& v : all_vertices(d)) EXPECT_EQ(pairing(vertex_matrix(v), p), 1);
    });
  }
  EXPECT_THROW(pairing(IntMatrix::ones(2), IntMatrix::ones(3)), std::invalid_argument);
}

TEST(Pairing, RecoversTheValueForEveryPlacement) {
  std::mt19937_64 rng(31);
  for (std::size_t d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = trick_generate(d, rng() % 100, TrickMode::Uniform, rng());
      for_each_permutation(d, [&](const Permutation& s) {
        EXPECT_EQ(pairing(g.matrix(), permutation_matrix(s)), g.value());
      });
    }
  }
}

TEST(GalePair, Sides) {
  const auto one = gale_pair_check(1, 10, 1);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.vertex_pairings, 1u);
  const auto three = gale_pair_check(3, 300, 2);
  EXPECT_TRUE(three.passed());
  EXPECT_EQ(three.vertex_pairings, 36u);
  EXPECT_GT(three.perturbation_witnesses, 0u);
  EXPECT_GT(three.g_samples, 0u);
  EXPECT_GT(three.b_samples, 0u);
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto r = gale_pair_check(d, 60, d);
    EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_EQ(r.vertex_pairings, 2 * d * factorial_u64(d));
  }
  EXPECT_THROW(gale_pair_check(10, 1, 1), GuardExceeded);
}

TEST(DualSubspace, Examples) {
  const AffineSubspace line({1, 0}, {{0, 1}});
  const auto point = dual_subspace(line);
  EXPECT_EQ(point.dimension(), 0u);
  EXPECT_EQ(point.base(), (RationalVector{1, 0}));

  const auto diag = AffineSubspace::from_equations(linalg::RationalDense::from_rows({{1, 1}}), {2});
  const auto half = dual_subspace(diag);
  EXPECT_EQ(half.dimension(), 0u);
  EXPECT_EQ(half.base(), (RationalVector{frac(1, 2), frac(1, 2)}));
  for (const RationalVector& x : {RationalVector{2, 0}, RationalVector{0, 2}}) EXPECT_EQ(linalg::dot(x, half.base()), 1);

  EXPECT_THROW(dual_subspace(AffineSubspace({1, 1}, {{1, 1}})), std::domain_error);
}

TEST(DualSubspace, BirkhoffAndGardnerHullsAreDual) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto b = birkhoff_affine_hull(d);
    const auto g = gardner_affine_hull(d);
    EXPECT_EQ(dual_subspace(b), g) << d;
    EXPECT_EQ(dual_subspace(g), b) << d;
    EXPECT_EQ(b.dimension(), (d - 1) * (d - 1));
    EXPECT_EQ(g.dimension(), 2 * d - 2);
    // Mutual containment of spanning points.
    for (const auto& v : all_vertices(d)) EXPECT_TRUE(g.contains(flatten(vertex_matrix(v).cast<Rational>())));
    for_each_permutation(d, [&](const Permutation& s) {
      EXPECT_TRUE(b.contains(flatten(permutation_matrix(s).cast<Rational>())));
    });
    EXPECT_EQ(AffineSubspace::affine_hull([&] {
                std::vector<RationalVector> pts;
                for (const auto& v : all_vertices(d)) pts.push_back(flatten(vertex_matrix(v).cast<Rational>()));
                return pts;
              }()),
              g);
  }
}

TEST(DualSubspace, InvolutionAndDimensionOnRandomSubspaces) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t ambient = 1 + trial % 8;
    const auto l = random_subspace(ambient, rng);
    const auto dual = dual_subspace(l);
    EXPECT_EQ(dual_subspace(dual), l);
    EXPECT_EQ(l.dimension() + dual.dimension(), ambient - 1);
    // Pairing is 1 on spanning points of both sides.
    std::vector<RationalVector> lp{l.base()}, dp{dual.base()};
    for (const auto& u : l.directions()) {
      RationalVector x = l.base();
      for (std::size_t k = 0; k < ambient; ++k) x[k] += u[k];
      lp.push_back(x);
    }
    for (const auto& u : dual.directions()) {
      RationalVector y = dual.base();
      for (std::size_t k = 0; k < ambient; ++k) y[k] += u[k];
      dp.push_back(y);
    }
    for (const auto& x : lp) {
      for (const auto& y : dp) EXPECT_EQ(linalg::dot(x, y), 1);
    }
  }
}

TEST(AffineSubspaceType, NormalForm) {
  // Same line, different base point and direction scaling.
  const AffineSubspace a({1, 0}, {{1, -1}});
  const AffineSubspace b({0, 1}, {{-3, 3}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.base(), (RationalVector{frac(1, 2), frac(1, 2)}));
  EXPECT_THROW(AffineSubspace({0, 0}, {{1, 0}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(AffineSubspace::from_equations(linalg::RationalDense::from_rows({{1, 1}, {1, 1}}), {1, 2}),
               std::invalid_argument);
  EXPECT_TRUE(a.contains({3, -2}));
  EXPECT_FALSE(a.contains({3, -1}));
  EXPECT_EQ(a.normals().size(), 1u);
}

TEST(Recipe, Examples) {
  const auto diag = AffineSubspace::from_equations(linalg::RationalDense::from_rows({{1, 1}}), {2});
  const auto pair = gale_pair_from_recipe(diag);
  EXPECT_TRUE(pair.pairings_ok);
  EXPECT_TRUE(pair.primal.contains({2, 0}));
  EXPECT_TRUE(pair.primal.contains({0, 2}));
  EXPECT_FALSE(pair.primal.contains({3, -1}));
  EXPECT_TRUE(pair.dual.contains({frac(1, 2), frac(1, 2)}));
  EXPECT_FALSE(pair.dual.contains({1, 0}));

  const auto single = gale_pair_from_recipe(AffineSubspace({frac(7, 3)}, {}));
  EXPECT_EQ(single.dual_hull.base(), (RationalVector{frac(3, 7)}));

  EXPECT_THROW(gale_pair_from_recipe(AffineSubspace({1, -1}, {})), std::invalid_argument);
}

TEST(Recipe, ReproducesTheBirkhoffGardnerPair) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto pair = gale_pair_from_recipe(birkhoff_affine_hull(d), 32, d);
    EXPECT_TRUE(pair.pairings_ok);
    EXPECT_EQ(pair.dual_hull, gardner_affine_hull(d));
    for_each_permutation(d, [&](const Permutation& s) {
      EXPECT_TRUE(pair.primal.contains(flatten(permutation_matrix(s).cast<Rational>())));
    });
    for (const auto& v : all_vertices(d)) EXPECT_TRUE(pair.dual.contains(flatten(vertex_matrix(v).cast<Rational>())));
  }
}

TEST(Gorenstein, Examples) {
  const auto two = gorenstein_check(2, 6);
  EXPECT_TRUE(two.passed());
  EXPECT_TRUE(two.unique_interior_point);
  for (const auto& level : two.levels) {
    if (level.n == 4) {
      EXPECT_EQ(level.interior, 9);
      EXPECT_EQ(level.shifted, 9);
    }
  }
  const auto three = gorenstein_check(3, 4);
  EXPECT_TRUE(three.passed());
  EXPECT_TRUE(three.unique_interior_point);
  ASSERT_EQ(three.levels.size(), 2u);
  EXPECT_EQ(three.levels[0].interior, 1);
  EXPECT_EQ(three.levels[1].interior, 6);
}

TEST(Compressed, Sampling) {
  const auto r = compressed_check(3, 1000, 5);
  EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  EXPECT_TRUE(r.vertices_in_cube);
  EXPECT_GT(r.g_accepted, 0u);
  EXPECT_GT(r.b_accepted, 0u);
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_TRUE(compressed_check(d, 200, d).passed());
}

TEST(Compressed, HullPointWithNegativeEntryIsExcluded) {
  // lambda = (-1/2, 1), mu = (0, 1/2): on the hull of G_2, outside the cube.
  const RationalMatrix a{{frac(-1, 2), 1}, {0, frac(3, 2)}};
  EXPECT_TRUE(gardner_affine_hull(2).contains(flatten(a)));
  EXPECT_TRUE(affine_hull_residual(a).in_hull());
  EXPECT_FALSE(is_g_matrix_fast(a));
}
