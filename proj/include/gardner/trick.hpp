#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gardner/g_matrix.hpp"

namespace gardner {

enum class TrickMode {
  /// Exactly uniform over all integer G-matrices of the requested value.
  Uniform,
  /// Any composition of N into 2d labels, composed into a board. Cheap, but
  /// boards with many canonical-equivalent labelings are more likely.
  Quick,
};

/// Fills a d x d board with nonnegative integers so that every placement of
/// d nonthreatening rooks covers exactly n. Deterministic in seed.
GMatrix trick_generate(std::size_t d, std::uint64_t n, TrickMode mode, std::uint64_t seed);

/// Uniform composition of total into parts nonnegative summands.
std::vector<std::uint64_t> random_composition(std::uint64_t total, std::size_t parts,
                                              std::mt19937_64& rng);

}  // namespace gardner
