#include "gardner/trick.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "gardner/counting.hpp"

namespace gardner {

std::vector<std::uint64_t> random_composition(std::uint64_t total, std::size_t parts,
                                              std::mt19937_64& rng) {
  if (parts == 0) throw std::invalid_argument("random_composition: zero parts");
  if (total > std::numeric_limits<std::uint64_t>::max() - parts) {
    throw std::invalid_argument("random_composition: total too large");
  }
  // Stars and bars: a uniform (parts-1)-subset of the total+parts-1 slots,
  // drawn with Floyd's algorithm.
  const std::uint64_t slots = total + parts - 1;
  const std::uint64_t bars = parts - 1;
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = slots - bars; j < slots; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    std::uint64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out;
  out.reserve(parts);
  std::uint64_t prev = 0;
  for (std::uint64_t bar : chosen) {
    out.push_back(bar - prev);
    prev = bar + 1;
  }
  out.push_back(slots - prev);
  return out;
}

namespace {

Labeling labeling_from(const std::vector<std::uint64_t>& lambda,
                       const std::vector<std::uint64_t>& mu) {
  std::vector<Integer> l, m;
  for (auto x : lambda) l.emplace_back(std::to_string(x));
  for (auto x : mu) m.emplace_back(std::to_string(x));
  return Labeling(std::move(l), std::move(m));
}

// Uniform over N * G_d by way of the half-open decomposition: pick the cell
// H_{U_k} P_k with probability proportional to its lattice-point count, then
// a uniform point of that cell. In cell k the row labels mu_1..mu_{k-1} are
// at least 1, mu_k = 0, and everything else is free.
Labeling uniform_labeling(std::size_t d, std::uint64_t n, std::mt19937_64& rng) {
  const long m = static_cast<long>(2 * d - 1);
  std::vector<Integer> weights;
  Integer total = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    weights.push_back(halfopen_simplex_count(m, static_cast<long>(k - 1), Integer(std::to_string(n))));
    total += weights.back();
  }
  Integer r = uniform_below(total, rng);
  std::size_t cell = 0;
  while (r >= weights[cell]) {
    r -= weights[cell];
    ++cell;
  }
  // cell is zero-based here: rows 0..cell-1 are forced positive.
  const std::uint64_t forced = cell;
  std::vector<std::uint64_t> parts = random_composition(n - forced, 2 * d - 1, rng);
  std::vector<std::uint64_t> lambda(parts.begin(), parts.begin() + d);
  std::vector<std::uint64_t> mu(d, 0);
  std::size_t next = d;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == cell) continue;
    mu[i] = parts[next++] + (i < cell ? 1 : 0);
  }
  return labeling_from(lambda, mu);
}

}  // namespace

GMatrix trick_generate(std::size_t d, std::uint64_t n, TrickMode mode, std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("trick_generate: d must be at least 1");
  std::mt19937_64 rng(seed);
  if (mode == TrickMode::Uniform) return compose(uniform_labeling(d, n, rng));

  std::vector<std::uint64_t> parts = random_composition(n, 2 * d, rng);
  std::vector<std::uint64_t> lambda(parts.begin(), parts.begin() + d);
  std::vector<std::uint64_t> mu(parts.begin() + d, parts.end());
  GMatrix board = compose(labeling_from(lambda, mu));
  return compose(decompose_canonical(board));
}

}  // namespace gardner
