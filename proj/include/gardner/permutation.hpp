#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace gardner {

/// A bijection on {0, ..., d-1}. Printed one-based, as rook placements.
class Permutation {
 public:
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t d);
  static Permutation from_one_based(const std::vector<long>& images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  std::vector<std::size_t> one_based() const;
  /// One-line notation, e.g. "(2 1)".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// d!, or UINT64_MAX if it overflows.
std::uint64_t factorial_u64(std::size_t d);

/// Calls f(const Permutation&) for every permutation of [d] in
/// lexicographic order.
template <class F>
void for_each_permutation(std::size_t d, F&& f) {
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  do {
    f(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace gardner
