#include "gardner/permutation.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace gardner {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<long>& images) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(images.size());
  for (long x : images) {
    if (x < 1) throw std::invalid_argument("Permutation: one-based image below 1");
    zero_based.push_back(static_cast<std::size_t>(x - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(images_);
  for (auto& x : out) ++x;
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i] + 1;
  os << ')';
  return os.str();
}

std::uint64_t factorial_u64(std::size_t d) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= d; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= k;
  }
  return f;
}

}  // namespace gardner
