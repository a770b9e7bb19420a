#include "gardner/exact.hpp"

#include <stdexcept>

namespace gardner {

Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer result;
  // mpz_bin_ui implements the polynomial extension for negative n.
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t limbs = (bits + 63) / 64;
  const std::size_t excess = limbs * 64 - bits;
  // Rejection on the smallest power of two covering the bound.
  for (;;) {
    Integer candidate = 0;
    for (std::size_t i = 0; i < limbs; ++i) {
      std::uint64_t word = rng();
      if (i == 0 && excess > 0) word >>= excess;
      candidate <<= 64;
      Integer w;
      mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate += w;
    }
    if (candidate < bound) return candidate;
  }
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long max_den) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, max_den);
  const long n = num(rng);
  const long d = den(rng);
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

}  // namespace gardner
