#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gardner {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k). Zero for k < 0. A negative upper argument
/// uses the polynomial extension n(n-1)...(n-k+1)/k!, so C(-1, k) = (-1)^k.
Integer binomial(const Integer& n, long k);

Integer factorial(unsigned long n);

std::string to_string(const Integer& x);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses a decimal integer; throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);
/// Parses "p", "-p" or "p/q" into canonical form.
Rational parse_rational(std::string_view text);

/// Uniform draw from [0, bound) with bound > 0.
Integer uniform_below(const Integer& bound, std::mt19937_64& rng);

/// Rational with numerator in [-num_bound, num_bound] and denominator in
/// [1, max_den], canonicalized.
Rational random_rational(std::mt19937_64& rng, long num_bound, long max_den);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace gardner
