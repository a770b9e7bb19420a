#include "gardner/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "gardner/counting.hpp"

namespace gardner {

CountingPolynomial::CountingPolynomial(std::size_t d, std::vector<Rational> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("CountingPolynomial: zero polynomial");
}

Rational CountingPolynomial::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

namespace {

std::string superscript(std::size_t k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits_ascii = std::to_string(k);
  std::string out;
  for (char c : digits_ascii) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string CountingPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) {
      if (k > 0 && !is_integral(mag)) {
        os << '(' << gardner::to_string(mag) << ')';
      } else {
        os << gardner::to_string(mag);
      }
    }
    if (k >= 1) os << 'N';
    if (k >= 2) os << superscript(k);
  }
  return os.str();
}

nlohmann::json CountingPolynomial::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(gardner::to_string(c));
  return {{"d", d_}, {"coeffs", coeffs}};
}

CountingPolynomial CountingPolynomial::from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CountingPolynomial(j.at("d").get<std::size_t>(), std::move(coeffs));
}

CountingPolynomial interpolate(std::size_t d) {
  if (d == 0) throw std::domain_error("interpolate: d must be at least 1");
  const std::size_t nodes = 2 * d - 1;
  // Newton divided differences on the nodes 0, 1, ..., 2d - 2.
  std::vector<Rational> table;
  for (std::size_t k = 0; k < nodes; ++k) table.emplace_back(g_formula_3(d, Integer(static_cast<long>(k))));
  for (std::size_t level = 1; level < nodes; ++level) {
    for (std::size_t k = nodes - 1; k >= level; --k) {
      table[k] = (table[k] - table[k - 1]) / Rational(static_cast<long>(level));
    }
  }
  // Expand sum_k table[k] * N(N-1)...(N-k+1) by Horner on the basis.
  std::vector<Rational> coeffs{table[nodes - 1]};
  for (std::size_t k = nodes - 1; k-- > 0;) {
    // coeffs <- coeffs * (N - k) + table[k]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * Rational(static_cast<long>(k));
    }
    next[0] += table[k];
    coeffs = std::move(next);
  }
  return CountingPolynomial(d, std::move(coeffs));
}

}  // namespace gardner
