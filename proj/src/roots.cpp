#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gardner/polynomial.hpp"

namespace gardner {

std::string to_string(RootKind kind) {
  switch (kind) {
    case RootKind::NegativeInteger: return "negative-integer";
    case RootKind::CriticalLine: return "critical-line";
    case RootKind::Both: return "negative-integer,critical-line";
    case RootKind::Unclassified: return "unclassified";
  }
  return "unknown";
}

namespace {

// Parlett-Reinsch balancing with power-of-two scale factors.
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      const double s = c + r;
      double f = 1;
      while (c < r / 2) {
        c *= 2;
        r /= 2;
        f *= 2;
      }
      while (c >= r * 2) {
        c /= 2;
        r *= 2;
        f /= 2;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

std::vector<Rational> divide_by_linear(const std::vector<Rational>& p, const Rational& root) {
  // p(N) = (N - root) q(N); synthetic division, constant term first.
  const std::size_t n = p.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    carry = p[k + 1] + carry * root;
    q[k] = carry;
  }
  return q;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> polish(const std::vector<long double>& p, std::complex<long double> z) {
  for (int iter = 0; iter < 50; ++iter) {
    std::complex<long double> value = 0, deriv = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      deriv = deriv * z + value;
      value = value * z + *it;
    }
    if (deriv == std::complex<long double>(0)) break;
    const auto step = value / deriv;
    z -= step;
    if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
  }
  return z;
}

RootKind classify(std::complex<double> z, std::size_t d, double tol) {
  const double nearest = std::round(z.real());
  const bool integer = std::abs(z.imag()) < tol && nearest <= -1 && std::abs(z.real() - nearest) < tol;
  const bool critical = std::abs(z.real() + static_cast<double>(d) / 2) < tol;
  if (integer && critical) return RootKind::Both;
  if (integer) return RootKind::NegativeInteger;
  if (critical) return RootKind::CriticalLine;
  return RootKind::Unclassified;
}

}  // namespace

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
  if (coeffs.size() < 2 || coeffs.back() == 0) {
    throw std::invalid_argument("companion_roots: need degree >= 1 with nonzero leading coefficient");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(coeffs.size()) - 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
  balance(c);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("companion_roots: eigenvalue iteration did not converge");
  }
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

RootReport roots_check(std::size_t d, double tol) {
  if (d < 2) throw std::domain_error("roots_check: requires d >= 2");
  RootReport report{d, tol, {}, false};
  std::vector<Rational> p = interpolate(d).coeffs();

  // Fujiwara bound on the root moduli limits the exact integer search.
  const std::size_t n = p.size() - 1;
  double bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    double ratio = std::abs(Rational(p[n - k] / p[n]).get_d());
    if (k == n) ratio /= 2;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  const long limit = static_cast<long>(std::ceil(2 * bound)) + 1;
  for (long k = 1; k <= limit && p.size() > 1; ++k) {
    const Rational root(-k);
    while (p.size() > 1 && evaluate(p, root) == 0) {
      p = divide_by_linear(p, root);
      report.roots.push_back({{static_cast<double>(-k), 0.0}, RootKind::Unclassified, true});
    }
  }

  if (p.size() > 1) {
    std::vector<double> approx;
    std::vector<long double> precise;
    for (const auto& c : p) {
      approx.push_back(c.get_d());
      precise.push_back(static_cast<long double>(c.get_d()));
    }
    for (auto z : companion_roots(approx)) {
      const auto polished = polish(precise, {z.real(), z.imag()});
      report.roots.push_back({{static_cast<double>(polished.real()), static_cast<double>(polished.imag())},
                              RootKind::Unclassified, false});
    }
  }

  bool all = report.roots.size() == 2 * d - 2;
  for (auto& r : report.roots) {
    r.kind = classify(r.value, d, tol);
    all = all && r.kind != RootKind::Unclassified;
  }
  report.passed = all;
  return report;
}

}  // namespace gardner
