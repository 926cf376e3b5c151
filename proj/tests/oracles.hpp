#pragma once

// Test-only reference computations, deliberately independent of the code
// paths they check.

#include "extremal/polynomial.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using extremal::Polynomial;
using extremal::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational(long num_range = 9, long den_max = 6) {
  Rational q(uniform(-num_range, num_range), uniform(1, den_max));
  q.canonicalize();
  return q;
}

inline Rational positive_rational(long num_max = 30, long den_max = 7) {
  Rational q(uniform(1, num_max), uniform(1, den_max));
  q.canonicalize();
  return q;
}

/// Random sparse polynomial in the given variables with total degree <= max_degree.
inline Polynomial random_polynomial(const std::vector<std::string>& vars, int max_terms = 5, int max_degree = 3) {
  Polynomial::TermMap terms;
  int n = static_cast<int>(uniform(0, max_terms));
  for (int t = 0; t < n; ++t) {
    Polynomial::Exponents e(vars.size(), 0);
    int budget = static_cast<int>(uniform(0, max_degree));
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<long>(vars.size()) - 1))];
    terms[e] += small_rational();
  }
  return Polynomial(vars, std::move(terms));
}

/// Random homogeneous polynomial of exact degree d.
inline Polynomial random_homogeneous(const std::vector<std::string>& vars, int d, int max_terms = 6) {
  while (true) {
  Polynomial::TermMap terms;
  int n = static_cast<int>(uniform(1, max_terms));
  for (int t = 0; t < n; ++t) {
    Polynomial::Exponents e(vars.size(), 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<long>(vars.size()) - 1))];
    Rational c = small_rational();
    if (sgn(c) == 0) c = 1;
    terms[e] += c;
  }
  Polynomial p(vars, std::move(terms));
  if (!p.is_zero()) return p;
  }
}

/// Number of sign changes of f sampled on [low, high] with the given step;
/// zero samples are skipped.
inline std::size_t sign_change_sweep(const std::function<double(double)>& f, double low, double high,
                                     double step = 1e-3) {
  std::size_t changes = 0;
  int last = 0;
  const auto n = static_cast<long>(std::ceil((high - low) / step));
  for (long i = 0; i <= n; ++i) {
    double x = std::min(high, low + static_cast<double>(i) * step);
    double v = f(x);
    int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Central difference (f(x+h) - f(x-h)) / 2h in long double.
inline long double central_difference(const std::function<long double(long double)>& f, long double x,
                                      long double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace oracle
