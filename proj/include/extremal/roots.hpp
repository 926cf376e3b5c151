#pragma once

#include "extremal/polynomial.hpp"

#include <vector>

namespace extremal {

/// Default number of significant digits for refined roots.
inline constexpr int kDefaultDigits = 12;

/// Certified isolating interval for one real root.
///
/// Either `exact` is set and low == high is a rational root, or the
/// squarefree part of the polynomial has opposite nonzero signs at `low`
/// and `high` and exactly one root in (low, high].
struct RootBracket {
  Rational low;
  Rational high;
  bool exact = false;
  std::string refined;

  Rational midpoint() const;
  double value() const { return midpoint().get_d(); }
  Rational width() const { return high - low; }
};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
using IntegerCoefficients = std::vector<Integer>;

/// Sturm sequence of the squarefree part of a univariate polynomial, kept
/// primitive at every step. Positive rescalings preserve all sign patterns.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Sign variations of the sequence at x (zeros skipped).
  std::size_t variations(const Rational& x) const;
  std::size_t variations_at_positive_infinity() const;
  std::size_t variations_at_negative_infinity() const;

  /// Distinct real roots in (low, high].
  std::size_t count(const Rational& low, const Rational& high) const;
  /// Distinct real roots in (low, +inf).
  std::size_t count_above(const Rational& low) const;
  std::size_t count_all() const;

  const IntegerCoefficients& squarefree() const { return seq_.front(); }
  int sign_at(const Rational& x) const;
  std::size_t length() const { return seq_.size(); }

 private:
  std::vector<IntegerCoefficients> seq_;
};

/// Squarefree part p / gcd(p, p') as a primitive integer polynomial in the
/// same variable.
Polynomial squarefree_part(const Polynomial& p);

/// One certified bracket per distinct real root in (low, high], refined by
/// Sturm-guided bisection to `digits` significant digits.
std::vector<RootBracket> isolate_real_roots(const Polynomial& p, const Rational& low, const Rational& high,
                                            int digits = kDefaultDigits);

/// As isolate_real_roots on (low, +inf): first certifies that no root lies
/// beyond `truncation`, then isolates on (low, truncation]. Throws
/// std::domain_error when the truncation would lose a root.
std::vector<RootBracket> isolate_real_roots_above(const Polynomial& p, const Rational& low,
                                                  int digits = kDefaultDigits,
                                                  const Rational& truncation = Rational(10000));

std::size_t count_real_roots(const Polynomial& p, const Rational& low, const Rational& high);

}  // namespace extremal
