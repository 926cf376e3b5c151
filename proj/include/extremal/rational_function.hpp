#pragma once

#include "extremal/polynomial.hpp"

namespace extremal {

/// Quotient of two polynomials. No gcd cancellation is attempted; equality is
/// cross-multiplication, so representations with common factors compare equal.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial(1)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws std::domain_error when the denominator vanishes at the point.
  Rational eval(const Point& point) const;
  Rational eval_univariate(const Rational& x) const;

  /// Quotient rule, (N'D - ND') / D^2.
  RationalFunction partial(std::string_view var) const;
  /// Numerator of the quotient-rule derivative, N'D - ND'. Its sign is the
  /// sign of the derivative wherever D is nonzero.
  Polynomial derivative_numerator(std::string_view var) const;

  RationalFunction substitute(const Bindings& bindings) const;

  /// deg N - deg D when both parts are homogeneous.
  std::optional<int> homogeneous_degree() const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction& f, const RationalFunction& g);

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace extremal
