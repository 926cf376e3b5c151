#include "extremal/rational_function.hpp"

#include <stdexcept>

namespace extremal {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

Rational RationalFunction::eval(const Point& point) const {
  Rational d = extremal::eval(den_, point);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at evaluation point");
  Rational r = extremal::eval(num_, point) / d;
  r.canonicalize();
  return r;
}

Rational RationalFunction::eval_univariate(const Rational& x) const {
  Rational d = extremal::eval_univariate(den_, x);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at " + to_exact_string(x));
  Rational r = extremal::eval_univariate(num_, x) / d;
  r.canonicalize();
  return r;
}

Polynomial RationalFunction::derivative_numerator(std::string_view var) const {
  return extremal::partial(num_, var) * den_ - num_ * extremal::partial(den_, var);
}

RationalFunction RationalFunction::partial(std::string_view var) const {
  return RationalFunction(derivative_numerator(var), den_ * den_);
}

RationalFunction RationalFunction::substitute(const Bindings& bindings) const {
  return RationalFunction(extremal::substitute(num_, bindings), extremal::substitute(den_, bindings));
}

std::optional<int> RationalFunction::homogeneous_degree() const {
  auto hn = extremal::homogeneous_degree(num_);
  auto hd = extremal::homogeneous_degree(den_);
  if (!hd.degree) return std::nullopt;
  if (hn.any) return 0;  // zero numerator: the function is identically 0
  if (!hn.degree) return std::nullopt;
  return *hn.degree - *hd.degree;
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  return f.num_ * g.den_ == g.num_ * f.den_;
}

}  // namespace extremal
