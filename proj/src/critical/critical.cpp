#include "extremal/critical.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::local_min:
      return "local-min";
    case Classification::local_max:
      return "local-max";
    default:
      return "inflection";
  }
}

namespace {

Classification classify(int left, int right) {
  if (left < 0 && right > 0) return Classification::local_min;
  if (left > 0 && right < 0) return Classification::local_max;
  return Classification::inflection;
}

// Signs of g just left and right of an exact root r.
std::pair<int, int> signs_around(const Polynomial& g, const SturmSequence& s, const Rational& r) {
  Rational eps(1);
  while (true) {
    Rational lo = r - eps, hi = r + eps;
    int sl = sgn(eval_univariate(g, lo)), sh = sgn(eval_univariate(g, hi));
    if (s.count(lo, hi) == 1 && s.sign_at(lo) != 0 && sl != 0 && sh != 0) return {sl, sh};
    eps /= 2;
  }
}

}  // namespace

std::vector<CriticalPointResult> critical_points_of(const RationalFunction& f, const SearchDomain& domain,
                                                    int digits) {
  if (domain.low >= domain.high) throw std::invalid_argument("empty search domain");
  auto var = sole_variable(f.numerator());
  auto dvar = sole_variable(f.denominator());
  if (var && dvar && *var != *dvar) throw std::invalid_argument("critical_points_of expects a univariate function");
  if (!var) var = dvar;
  if (!var) return {};  // constant function

  if (!f.denominator().is_constant()) {
    SturmSequence den(f.denominator());
    std::size_t poles = domain.certify_tail ? den.count_above(domain.low) : den.count(domain.low, domain.high);
    if (poles != 0) throw std::domain_error("denominator has a root inside the search domain");
  }

  Polynomial g = f.derivative_numerator(*var);
  if (g.is_zero()) return {};
  std::vector<RootBracket> brackets = domain.certify_tail
                                          ? isolate_real_roots_above(g, domain.low, digits, domain.high)
                                          : isolate_real_roots(g, domain.low, domain.high, digits);
  SturmSequence gs(g);
  RationalFunction second = f.partial(*var).partial(*var);

  std::vector<CriticalPointResult> out;
  for (auto& b : brackets) {
    CriticalPointResult r;
    r.variable = *var;
    r.bracket = b;
    Rational m = b.midpoint();
    r.value_exact = f.eval_univariate(m);
    r.value_at_critical = to_decimal(r.value_exact, digits);
    r.second_derivative = second.eval_univariate(m);
    auto [left, right] = b.exact ? signs_around(g, gs, b.low)
                                 : std::pair{sgn(eval_univariate(g, b.low)), sgn(eval_univariate(g, b.high))};
    r.classification = classify(left, right);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

CriticalClassReport critical_class(int k, const RationalFunction& f, int digits) {
  SearchDomain domain;
  auto points = critical_points_of(f, domain, digits);
  CriticalClassReport rep;
  rep.k = k;
  rep.sturm_count = SturmSequence(f.derivative_numerator(*sole_variable(f.numerator())))
                        .count(domain.low, domain.high);
  if (points.empty()) throw std::runtime_error("no critical point found");
  // A unique minimum is the expected outcome; report the first minimum if
  // several appear and let the count tell the story.
  std::size_t pick = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].classification == Classification::local_min) {
      pick = i;
      break;
    }
  rep.point = points[pick];
  const int offset = k == 1 ? 1 : 2;  // line area alpha + delta, resp. 2 beta + delta
  rep.ratio = rep.point.root() + offset;
  rep.point.line_to_exceptional_ratio = to_decimal(rep.ratio, digits);
  rep.normalized_energy = rep.point.value_exact;
  rep.three_normalized = 3 * rep.normalized_energy;
  rep.gauss_bonnet_residual = gauss_bonnet_residual(k, rep.normalized_energy);
  rep.two_chi_plus_three_tau = make_surface(k).two_chi_plus_three_tau();
  return rep;
}

}  // namespace

CriticalClassReport page_class(int digits) { return critical_class(1, one_point_energy(), digits); }

CriticalClassReport two_point_class(int digits) { return critical_class(2, two_point_energy(), digits); }

double Gradient::norm() const { return std::hypot(d_alpha.get_d(), d_delta.get_d()); }

Gradient gradient(const SlicePoint& p) {
  slice_class(p);  // domain check
  static const RationalFunction f = energy_closed_form().as_function();
  static const RationalFunction fa = f.partial(kAlpha);
  static const RationalFunction fd = f.partial(kDelta);
  Point pt{{kAlpha, p.alpha}, {kBeta, p.beta}, {kDelta, p.delta}};
  return {fa.eval(pt), fd.eval(pt)};
}

}  // namespace extremal
