#include "extremal/critical.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

namespace {

long double closed_form_ld(long double a, long double b, long double d) {
  static const Polynomial n = energy_numerator_poly();
  static const Polynomial den = t_variance_poly();
  auto ev = [](const Polynomial& p, long double a, long double b, long double d) {
    long double s = 0;
    for (const auto& [e, c] : p.terms()) {
      long double t = static_cast<long double>(c.get_d());
      const auto& v = p.variables();
      for (std::size_t i = 0; i < e.size(); ++i) {
        long double x = v[i] == kAlpha ? a : v[i] == kBeta ? b : d;
        for (unsigned k = 0; k < e[i]; ++k) t *= x;
      }
      s += t;
    }
    return s;
  };
  return ev(n, a, b, d) / ev(den, a, b, d);
}

Polynomial x() { return Polynomial::variable("x"); }

}  // namespace

TEST_CASE("critical_points_of finds x + 1/x minimum") {
  RationalFunction f(x().pow(2) + Polynomial(1), x());
  SearchDomain dom{Rational(0), Rational(10), false};
  auto pts = critical_points_of(f, dom);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].bracket.refined == "1.00000000000");
  CHECK(pts[0].bracket.low < 1);
  CHECK(pts[0].bracket.high >= 1);
  CHECK(pts[0].classification == Classification::local_min);
  CHECK(pts[0].value_exact.get_d() == doctest::Approx(2).epsilon(1e-12));
  CHECK(pts[0].second_derivative.get_d() == doctest::Approx(2).epsilon(1e-9));
  CHECK(pts[0].variable == "x");
}

TEST_CASE("critical_points_of classifies maxima and inflections") {
  // -(x-2)^2 has a maximum at 2; (x-3)^3 only an inflection at 3.
  RationalFunction maxf(Polynomial(0) - (x() - Polynomial(2)).pow(2), Polynomial(1));
  auto m = critical_points_of(maxf, {Rational(0), Rational(10), false});
  REQUIRE(m.size() == 1);
  CHECK(m[0].classification == Classification::local_max);
  RationalFunction inf((x() - Polynomial(3)).pow(3), Polynomial(1));
  auto i = critical_points_of(inf, {Rational(0), Rational(10), false});
  REQUIRE(i.size() == 1);
  CHECK(i[0].classification == Classification::inflection);
  CHECK(i[0].bracket.refined == "3.00000000000");
}

TEST_CASE("critical_points_of refused when the denominator vanishes in the domain") {
  RationalFunction f(Polynomial(1), x() - Polynomial(5));
  CHECK_THROWS_AS(critical_points_of(f, {Rational(0), Rational(10), false}), std::domain_error);
  CHECK_THROWS_AS(critical_points_of(f), std::domain_error);
  CHECK_THROWS_AS(critical_points_of(f, {Rational(1), Rational(1), false}), std::invalid_argument);
  CHECK(critical_points_of(RationalFunction(Polynomial(3), Polynomial(1))).empty());
}

TEST_CASE("critical_points_of tail certification") {
  // Critical point beyond the truncation bound is reported as an error.
  RationalFunction f((x() - Polynomial(20000)).pow(2), Polynomial(1));
  CHECK_THROWS_AS(critical_points_of(f), std::domain_error);
}

TEST_CASE("page_class") {
  CriticalClassReport r = page_class();
  CHECK(r.k == 1);
  CHECK(r.sturm_count == 1);
  CHECK(r.point.classification == Classification::local_min);
  CHECK(std::fabs(r.point.root().get_d() - 2.18393340447) < 1e-8);
  CHECK(std::fabs(r.ratio.get_d() - 3.18393340447) < 1e-8);
  double xr = r.point.root().get_d();
  double direct = (4 + 14 * xr + 16 * xr * xr + 3 * xr * xr * xr) / (xr * (6 + 6 * xr + xr * xr));
  CHECK(std::fabs(r.normalized_energy.get_d() - direct) < 1e-12);
  CHECK(*r.point.line_to_exceptional_ratio == "3.18393340447");
  CHECK(r.two_chi_plus_three_tau == 8);
  CHECK(r.gauss_bonnet_residual == r.three_normalized - 8);
  CHECK(sgn(r.point.second_derivative) > 0);
  CHECK(r.point.bracket.width() < pow10(-11));
}

TEST_CASE("two_point_class") {
  CriticalClassReport r = two_point_class();
  CHECK(r.k == 2);
  CHECK(r.sturm_count == 1);
  CHECK(r.point.classification == Classification::local_min);
  CHECK(std::fabs(r.point.root().get_d() - 0.957712805) < 1e-9);
  CHECK(std::fabs(r.ratio.get_d() - 2.957712805) < 1e-9);
  CHECK(std::fabs(r.three_normalized.get_d() - 7.136474469) < 1e-8);
  CHECK(std::fabs(r.gauss_bonnet_residual.get_d() - 0.136474469) < 1e-8);
  CHECK(r.two_chi_plus_three_tau == 7);
}

TEST_CASE("page_class honours the digit count") {
  CriticalClassReport r = page_class(30);
  CHECK(r.point.bracket.width() < pow10(-29));
  CHECK(std::fabs(r.point.root().get_d() - 2.18393340447) < 1e-8);
}

TEST_CASE("gradient at the anti-canonical class") {
  Gradient g = gradient({1, 1, 0});
  CHECK(g.d_alpha == 0);
  CHECK(g.d_delta == 0);
  CHECK(g.norm() == 0);
  CHECK_THROWS_AS(gradient({1, 1, -1}), NotKahlerError);
}

TEST_CASE("property: gradient matches central differences") {
  const long double h = 1e-6L;
  auto check = [&](const SlicePoint& p) {
    Gradient g = gradient(p);
    long double a = p.alpha.get_d(), b = p.beta.get_d(), d = p.delta.get_d();
    long double fa = oracle::central_difference([&](long double t) { return closed_form_ld(t, b, d); }, a, h);
    long double fd = oracle::central_difference([&](long double t) { return closed_form_ld(a, b, t); }, d, h);
    REQUIRE(std::fabs(static_cast<double>(fa) - g.d_alpha.get_d()) < 1e-8);
    REQUIRE(std::fabs(static_cast<double>(fd) - g.d_delta.get_d()) < 1e-8);
  };
  check({2, 1, 1});
  for (int t = 0; t < 25; ++t)
    check({oracle::positive_rational(30, 7) + Rational(1, 4), Rational(1), oracle::positive_rational(30, 7)});
}

TEST_CASE("energy does not decrease when leaving the anti-canonical boundary") {
  CHECK(sgn(gradient({1, 1, 0}).d_delta) >= 0);
  const long double f0 = closed_form_ld(1, 1, 0);
  for (long double h : {1e-2L, 1e-3L, 1e-4L, 1e-5L}) CHECK((closed_form_ld(1, 1, h) - f0) / h >= 0);
}

TEST_CASE("scan grid nodes") {
  ScanGrid g;
  auto a = g.alpha_nodes();
  auto d = g.delta_nodes();
  REQUIRE(a.size() == 200);
  REQUIRE(d.size() == 200);
  CHECK(a.front() == 0.05);
  CHECK(a.back() == 20.0);
  CHECK(std::count(a.begin(), a.end(), 1.0) == 1);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(d.front() == 0.0);
  CHECK(d.back() == 10.0);
  ScanGrid bad;
  bad.alpha_min = 0;
  CHECK_THROWS_AS(scan_three_point(bad), std::invalid_argument);
}

TEST_CASE("small scan finds the anti-canonical minimum") {
  ScanGrid g;
  g.alpha_count = 21;
  g.delta_count = 21;
  ScanReport r = scan_three_point(g, 2);
  REQUIRE(r.cells.size() == 441);
  const ScanCell& m = r.cells[r.global_min];
  CHECK(m.alpha == 1.0);
  CHECK(m.delta == 0.0);
  CHECK(m.value == 2);
  CHECK(r.global_min_on_boundary);
  CHECK(r.global_min_delta_slope == 0);
  CHECK(r.interior_critical.empty());
  for (const auto& c : r.cells) CHECK(c.value >= 2);
}

TEST_CASE("scan is deterministic across thread counts") {
  ScanGrid g;
  g.alpha_count = 17;
  g.delta_count = 13;
  ScanReport one = scan_three_point(g, 1);
  ScanReport many = scan_three_point(g, 5);
  REQUIRE(one.cells.size() == many.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    REQUIRE(one.cells[i].value == many.cells[i].value);
    REQUIRE(one.cells[i].grad_norm == many.cells[i].grad_norm);
  }
  CHECK(one.local_minima == many.local_minima);
  CHECK(one.global_min == many.global_min);
}

TEST_CASE("scan values match the closed form at the node coordinates") {
  ScanGrid g;
  g.alpha_count = 7;
  g.delta_count = 5;
  ScanReport r = scan_three_point(g);
  SliceEnergy f = energy_closed_form();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const ScanCell& c = r.at(i, j);
      CHECK(c.value == f.value({from_double(c.alpha), 1, from_double(c.delta)}));
      Gradient gr = gradient({from_double(c.alpha), 1, from_double(c.delta)});
      CHECK(c.grad_alpha == doctest::Approx(gr.d_alpha.get_d()).epsilon(1e-12));
      CHECK(c.grad_delta == doctest::Approx(gr.d_delta.get_d()).epsilon(1e-12));
    }
}

TEST_CASE("polish_critical converges on the anti-canonical class") {
  PolishedPoint p = polish_critical(1.1, 0.05);
  // Newton may leave the closed domain; either way it never reports a
  // spurious interior point.
  CHECK_FALSE((p.converged && p.delta > 1e-9));
}
