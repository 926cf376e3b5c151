#include "extremal/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

namespace extremal::cli {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

VerificationRecord exact_record(std::string name, const Rational& expected, const Rational& computed) {
  VerificationRecord r;
  r.name = std::move(name);
  r.expected = to_exact_string(expected);
  r.computed = to_exact_string(computed);
  Rational err = abs(computed - expected);
  r.abs_error = err.get_d();
  r.tolerance = 0;
  r.pass = sgn(err) == 0;
  return r;
}

VerificationRecord decimal_record(std::string name, std::string_view expected, const Rational& computed,
                                  double tolerance, int digits) {
  VerificationRecord r;
  r.name = std::move(name);
  r.expected = std::string(expected);
  r.computed = to_decimal(computed, digits);
  Rational err = abs(computed - parse_rational(expected));
  r.abs_error = err.get_d();
  r.tolerance = tolerance;
  r.pass = err <= from_double(tolerance);
  return r;
}

VerificationRecord bool_record(std::string name, bool ok) {
  VerificationRecord r;
  r.name = std::move(name);
  r.expected = "true";
  r.computed = ok ? "true" : "false";
  r.abs_error = ok ? 0 : 1;
  r.pass = ok;
  return r;
}

}  // namespace

std::vector<VerificationRecord> run_verification(const RunConfig& config, const FaultInjection& faults) {
  const int digits = config.digits;
  std::vector<VerificationRecord> out;

  Polynomial d = t_variance_poly();
  if (faults.coefficient) d += Polynomial::monomial(Rational(1), garbled_monomial());
  IdentityCheck id = verify_identity(d, energy_numerator_poly());
  auto rec = exact_record("closed_form_identity_residual_terms", Rational(0),
                          Rational(static_cast<long>(id.residual.term_count())));
  rec.computed = id.holds ? "0" : id.residual.to_string();
  out.push_back(rec);

  out.push_back(exact_record("garbled_coefficient_beta4_alpha_delta", Rational(276), solve_unknown_coefficient()));

  CriticalClassReport page = page_class(digits);
  out.push_back(decimal_record("one_point_critical_x", "2.183933404", page.point.root(), 1e-8, digits));
  out.push_back(decimal_record("one_point_line_ratio", "3.183933404", page.ratio, 1e-8, digits));
  out.push_back(exact_record("one_point_sturm_count", Rational(1), Rational(static_cast<long>(page.sturm_count))));
  out.push_back(bool_record("one_point_is_minimum", page.point.classification == Classification::local_min &&
                                                        sgn(page.point.second_derivative) > 0));

  CriticalClassReport two = two_point_class(digits);
  out.push_back(decimal_record("two_point_critical_y", "0.9577128052", two.point.root(), 1e-9, digits));
  out.push_back(decimal_record("two_point_line_ratio", "2.9577128052", two.ratio, 1e-9, digits));
  out.push_back(exact_record("two_point_sturm_count", Rational(1), Rational(static_cast<long>(two.sturm_count))));
  out.push_back(decimal_record("two_point_einstein_integral", "7.136474469", two.three_normalized, 1e-8, digits));
  out.push_back(decimal_record("two_point_gauss_bonnet_residual", "0.136474469", two.gauss_bonnet_residual, 1e-8,
                               digits));

  Rational anti = energy_closed_form().value({Rational(1), Rational(1), Rational(0)});
  out.push_back(exact_record("anticanonical_normalized_energy", Rational(2), anti));
  out.push_back(exact_record("anticanonical_residual", Rational(0), gauss_bonnet_residual(3, anti)));

  SliceEnergy closed = energy_closed_form();
  RationalFunction one = closed.as_function().substitute(
      {{kBeta, Polynomial(0)}, {kAlpha, Polynomial(1)}, {kDelta, Polynomial::variable("x")}});
  RationalFunction two_sub = closed.as_function().substitute(
      {{kAlpha, Polynomial(0)}, {kBeta, Polynomial(1)}, {kDelta, Polynomial::variable("y")}});
  out.push_back(bool_record("one_point_slice_matches_display", one == one_point_energy()));
  out.push_back(bool_record("two_point_slice_matches_display", two_sub == two_point_energy()));

  const long expected_gb[] = {8, 7, 6};
  for (int k = 1; k <= 3; ++k)
    out.push_back(exact_record("two_chi_plus_three_tau_k" + std::to_string(k), Rational(expected_gb[k - 1]),
                               Rational(make_surface(k).two_chi_plus_three_tau())));
  return out;
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["abs_error"] = r.abs_error;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "name,expected,computed,abs_error,tolerance,pass\n";
      for (const auto& r : records)
        os << r.name << ',' << r.expected << ',' << r.computed << ',' << sci(r.abs_error) << ',' << sci(r.tolerance)
           << ',' << (r.pass ? "true" : "false") << '\n';
      break;
    case Format::table: {
      std::size_t wn = 4, we = 8, wc = 8;
      for (const auto& r : records) {
        wn = std::max(wn, r.name.size());
        we = std::max(we, r.expected.size());
        wc = std::max(wc, std::min<std::size_t>(r.computed.size(), 40));
      }
      auto row = [&](std::string_view a, std::string_view b, std::string_view c, std::string_view d,
                     std::string_view e, std::string_view f) {
        os << std::left << std::setw(static_cast<int>(wn)) << a << "  " << std::setw(static_cast<int>(we)) << b << "  "
           << std::setw(static_cast<int>(wc)) << c << "  " << std::setw(10) << d << "  " << std::setw(10) << e << "  "
           << f << '\n';
      };
      row("name", "expected", "computed", "abs_error", "tolerance", "status");
      for (const auto& r : records) {
        std::string computed = r.computed.size() > 40 ? r.computed.substr(0, 37) + "..." : r.computed;
        row(r.name, r.expected, computed, sci(r.abs_error), sci(r.tolerance), r.pass ? "PASS" : "FAIL");
      }
      break;
    }
  }
}

void write_scan_csv(std::ostream& os, const ScanReport& report, int digits) {
  os << "alpha,delta,value,grad_norm\n";
  for (const auto& c : report.cells)
    os << to_decimal(from_double(c.alpha), digits) << ',' << to_decimal(from_double(c.delta), digits) << ','
       << to_decimal(c.value, digits) << ',' << to_decimal(from_double(c.grad_norm), digits) << '\n';
}

void write_scan_json(std::ostream& os, const ScanReport& report, int digits) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json j;
    j["alpha"] = to_decimal(from_double(c.alpha), digits);
    j["delta"] = to_decimal(from_double(c.delta), digits);
    j["value"] = to_decimal(c.value, digits);
    j["grad_norm"] = to_decimal(from_double(c.grad_norm), digits);
    cells.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["alpha_count"] = report.grid.alpha_count;
  doc["delta_count"] = report.grid.delta_count;
  doc["cells"] = std::move(cells);
  os << doc.dump() << '\n';
}

}  // namespace extremal::cli
