#include "extremal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace extremal::cli {

namespace {

std::string pi2(const Rational& q) { return sgn(q) == 0 ? "0" : to_exact_string(q) + "π²"; }

std::string num(double x, int digits) { return to_decimal(from_double(x), digits); }

unsigned threads_from_env() {
  const char* v = std::getenv("EXTREMAL_LAB_THREADS");
  if (!v || !*v) return 0;
  try {
    long n = std::stol(v);
    return n < 0 ? 0u : static_cast<unsigned>(n);
  } catch (const std::exception&) {
    return 0;
  }
}

// Writes to --out when given, otherwise to the command's stdout.
template <typename Fn>
int emit(const RunConfig& config, std::ostream& out, std::ostream& err, Fn&& write) {
  if (config.out_path.empty()) {
    write(out);
    return kExitOk;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << config.out_path << "'\n";
    return kExitUsage;
  }
  write(file);
  return file ? kExitOk : kExitUsage;
}

int cmd_verify(const RunConfig& config, const FaultInjection& faults, std::ostream& out, std::ostream& err) {
  auto records = run_verification(config, faults);
  bool all = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  int rc = emit(config, out, err, [&](std::ostream& os) { write_records(os, records, config.format); });
  if (rc != kExitOk) return rc;
  return all ? kExitOk : kExitFailure;
}

int cmd_energy(const RunConfig& config, int k, const std::string& alpha, const std::string& beta,
               const std::string& delta, std::ostream& out, std::ostream& err) {
  SlicePoint p;
  try {
    p.alpha = alpha.empty() ? Rational(0) : parse_rational(alpha);
    p.beta = beta.empty() ? Rational(0) : parse_rational(beta);
    p.delta = delta.empty() ? Rational(0) : parse_rational(delta);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (k == 2 && !alpha.empty() && sgn(p.alpha) != 0) {
    err << "error: the two-point surface takes --beta and --delta only\n";
    return kExitUsage;
  }
  if (k == 1 && !beta.empty() && sgn(p.beta) != 0) {
    err << "error: the one-point surface takes --alpha and --delta only\n";
    return kExitUsage;
  }
  EnergyBreakdown e;
  SliceClass sc;
  try {
    sc = slice_class(k, p);
    e = energy_composed(k, p);
  } catch (const NotKahlerError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  Rational closed = energy_closed_form().value(p);
  const int d = config.digits;
  const double pi_sq = EnergyBreakdown::pi_squared();
  return emit(config, out, err, [&](std::ostream& os) {
    switch (config.format) {
      case Format::json: {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["class"] = sc.omega.to_string();
        j["average_term"] = {{"exact_pi2", to_exact_string(e.average_term)},
                             {"value", num(e.average_term.get_d() * pi_sq, d)}};
        j["futaki_term"] = {{"exact_pi2", to_exact_string(e.futaki_term)},
                            {"value", num(e.futaki_term.get_d() * pi_sq, d)}};
        j["total"] = {{"exact_pi2", to_exact_string(e.total)}, {"value", num(e.total_value(), d)}};
        j["normalized"] = {{"exact", to_exact_string(e.normalized)}, {"value", to_decimal(e.normalized, d)}};
        j["closed_form_agrees"] = closed == e.normalized;
        os << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        os << "quantity,exact,value\n";
        os << "average_term," << pi2(e.average_term) << ',' << num(e.average_term.get_d() * pi_sq, d) << '\n';
        os << "futaki_term," << pi2(e.futaki_term) << ',' << num(e.futaki_term.get_d() * pi_sq, d) << '\n';
        os << "total," << to_exact_string(e.normalized) << " · 96π²," << num(e.total_value(), d) << '\n';
        os << "normalized," << to_exact_string(e.normalized) << ',' << to_decimal(e.normalized, d) << '\n';
        break;
      case Format::table:
        os << "surface      k = " << k << ", class " << sc.omega.to_string() << '\n';
        os << "average_term " << pi2(e.average_term) << "  (" << num(e.average_term.get_d() * pi_sq, d) << ")\n";
        os << "futaki_term  " << pi2(e.futaki_term) << "  (" << num(e.futaki_term.get_d() * pi_sq, d) << ")\n";
        os << "total        " << to_exact_string(e.normalized) << " · 96π²  (" << num(e.total_value(), d) << ")\n";
        os << "normalized   " << to_exact_string(e.normalized) << "  (" << to_decimal(e.normalized, d) << ")\n";
        os << "closed form  " << (closed == e.normalized ? "agrees" : "DISAGREES") << '\n';
        break;
    }
  });
}

int cmd_critical(const RunConfig& config, int k, std::ostream& out, std::ostream& err) {
  if (k == 3) {
    err << "error: the three-point slice is two-dimensional; use the `scan3` subcommand\n";
    return kExitUsage;
  }
  if (k != 1 && k != 2) {
    err << "error: --k must be 1 or 2\n";
    return kExitUsage;
  }
  const int d = config.digits;
  CriticalClassReport rep = k == 1 ? page_class(d) : two_point_class(d);
  const auto& pt = rep.point;
  return emit(config, out, err, [&](std::ostream& os) {
    if (config.format == Format::json) {
      nlohmann::ordered_json j;
      j["k"] = k;
      j["variable"] = pt.variable;
      j["bracket_low"] = to_exact_string(pt.bracket.low);
      j["bracket_high"] = to_exact_string(pt.bracket.high);
      j["root"] = pt.bracket.refined;
      j["classification"] = to_string(pt.classification);
      j["sturm_count"] = rep.sturm_count;
      j["line_to_exceptional_ratio"] = *pt.line_to_exceptional_ratio;
      j["normalized_energy"] = pt.value_at_critical;
      j["three_normalized_energy"] = to_decimal(rep.three_normalized, d);
      j["two_chi_plus_three_tau"] = rep.two_chi_plus_three_tau;
      j["gauss_bonnet_residual"] = to_decimal(rep.gauss_bonnet_residual, d);
      os << j.dump(2) << '\n';
      return;
    }
    if (config.format == Format::csv) {
      os << "k,variable,bracket_low,bracket_high,root,classification,sturm_count,ratio,normalized_energy,"
            "three_normalized_energy,gauss_bonnet_residual\n";
      os << k << ',' << pt.variable << ',' << to_decimal(pt.bracket.low, d + 4) << ','
         << to_decimal(pt.bracket.high, d + 4) << ',' << pt.bracket.refined << ',' << to_string(pt.classification)
         << ',' << rep.sturm_count << ',' << *pt.line_to_exceptional_ratio << ',' << pt.value_at_critical << ','
         << to_decimal(rep.three_normalized, d) << ',' << to_decimal(rep.gauss_bonnet_residual, d) << '\n';
      return;
    }
    os << "surface              k = " << k << '\n';
    os << "critical " << pt.variable << "           " << pt.bracket.refined << "  (" << to_string(pt.classification)
       << ")\n";
    os << "certified bracket    (" << to_decimal(pt.bracket.low, d + 4) << ", " << to_decimal(pt.bracket.high, d + 4)
       << "]\n";
    os << "sturm count          " << rep.sturm_count << " on (0, 10^4]\n";
    os << "line / exceptional   " << *pt.line_to_exceptional_ratio << '\n';
    os << "energy / 96π²        " << pt.value_at_critical << '\n';
    os << "3 · energy / 96π²    " << to_decimal(rep.three_normalized, d) << '\n';
    os << "2χ + 3τ              " << rep.two_chi_plus_three_tau << '\n';
    os << "residual |r0|²/8π²   " << to_decimal(rep.gauss_bonnet_residual, d) << '\n';
  });
}

int cmd_scan3(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ScanReport rep;
  try {
    rep = scan_three_point(config.grid, config.threads);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const int d = config.digits;
  const ScanCell& g = rep.cells[rep.global_min];

  auto summary = [&](std::ostream& os) {
    if (config.format == Format::json) {
      nlohmann::ordered_json j;
      j["alpha_count"] = rep.grid.alpha_count;
      j["delta_count"] = rep.grid.delta_count;
      j["global_min"] = {{"alpha", num(g.alpha, d)},
                         {"delta", num(g.delta, d)},
                         {"value", to_decimal(g.value, d)},
                         {"on_boundary", rep.global_min_on_boundary},
                         {"delta_slope", num(rep.global_min_delta_slope, d)}};
      j["local_minima"] = rep.local_minima.size();
      j["interior_zero_candidates"] = rep.interior_zero_candidates.size();
      j["interior_critical_points"] = rep.interior_critical.size();
      os << j.dump(2) << '\n';
      return;
    }
    os << "grid                 " << rep.grid.alpha_count << " x " << rep.grid.delta_count << '\n';
    os << "global minimum       alpha = " << num(g.alpha, d) << ", delta = " << num(g.delta, d)
       << ", value = " << to_decimal(g.value, d) << (rep.global_min_on_boundary ? "  (boundary delta = 0)" : "")
       << '\n';
    os << "one-sided d/ddelta   " << num(rep.global_min_delta_slope, d) << '\n';
    os << "local minima         " << rep.local_minima.size() << '\n';
    os << "interior zeros       " << rep.interior_critical.size() << " (candidates "
       << rep.interior_zero_candidates.size() << ")\n";
    for (const auto& p : rep.interior_critical)
      os << "  critical point     alpha = " << num(p.alpha, d) << ", delta = " << num(p.delta, d) << '\n';
  };

  if (config.out_path.empty()) {
    if (config.format == Format::csv)
      write_scan_csv(out, rep, d);
    else
      summary(out);
    return kExitOk;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << config.out_path << "'\n";
    return kExitUsage;
  }
  if (config.format == Format::json)
    write_scan_json(file, rep, d);
  else
    write_scan_csv(file, rep, d);
  if (!file) {
    err << "error: failed writing '" << config.out_path << "'\n";
    return kExitUsage;
  }
  summary(out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calabi energy on Kahler classes of blow-ups of the projective plane", "extremal-lab"};
  app.require_subcommand(1);

  RunConfig config;
  config.threads = threads_from_env();
  std::string format = "table";
  app.add_option("--digits", config.digits, "significant digits for refined values")
      ->check(CLI::Range(6, 200))
      ->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", config.out_path, "output path");

  auto* verify = app.add_subcommand("verify", "check every reproduced value");
  FaultInjection faults;
  verify->add_flag("--inject-coefficient-fault", faults.coefficient, "test hook: perturb D before the identity check")
      ->group("");

  auto* energy = app.add_subcommand("energy", "evaluate the energy at a slice class");
  int energy_k = 3;
  std::string alpha, beta, delta;
  energy->add_option("--k", energy_k, "number of blown-up points")->check(CLI::Range(1, 3));
  energy->add_option("--alpha", alpha, "area of E1 (p, p/q or decimal)");
  energy->add_option("--beta", beta, "area of E2 = area of E3");
  energy->add_option("--delta", delta, "opposite-side difference, >= 0");

  auto* critical = app.add_subcommand("critical", "certified critical class for k = 1 or 2");
  int critical_k = 1;
  critical->add_option("--k", critical_k, "number of blown-up points")->required();

  auto* scan3 = app.add_subcommand("scan3", "grid scan of the three-point slice at beta = 1");
  std::size_t grid_n = 0;
  scan3->add_option("--grid", grid_n, "grid points per axis")->check(CLI::Range(2, 100000));
  scan3->add_option("--alpha-min", config.grid.alpha_min, "smallest alpha/beta")->capture_default_str();
  scan3->add_option("--alpha-max", config.grid.alpha_max, "largest alpha/beta")->capture_default_str();
  scan3->add_option("--delta-max", config.grid.delta_max, "largest delta/beta")->capture_default_str();

  for (auto* sub : {verify, energy, critical, scan3}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
  if (grid_n) config.grid.alpha_count = config.grid.delta_count = grid_n;

  if (verify->parsed()) return cmd_verify(config, faults, out, err);
  if (energy->parsed()) return cmd_energy(config, energy_k, alpha, beta, delta, out, err);
  if (critical->parsed()) return cmd_critical(config, critical_k, out, err);
  return cmd_scan3(config, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"extremal-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace extremal::cli
