#pragma once

#include "extremal/critical.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal::cli {

enum class Format { table, json, csv };

struct RunConfig {
  int digits = kDefaultDigits;
  ScanGrid grid;
  Format format = Format::table;
  std::string out_path;
  unsigned threads = 0;
};

/// One checked quantity. Exact records (tolerance 0) pass only on exact
/// equality; decimal records pass when abs_error <= tolerance.
struct VerificationRecord {
  std::string name;
  std::string expected;
  std::string computed;
  double abs_error = 0;
  double tolerance = 0;
  bool pass = false;
};

struct FaultInjection {
  /// Adds 1 to the beta^4 alpha delta coefficient of D before the identity
  /// check.
  bool coefficient = false;
};

std::vector<VerificationRecord> run_verification(const RunConfig& config, const FaultInjection& faults = {});

void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, Format format);
void write_scan_csv(std::ostream& os, const ScanReport& report, int digits);
void write_scan_json(std::ostream& os, const ScanReport& report, int digits);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
