#pragma once

#include "extremal/energy.hpp"
#include "extremal/roots.hpp"

#include <optional>

namespace extremal {

enum class Classification { local_min, local_max, inflection };
std::string to_string(Classification c);

struct CriticalPointResult {
  std::string variable;
  RootBracket bracket;
  Rational value_exact;  // f at the bracket midpoint
  std::string value_at_critical;
  Classification classification = Classification::inflection;
  Rational second_derivative;  // f'' at the bracket midpoint
  /// Area of a line over the area of an exceptional curve; set by the
  /// surface-specific wrappers.
  std::optional<std::string> line_to_exceptional_ratio;

  Rational root() const { return bracket.midpoint(); }
};

/// Search domain (low, high]. With `certify_tail` the domain is read as
/// (low, +inf) and Sturm counts certify that nothing lies beyond `high`.
struct SearchDomain {
  Rational low{0};
  Rational high{10000};
  bool certify_tail = true;
};

/// Critical points of a univariate rational function: the roots of
/// N'D - ND' in the domain, each certified, refined and classified by the
/// sign change of the derivative across its bracket.
std::vector<CriticalPointResult> critical_points_of(const RationalFunction& f, const SearchDomain& domain = {},
                                                    int digits = kDefaultDigits);

/// A certified one- or two-point critical class with derived quantities.
struct CriticalClassReport {
  int k = 0;
  CriticalPointResult point;
  std::size_t sturm_count = 0;     // critical points on the whole domain
  Rational ratio;                  // line / exceptional area at the midpoint
  Rational normalized_energy;      // A / 96 pi^2 at the midpoint
  Rational three_normalized;       // (1 / 4 pi^2) integral (2|W+|^2 + s^2/24)
  Rational gauss_bonnet_residual;  // three_normalized - (2 chi + 3 tau)
  int two_chi_plus_three_tau = 0;
};

/// One-point class: x = delta / alpha, ratio x + 1.
CriticalClassReport page_class(int digits = kDefaultDigits);
/// Two-point class: y = delta / beta, ratio y + 2.
CriticalClassReport two_point_class(int digits = kDefaultDigits);

/// Exact partials of (A|_P) / 96 pi^2 in alpha and delta at fixed beta.
struct Gradient {
  Rational d_alpha;
  Rational d_delta;

  double norm() const;
};
Gradient gradient(const SlicePoint& p);

struct ScanGrid {
  double alpha_min = 0.05;
  double alpha_max = 20.0;
  std::size_t alpha_count = 200;
  double delta_min = 0.0;
  double delta_max = 10.0;
  std::size_t delta_count = 200;
  /// Snap the geometric alpha node nearest 1 onto the anti-canonical gauge.
  bool snap_unit_alpha = true;
  double zero_threshold = 1e-9;

  std::vector<double> alpha_nodes() const;
  std::vector<double> delta_nodes() const;
};

struct ScanCell {
  double alpha = 0;
  double delta = 0;
  Rational value;  // exact at the (binary) node coordinates
  double grad_alpha = 0;
  double grad_delta = 0;
  double grad_norm = 0;
};

struct PolishedPoint {
  double alpha = 0;
  double delta = 0;
  double grad_norm = 0;
  bool converged = false;
};

struct ScanReport {
  ScanGrid grid;
  std::vector<ScanCell> cells;  // row-major: alpha outer, delta inner
  std::vector<std::size_t> local_minima;
  std::size_t global_min = 0;
  std::vector<std::size_t> interior_zero_candidates;
  std::vector<PolishedPoint> interior_critical;
  bool global_min_on_boundary = false;
  double global_min_delta_slope = 0;

  const ScanCell& at(std::size_t i, std::size_t j) const { return cells[i * grid.delta_count + j]; }
};

/// Scans the beta = 1 gauge of the slice. threads = 0 picks the hardware
/// concurrency; results are assembled in grid order regardless.
ScanReport scan_three_point(const ScanGrid& grid = {}, unsigned threads = 0);

/// Newton iteration on the gradient with exact Hessians.
PolishedPoint polish_critical(double alpha, double delta, int max_iterations = 40);

}  // namespace extremal
