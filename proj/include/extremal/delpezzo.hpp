#pragma once

#include "extremal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// Numerical class aH - sum b_i E_i on the k-point blow-up of the plane.
struct CohomologyClass {
  Rational a;
  std::vector<Rational> b;

  std::size_t rank() const { return b.size(); }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
  CohomologyClass operator-(const CohomologyClass& y) const;
  CohomologyClass operator+(const CohomologyClass& y) const;
  CohomologyClass scaled(const Rational& factor) const;
  std::string to_string() const;
};

struct LabeledCurve {
  std::string label;
  CohomologyClass cls;
};

/// The plane blown up at k in {1,2,3} points in general position.
struct SurfaceModel {
  int k = 0;
  int euler = 0;      // 3 + k
  int signature = 0;  // 1 - k
  CohomologyClass c1;
  std::vector<LabeledCurve> minus_one_curves;

  int two_chi_plus_three_tau() const { return 2 * euler + 3 * signature; }
};

/// Curve areas of the hexagon: alpha, beta, gamma for E_1, E_2, E_3 and delta
/// for the common difference between opposite sides.
///
/// k = 3 uses all four; k = 2 has no E_1 (alpha must be 0) and its two
/// exceptional curves carry beta and gamma; k = 1 keeps alpha and delta only.
struct HexagonParams {
  Rational alpha, beta, gamma, delta;

  bool is_normalized() const { return sgn(delta) >= 0; }
  friend bool operator==(const HexagonParams&, const HexagonParams&) = default;
};

SurfaceModel make_surface(int k);

/// Q(x, y) = a_x a_y - sum b_x,i b_y,i.
Rational intersect(const CohomologyClass& x, const CohomologyClass& y);

CohomologyClass hexagon_to_class(const SurfaceModel& s, const HexagonParams& p);
HexagonParams class_to_hexagon(const SurfaceModel& s, const CohomologyClass& c);

/// Standard quadratic transformation on k = 3 hexagon parameters; an
/// involution that flips the sign of delta.
HexagonParams cremona(const HexagonParams& p);
CohomologyClass cremona(const CohomologyClass& c);
/// Applies cremona only when delta < 0.
HexagonParams cremona_normalize(const HexagonParams& p);

/// Description of the first failed positivity condition, or nullopt when
/// the class lies in the Kahler cone.
std::optional<std::string> kahler_violation(const SurfaceModel& s, const CohomologyClass& c);
bool is_kahler(const SurfaceModel& s, const CohomologyClass& c);

struct CurveArea {
  std::string label;
  Rational area;
};
std::vector<CurveArea> curve_areas(const SurfaceModel& s, const CohomologyClass& c);

}  // namespace extremal
