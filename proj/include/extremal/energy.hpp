#pragma once

#include "extremal/delpezzo.hpp"
#include "extremal/polynomial.hpp"
#include "extremal/rational_function.hpp"

#include <stdexcept>

namespace extremal {

inline const std::string kAlpha = "alpha";
inline const std::string kBeta = "beta";
inline const std::string kDelta = "delta";

/// A class on the slice beta = gamma, in hexagon coordinates.
///
/// beta = 0 collapses E_2 and E_3 and is read on the one-point blow-up,
/// alpha = 0 collapses E_1 and is read on the two-point blow-up.
struct SlicePoint {
  Rational alpha, beta, delta;
};

class NotKahlerError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Which table of coefficients to use for the t-variance sextic.
///
/// `printed` carries the alternative table, including its 193 on
/// beta^3 alpha^2 delta; `corrected` carries 192 there, the value forced by
/// the closed-form identity. Both read the garbled "276^4" term as
/// 276 beta^4 alpha delta.
enum class Transcription { corrected, printed };

/// D(alpha, beta, delta) = 144 pi^2 [omega]^2 * integral of (t - t0)^2.
Polynomial t_variance_poly(Transcription table = Transcription::corrected);

/// Numerator sextic N of (A|_P) / 96 pi^2 = N / D.
Polynomial energy_numerator_poly();

/// c1 . omega = 2 alpha + 4 beta + 3 delta on the slice.
Polynomial slice_c1_pairing_poly();
/// omega^2 = (alpha + 2 beta + delta)^2 - alpha^2 - 2 beta^2 on the slice.
Polynomial slice_volume_poly();
/// 4 (beta - alpha) delta (delta^2/3 + beta delta + beta^2) = [omega]^2 F.
Polynomial futaki_numerator_poly();

struct SliceEnergy {
  Polynomial numerator;    // N
  Polynomial denominator;  // D

  RationalFunction as_function() const { return {numerator, denominator}; }
  Rational value(const SlicePoint& p) const;
};

/// (A|_P) / 96 pi^2 as the quotient of the two sextics.
SliceEnergy energy_closed_form(Transcription table = Transcription::corrected);

/// Surface and class carrying a slice point; throws NotKahlerError when the
/// class is outside the Kahler cone or delta < 0.
struct SliceClass {
  SurfaceModel surface;
  CohomologyClass omega;
};
SliceClass slice_class(const SlicePoint& p);
/// As above, but on an explicitly chosen surface.
SliceClass slice_class(int k, const SlicePoint& p);

/// F(Xi, [omega]) for the slice class.
Rational futaki_restricted(const SlicePoint& p);

/// Energy split into its average-scalar-curvature and Futaki parts.
/// average_term, futaki_term and total are coefficients of pi^2;
/// normalized = total / 96.
struct EnergyBreakdown {
  Rational average_term;
  Rational futaki_term;
  Rational total;
  Rational normalized;

  static double pi_squared();
  double total_value() const { return total.get_d() * pi_squared(); }
};

EnergyBreakdown energy_composed(const SlicePoint& p, Transcription table = Transcription::corrected);
EnergyBreakdown energy_composed(int k, const SlicePoint& p, Transcription table = Transcription::corrected);

struct IdentityCheck {
  bool holds = false;
  Polynomial residual;
};

/// (1/3)(c1.omega)^2 D + 24 (beta-alpha)^2 delta^2 (delta^2/3+beta delta+beta^2)^2 - omega^2 N.
Polynomial identity_residual(const Polynomial& d, const Polynomial& n);
IdentityCheck verify_identity(Transcription table = Transcription::corrected);
IdentityCheck verify_identity(const Polynomial& d, const Polynomial& n);

class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Monomial = std::map<std::string, unsigned>;

/// Treats the D-coefficients of `unknowns` as free, imposes the closed-form
/// identity and solves the resulting linear system exactly. Throws
/// InconsistentSystemError when no choice of the unknowns zeroes the
/// residual, std::runtime_error when the solution is not unique.
std::vector<Rational> solve_unknown_coefficients(const Polynomial& d, const Polynomial& n,
                                                 const std::vector<Monomial>& unknowns);
/// The beta^4 alpha delta coefficient of D recovered from the identity.
Rational solve_unknown_coefficient();
Monomial garbled_monomial();

/// (4 + 14x + 16x^2 + 3x^3) / (x (6 + 6x + x^2)), x = delta / alpha.
RationalFunction one_point_energy();
/// Two-point quotient in y = delta / beta.
RationalFunction two_point_energy();

/// 3 * normalized - (2 chi + 3 tau), i.e. (1/8 pi^2) |r_0|^2 integrated.
Rational gauss_bonnet_residual(int k, const Rational& normalized_energy);
double gauss_bonnet_residual(int k, double normalized_energy);

}  // namespace extremal
