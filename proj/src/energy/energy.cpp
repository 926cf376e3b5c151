#include "extremal/energy.hpp"

#include <numbers>

namespace extremal {

namespace {

struct Coefficient {
  long value;
  unsigned alpha, beta, delta;
};

Polynomial sextic(const std::vector<Coefficient>& table) {
  Polynomial::TermMap terms;
  for (const auto& t : table) terms[{t.alpha, t.beta, t.delta}] += Rational(t.value);
  return Polynomial({kAlpha, kBeta, kDelta}, std::move(terms));
}

const std::vector<Coefficient>& t_variance_table(Transcription table) {
  static const std::vector<Coefficient> corrected = {
      {360, 1, 3, 2}, {192, 2, 3, 1}, {276, 1, 4, 1}, {216, 1, 2, 3}, {60, 1, 1, 4}, {48, 2, 1, 3},
      {1, 0, 0, 6},   {12, 0, 6, 0},  {96, 2, 4, 0},  {72, 1, 5, 0},  {144, 2, 2, 2}, {120, 0, 3, 3},
      {138, 0, 4, 2}, {72, 0, 5, 1},  {54, 0, 2, 4},  {12, 0, 1, 5},  {6, 1, 0, 5},   {6, 2, 0, 4},
  };
  static const std::vector<Coefficient> printed = [] {
    auto t = corrected;
    t[1].value = 193;
    return t;
  }();
  return table == Transcription::printed ? printed : corrected;
}

const std::vector<Coefficient>& numerator_table() {
  static const std::vector<Coefficient> table = {
      {32, 0, 6, 0},  {160, 1, 5, 0}, {176, 0, 5, 1}, {318, 0, 4, 2}, {136, 2, 4, 0}, {536, 1, 4, 1},
      {32, 3, 3, 0},  {280, 0, 3, 3}, {696, 1, 3, 2}, {320, 2, 3, 1}, {440, 1, 2, 3}, {276, 2, 2, 2},
      {48, 3, 2, 1},  {132, 0, 2, 4}, {32, 0, 1, 5},  {104, 2, 1, 3}, {24, 3, 1, 2},  {136, 1, 1, 4},
      {4, 3, 0, 3},   {14, 2, 0, 4},  {16, 1, 0, 5},  {3, 0, 0, 6},
  };
  return table;
}

const Polynomial& var(const std::string& name) {
  static const Polynomial a = Polynomial::variable(kAlpha);
  static const Polynomial b = Polynomial::variable(kBeta);
  static const Polynomial d = Polynomial::variable(kDelta);
  return name == kAlpha ? a : name == kBeta ? b : d;
}

Point point_of(const SlicePoint& p) { return {{kAlpha, p.alpha}, {kBeta, p.beta}, {kDelta, p.delta}}; }

}  // namespace

Polynomial t_variance_poly(Transcription table) {
  static const Polynomial corrected = sextic(t_variance_table(Transcription::corrected));
  static const Polynomial printed = sextic(t_variance_table(Transcription::printed));
  return table == Transcription::printed ? printed : corrected;
}

Polynomial energy_numerator_poly() {
  static const Polynomial n = sextic(numerator_table());
  return n;
}

Polynomial slice_c1_pairing_poly() {
  const auto& a = var(kAlpha);
  const auto& b = var(kBeta);
  const auto& d = var(kDelta);
  // 3 (alpha + 2 beta + delta) - alpha - 2 beta
  return Polynomial(2) * (a + Polynomial(2) * b + d) + d;
}

Polynomial slice_volume_poly() {
  const auto& a = var(kAlpha);
  const auto& b = var(kBeta);
  const auto& d = var(kDelta);
  return (a + Polynomial(2) * b + d).pow(2) - a.pow(2) - Polynomial(2) * b.pow(2);
}

Polynomial futaki_numerator_poly() {
  const auto& a = var(kAlpha);
  const auto& b = var(kBeta);
  const auto& d = var(kDelta);
  return Polynomial(4) * (b - a) * d * (Polynomial(Rational(1, 3)) * d.pow(2) + b * d + b.pow(2));
}

Rational SliceEnergy::value(const SlicePoint& p) const { return as_function().eval(point_of(p)); }

SliceEnergy energy_closed_form(Transcription table) { return {energy_numerator_poly(), t_variance_poly(table)}; }

SliceClass slice_class(int k, const SlicePoint& p) {
  if (sgn(p.delta) < 0)
    throw NotKahlerError("delta must be >= 0 on the normalized slice; apply the Cremona transformation first");
  SurfaceModel s = make_surface(k);
  HexagonParams hp;
  switch (k) {
    case 3:
      hp = {p.alpha, p.beta, p.beta, p.delta};
      break;
    case 2:
      if (sgn(p.alpha) != 0) throw NotKahlerError("two-point slice requires alpha = 0");
      hp = {Rational(0), p.beta, p.beta, p.delta};
      break;
    default:
      if (sgn(p.beta) != 0) throw NotKahlerError("one-point slice requires beta = 0");
      hp = {p.alpha, Rational(0), Rational(0), p.delta};
      break;
  }
  CohomologyClass omega = hexagon_to_class(s, hp);
  if (auto why = kahler_violation(s, omega)) throw NotKahlerError("class " + omega.to_string() + " is not Kahler: " + *why);
  return {std::move(s), std::move(omega)};
}

SliceClass slice_class(const SlicePoint& p) {
  int k = 3;
  if (sgn(p.beta) == 0)
    k = 1;
  else if (sgn(p.alpha) == 0)
    k = 2;
  return slice_class(k, p);
}

Rational futaki_restricted(const SlicePoint& p) {
  SliceClass sc = slice_class(p);
  Rational volume = intersect(sc.omega, sc.omega);
  Rational f = eval(futaki_numerator_poly(), point_of(p)) / volume;
  f.canonicalize();
  return f;
}

double EnergyBreakdown::pi_squared() { return std::numbers::pi * std::numbers::pi; }

EnergyBreakdown energy_composed(int k, const SlicePoint& p, Transcription table) {
  SliceClass sc = slice_class(k, p);
  Rational volume = intersect(sc.omega, sc.omega);
  Rational pairing = intersect(sc.surface.c1, sc.omega);
  Rational futaki = eval(futaki_numerator_poly(), point_of(p)) / volume;
  Rational variance = eval(t_variance_poly(table), point_of(p));
  if (sgn(variance) == 0) throw std::logic_error("t-variance sextic vanishes on a Kahler class");

  EnergyBreakdown e;
  e.average_term = 32 * pairing * pairing / volume;
  // (s - s0) = lambda (t - t0) and F = -integral (t - t0)(s - s0) give
  // integral (s - s0)^2 = F^2 / integral (t - t0)^2, with
  // integral (t - t0)^2 = D / (144 pi^2 omega^2).
  e.futaki_term = futaki * futaki * 144 * volume / variance;
  e.average_term.canonicalize();
  e.futaki_term.canonicalize();
  e.total = e.average_term + e.futaki_term;
  e.normalized = e.total / 96;
  e.normalized.canonicalize();
  return e;
}

EnergyBreakdown energy_composed(const SlicePoint& p, Transcription table) {
  int k = slice_class(p).surface.k;
  return energy_composed(k, p, table);
}

Polynomial identity_residual(const Polynomial& d, const Polynomial& n) {
  Polynomial pairing = slice_c1_pairing_poly();
  const auto& a = var(kAlpha);
  const auto& b = var(kBeta);
  const auto& dl = var(kDelta);
  Polynomial bracket = Polynomial(Rational(1, 3)) * dl.pow(2) + b * dl + b.pow(2);
  Polynomial futaki_sq = Polynomial(24) * (b - a).pow(2) * dl.pow(2) * bracket.pow(2);
  return Polynomial(Rational(1, 3)) * pairing.pow(2) * d + futaki_sq - slice_volume_poly() * n;
}

IdentityCheck verify_identity(const Polynomial& d, const Polynomial& n) {
  IdentityCheck c;
  c.residual = identity_residual(d, n);
  c.holds = c.residual.is_zero();
  return c;
}

IdentityCheck verify_identity(Transcription table) {
  return verify_identity(t_variance_poly(table), energy_numerator_poly());
}

std::vector<Rational> solve_unknown_coefficients(const Polynomial& d, const Polynomial& n,
                                                 const std::vector<Monomial>& unknowns) {
  // residual(c) = residual_0 + sum_j c_j * (1/3)(c1.omega)^2 m_j, linear in c.
  Polynomial stripped = d;
  for (const auto& m : unknowns) stripped -= Polynomial::monomial(d.coefficient(m), m);
  Polynomial base = identity_residual(stripped, n);
  Polynomial weight = Polynomial(Rational(1, 3)) * slice_c1_pairing_poly().pow(2);
  std::vector<Polynomial> columns;
  for (const auto& m : unknowns) columns.push_back(weight * Polynomial::monomial(Rational(1), m));

  // One equation per monomial that appears anywhere.
  std::map<Monomial, std::vector<Rational>> rows;
  auto collect = [&](const Polynomial& p, std::size_t col) {
    for (const auto& [e, c] : p.terms()) {
      Monomial key;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) key[p.variables()[i]] = e[i];
      auto& row = rows[key];
      if (row.empty()) row.assign(unknowns.size() + 1, Rational(0));
      row[col] += c;
    }
  };
  const std::size_t rhs = unknowns.size();
  collect(base, rhs);
  for (std::size_t j = 0; j < columns.size(); ++j) collect(columns[j], j);

  std::vector<std::vector<Rational>> m;
  for (auto& [key, row] : rows) {
    row[rhs] = -row[rhs];
    m.push_back(row);
  }

  // Gauss-Jordan elimination over Q.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rhs && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = 1 / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c <= rhs; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r)
    if (sgn(m[r][rhs]) != 0)
      throw InconsistentSystemError("closed-form identity cannot hold for any value of the unknown coefficients");
  if (rank < unknowns.size()) throw std::runtime_error("unknown coefficients are not determined by the identity");

  std::vector<Rational> out(unknowns.size());
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t col = 0;
    while (sgn(m[r][col]) == 0) ++col;
    out[col] = m[r][rhs];
    out[col].canonicalize();
  }
  return out;
}

Monomial garbled_monomial() { return {{kAlpha, 1}, {kBeta, 4}, {kDelta, 1}}; }

Rational solve_unknown_coefficient() {
  return solve_unknown_coefficients(t_variance_poly(), energy_numerator_poly(), {garbled_monomial()}).front();
}

RationalFunction one_point_energy() {
  Polynomial x = Polynomial::variable("x");
  Polynomial num = Polynomial(4) + Polynomial(14) * x + Polynomial(16) * x.pow(2) + Polynomial(3) * x.pow(3);
  Polynomial den = x * (Polynomial(6) + Polynomial(6) * x + x.pow(2));
  return {num, den};
}

RationalFunction two_point_energy() {
  Polynomial y = Polynomial::variable("y");
  auto from = [&](std::initializer_list<long> coeffs) {
    Polynomial p;
    unsigned k = 0;
    for (long c : coeffs) p += Polynomial(c) * y.pow(k++);
    return p;
  };
  return {from({32, 176, 318, 280, 132, 32, 3}), from({12, 72, 138, 120, 54, 12, 1})};
}

Rational gauss_bonnet_residual(int k, const Rational& normalized_energy) {
  SurfaceModel s = make_surface(k);
  return 3 * normalized_energy - s.two_chi_plus_three_tau();
}

double gauss_bonnet_residual(int k, double normalized_energy) {
  SurfaceModel s = make_surface(k);
  return 3.0 * normalized_energy - s.two_chi_plus_three_tau();
}

}  // namespace extremal
