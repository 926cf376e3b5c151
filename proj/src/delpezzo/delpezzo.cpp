#include "extremal/delpezzo.hpp"

#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

CohomologyClass basis_class(std::size_t k, int h, std::vector<int> e_minus) {
  CohomologyClass c{Rational(h), std::vector<Rational>(k, Rational(0))};
  for (std::size_t i = 0; i < k; ++i) c.b[i] = e_minus[i];
  return c;
}

void require_same_rank(const CohomologyClass& x, const CohomologyClass& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("classes live on different surfaces (rank " + std::to_string(x.rank()) + " vs " +
                                std::to_string(y.rank()) + ")");
}

}  // namespace

CohomologyClass CohomologyClass::operator-(const CohomologyClass& y) const {
  require_same_rank(*this, y);
  CohomologyClass r = *this;
  r.a -= y.a;
  for (std::size_t i = 0; i < b.size(); ++i) r.b[i] -= y.b[i];
  return r;
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& y) const {
  require_same_rank(*this, y);
  CohomologyClass r = *this;
  r.a += y.a;
  for (std::size_t i = 0; i < b.size(); ++i) r.b[i] += y.b[i];
  return r;
}

CohomologyClass CohomologyClass::scaled(const Rational& factor) const {
  CohomologyClass r = *this;
  r.a *= factor;
  for (auto& v : r.b) v *= factor;
  return r;
}

std::string CohomologyClass::to_string() const {
  std::ostringstream os;
  os << '(' << to_exact_string(a) << ';';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : " ") << to_exact_string(b[i]);
  os << ')';
  return os.str();
}

SurfaceModel make_surface(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("blow-up count k must be 1, 2 or 3 (got " + std::to_string(k) + ")");
  const auto n = static_cast<std::size_t>(k);
  SurfaceModel s;
  s.k = k;
  s.euler = 3 + k;
  s.signature = 1 - k;
  s.c1 = basis_class(n, 3, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = -1;  // E_i = 0*H - (-1) E_i
    s.minus_one_curves.push_back({"E" + std::to_string(i + 1), basis_class(n, 0, e)});
  }
  // Proper transforms of lines through two blown-up points, listed as the
  // side opposite E_1, E_2, E_3 in turn.
  if (k == 2) {
    s.minus_one_curves.push_back({"H-E1-E2", basis_class(n, 1, {1, 1})});
  } else if (k == 3) {
    s.minus_one_curves.push_back({"H-E2-E3", basis_class(n, 1, {0, 1, 1})});
    s.minus_one_curves.push_back({"H-E1-E3", basis_class(n, 1, {1, 0, 1})});
    s.minus_one_curves.push_back({"H-E1-E2", basis_class(n, 1, {1, 1, 0})});
  }
  return s;
}

Rational intersect(const CohomologyClass& x, const CohomologyClass& y) {
  require_same_rank(x, y);
  Rational q = x.a * y.a;
  for (std::size_t i = 0; i < x.b.size(); ++i) q -= x.b[i] * y.b[i];
  return q;
}

CohomologyClass hexagon_to_class(const SurfaceModel& s, const HexagonParams& p) {
  switch (s.k) {
    case 3:
      return {p.alpha + p.beta + p.gamma + p.delta, {p.alpha, p.beta, p.gamma}};
    case 2:
      if (sgn(p.alpha) != 0) throw std::invalid_argument("two-point surface has no alpha curve; alpha must be 0");
      return {p.beta + p.gamma + p.delta, {p.beta, p.gamma}};
    case 1:
      if (sgn(p.beta) != 0 || sgn(p.gamma) != 0)
        throw std::invalid_argument("one-point surface takes (alpha, delta) only; beta and gamma must be 0");
      return {p.alpha + p.delta, {p.alpha}};
    default:
      throw std::invalid_argument("invalid surface model");
  }
}

HexagonParams class_to_hexagon(const SurfaceModel& s, const CohomologyClass& c) {
  if (c.rank() != static_cast<std::size_t>(s.k)) throw std::invalid_argument("class rank does not match surface");
  switch (s.k) {
    case 3:
      return {c.b[0], c.b[1], c.b[2], c.a - c.b[0] - c.b[1] - c.b[2]};
    case 2:
      return {Rational(0), c.b[0], c.b[1], c.a - c.b[0] - c.b[1]};
    default:
      return {c.b[0], Rational(0), Rational(0), c.a - c.b[0]};
  }
}

CohomologyClass cremona(const CohomologyClass& c) {
  if (c.rank() != 3) throw std::invalid_argument("Cremona transformation acts on the three-point blow-up only");
  return {2 * c.a - c.b[0] - c.b[1] - c.b[2],
          {c.a - c.b[1] - c.b[2], c.a - c.b[0] - c.b[2], c.a - c.b[0] - c.b[1]}};
}

HexagonParams cremona(const HexagonParams& p) {
  static const SurfaceModel s3 = make_surface(3);
  return class_to_hexagon(s3, cremona(hexagon_to_class(s3, p)));
}

HexagonParams cremona_normalize(const HexagonParams& p) {
  return p.is_normalized() ? p : cremona(p);
}

std::optional<std::string> kahler_violation(const SurfaceModel& s, const CohomologyClass& c) {
  if (c.rank() != static_cast<std::size_t>(s.k)) return "class rank does not match surface";
  if (sgn(c.a) <= 0) return "H-coefficient must be positive (a = " + to_exact_string(c.a) + ")";
  for (const auto& curve : s.minus_one_curves) {
    Rational area = intersect(c, curve.cls);
    if (sgn(area) <= 0) return "area of " + curve.label + " must be positive (got " + to_exact_string(area) + ")";
  }
  Rational vol = intersect(c, c);
  if (sgn(vol) <= 0) return "self-intersection must be positive (got " + to_exact_string(vol) + ")";
  return std::nullopt;
}

bool is_kahler(const SurfaceModel& s, const CohomologyClass& c) { return !kahler_violation(s, c).has_value(); }

std::vector<CurveArea> curve_areas(const SurfaceModel& s, const CohomologyClass& c) {
  std::vector<CurveArea> out;
  out.reserve(s.minus_one_curves.size());
  for (const auto& curve : s.minus_one_curves) out.push_back({curve.label, intersect(c, curve.cls)});
  return out;
}

}  // namespace extremal
