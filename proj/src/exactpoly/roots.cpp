#include "extremal/roots.hpp"

#include <stdexcept>

namespace extremal {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Dense to_dense(const Polynomial& p) {
  auto var = sole_variable(p);
  Dense out;
  if (p.is_zero()) return out;
  if (!var) return {p.constant_term()};
  std::size_t slot = 0;
  while (p.variables()[slot] != *var) ++slot;
  for (const auto& [e, c] : p.terms()) {
    std::size_t k = e[slot];
    if (out.size() <= k) out.resize(k + 1, Rational(0));
    out[k] = c;
  }
  trim(out);
  return out;
}

Dense derivative(const Dense& a) {
  Dense d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Remainder of a / b over the rationals.
Dense remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Quotient of an exact division.
Dense quotient(Dense a, const Dense& b) {
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

// Positive rational multiple with coprime integer coefficients.
IntegerCoefficients primitive(const Dense& a) {
  Integer lcm_den(1), g(0);
  for (const auto& c : a) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  IntegerCoefficients out;
  out.reserve(a.size());
  for (const auto& c : a) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

Dense to_rational(const IntegerCoefficients& a) {
  Dense out;
  out.reserve(a.size());
  for (const auto& c : a) out.emplace_back(c);
  return out;
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = r.empty() ? Dense{} : to_rational(primitive(r));
  }
  return a;
}

// Sign of sum c_i x^i at x = n/d (d > 0) via the homogenized integer form.
int sign_of(const IntegerCoefficients& c, const Rational& x) {
  if (c.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c.back();
  Integer dpow(1);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + c[i] * dpow;
  }
  return sgn(acc);
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void check_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
}

Rational refine_tolerance(const Rational& low, const Rational& high, int digits) {
  Rational scale(0);
  if (sgn(low) >= 0)
    scale = low;
  else if (sgn(high) <= 0)
    scale = -high;
  if (sgn(scale) == 0) return pow10(-digits - 1);
  return pow10(decimal_exponent(scale) - digits - 1);
}

RootBracket refine(const SturmSequence& s, Rational low, Rational high, int digits) {
  RootBracket b;
  auto exact_at = [&](const Rational& r) {
    b.low = b.high = r;
    b.exact = true;
    b.refined = to_decimal(r, digits);
    return b;
  };
  if (s.sign_at(high) == 0) return exact_at(high);
  while (true) {
    if (sgn(low) < 0 && sgn(high) > 0 && s.sign_at(Rational(0)) == 0) return exact_at(Rational(0));
    bool narrow = high - low <= refine_tolerance(low, high, digits);
    if (narrow && s.sign_at(low) != 0) break;
    Rational mid = (low + high) / 2;
    if (s.sign_at(mid) == 0) return exact_at(mid);
    if (s.count(low, mid) == 1)
      high = mid;
    else
      low = mid;
  }
  b.low = low;
  b.high = high;
  b.refined = to_decimal(b.midpoint(), digits);
  return b;
}

}  // namespace

Rational RootBracket::midpoint() const {
  Rational m = (low + high) / 2;
  m.canonicalize();
  return m;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  Dense a = to_dense(p);
  if (a.empty()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  Dense g = gcd(a, derivative(a));
  Dense sqf = g.size() > 1 ? quotient(a, g) : a;
  seq_.push_back(primitive(sqf));
  Dense prev = to_rational(seq_.back());
  Dense cur = derivative(prev);
  while (!cur.empty()) {
    seq_.push_back(primitive(cur));
    Dense r = remainder(prev, to_rational(seq_.back()));
    for (auto& c : r) c = -c;
    prev = to_rational(seq_.back());
    cur = std::move(r);
  }
}

int SturmSequence::sign_at(const Rational& x) const { return sign_of(seq_.front(), x); }

std::size_t SturmSequence::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(sign_of(q, x));
  return count_variations(signs);
}

std::size_t SturmSequence::variations_at_positive_infinity() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(sgn(q.back()));
  return count_variations(signs);
}

std::size_t SturmSequence::variations_at_negative_infinity() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(((q.size() - 1) % 2 == 0) ? sgn(q.back()) : -sgn(q.back()));
  return count_variations(signs);
}

std::size_t SturmSequence::count(const Rational& low, const Rational& high) const {
  if (low >= high) return 0;
  return variations(low) - variations(high);
}

std::size_t SturmSequence::count_above(const Rational& low) const {
  return variations(low) - variations_at_positive_infinity();
}

std::size_t SturmSequence::count_all() const {
  return variations_at_negative_infinity() - variations_at_positive_infinity();
}

Polynomial squarefree_part(const Polynomial& p) {
  SturmSequence s(p);
  auto var = sole_variable(p);
  const auto& c = s.squarefree();
  if (!var) return Polynomial(Rational(c.front()));
  Polynomial::TermMap terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) terms.emplace(Polynomial::Exponents{static_cast<unsigned>(i)}, Rational(c[i]));
  return Polynomial({*var}, std::move(terms));
}

std::size_t count_real_roots(const Polynomial& p, const Rational& low, const Rational& high) {
  if (low >= high) throw std::invalid_argument("degenerate interval: low >= high");
  return SturmSequence(p).count(low, high);
}

std::vector<RootBracket> isolate_real_roots(const Polynomial& p, const Rational& low, const Rational& high,
                                            int digits) {
  check_digits(digits);
  if (low >= high) throw std::invalid_argument("degenerate interval: low >= high");
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  SturmSequence s(p);

  std::vector<RootBracket> out;
  struct Piece {
    Rational low, high;
    std::size_t roots;
  };
  // Depth-first, left half first, so brackets come out in increasing order.
  std::vector<Piece> stack{{low, high, s.count(low, high)}};
  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    if (piece.roots == 0) continue;
    if (piece.roots == 1) {
      out.push_back(refine(s, piece.low, piece.high, digits));
      continue;
    }
    Rational mid = (piece.low + piece.high) / 2;
    std::size_t left = s.count(piece.low, mid);
    stack.push_back({mid, piece.high, piece.roots - left});
    stack.push_back({piece.low, mid, left});
  }
  return out;
}

std::vector<RootBracket> isolate_real_roots_above(const Polynomial& p, const Rational& low, int digits,
                                                  const Rational& truncation) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (truncation <= low) throw std::invalid_argument("degenerate interval: truncation bound <= low");
  SturmSequence s(p);
  if (s.count_above(truncation) != 0)
    throw std::domain_error("polynomial has roots beyond the truncation bound " + to_exact_string(truncation));
  return isolate_real_roots(p, low, truncation, digits);
}

}  // namespace extremal
