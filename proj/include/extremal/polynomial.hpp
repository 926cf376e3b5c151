#pragma once

#include "extremal/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The variable universe is kept sorted by name and terms are keyed by
/// exponent vectors over that universe, so zero coefficients never appear
/// and iteration order is deterministic. Values are immutable in practice:
/// every operation returns a new polynomial.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(std::vector<std::string> variables, TermMap terms);

  static Polynomial variable(std::string name);
  /// c * prod(name_i ^ e_i).
  static Polynomial monomial(const Rational& c, const std::map<std::string, unsigned>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::string_view var) const;
  /// Variables that occur with a nonzero exponent in some term.
  std::vector<std::string> used_variables() const;
  Rational coefficient(const std::map<std::string, unsigned>& powers) const;
  Rational constant_term() const;

  /// Same polynomial with unused variables dropped from the universe.
  Polynomial compact() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  friend bool operator==(const Polynomial& p, const Polynomial& q);

  Polynomial pow(unsigned n) const;

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<std::string> vars_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial partial(const Polynomial& p, std::string_view var);

using Bindings = std::map<std::string, Polynomial, std::less<>>;
using Point = std::map<std::string, Rational, std::less<>>;

/// Replaces each bound variable by its polynomial; bound variables leave the
/// universe unless the replacements reintroduce them.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

/// Exact value. Every variable in the universe must be bound.
Rational eval(const Polynomial& p, const Point& point);

/// Floating evaluation, used only as a cross-check path.
double eval_double(const Polynomial& p, const std::map<std::string, double, std::less<>>& point);

/// Degree of homogeneity. The zero polynomial is homogeneous of any degree
/// (`any` set); a non-homogeneous polynomial has no degree.
struct Homogeneity {
  bool any = false;
  std::optional<int> degree;

  bool is_homogeneous() const { return any || degree.has_value(); }
};
Homogeneity homogeneous_degree(const Polynomial& p);

/// Univariate helpers: the polynomial must use at most one variable.
std::optional<std::string> sole_variable(const Polynomial& p);
Rational eval_univariate(const Polynomial& p, const Rational& x);

}  // namespace extremal
