#include "extremal/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

std::vector<std::string> merge_universe(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Re-express `terms` over `from` as exponent vectors over the superset `to`.
Polynomial::TermMap embed(const Polynomial::TermMap& terms, const std::vector<std::string>& from,
                          const std::vector<std::string>& to) {
  if (from == to) return terms;
  std::vector<std::size_t> slot(from.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    slot[i] = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), from[i]) - to.begin());
  Polynomial::TermMap out;
  for (const auto& [e, c] : terms) {
    Polynomial::Exponents f(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[slot[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  return out;
}

long index_of(const std::vector<std::string>& vars, std::string_view v) {
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it == vars.end() || *it != v) return -1;
  return it - vars.begin();
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_)
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector size mismatch");
  // Bring the universe into sorted order.
  std::vector<std::string> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate variable name");
  if (sorted != vars_) {
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) slot[i] = static_cast<std::size_t>(index_of(sorted, vars_[i]));
    TermMap re;
    for (const auto& [e, c] : terms_) {
      Exponents f(sorted.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[slot[i]] = e[i];
      re[f] += c;
    }
    terms_ = std::move(re);
    vars_ = std::move(sorted);
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Polynomial({std::move(name)}, TermMap{{Exponents{1}, Rational(1)}});
}

Polynomial Polynomial::monomial(const Rational& c, const std::map<std::string, unsigned>& powers) {
  std::vector<std::string> vars;
  Exponents e;
  for (const auto& [v, n] : powers) {
    vars.push_back(v);
    e.push_back(n);
  }
  return Polynomial(std::move(vars), TermMap{{std::move(e), c}});
}

bool Polynomial::is_constant() const { return total_degree() <= 0; }

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::degree_in(std::string_view var) const {
  long i = index_of(vars_, var);
  if (terms_.empty()) return -1;
  if (i < 0) return 0;
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[static_cast<std::size_t>(i)]));
  return best;
}

std::vector<std::string> Polynomial::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
    if (used) out.push_back(vars_[i]);
  }
  return out;
}

Rational Polynomial::coefficient(const std::map<std::string, unsigned>& powers) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [v, n] : powers) {
    long i = index_of(vars_, v);
    if (i < 0) {
      if (n != 0) return Rational(0);
      continue;
    }
    e[static_cast<std::size_t>(i)] = n;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient({}); }

Polynomial Polynomial::compact() const {
  std::vector<std::string> used = used_variables();
  if (used.size() == vars_.size()) return *this;
  std::vector<std::size_t> keep;
  for (const auto& v : used) keep.push_back(static_cast<std::size_t>(index_of(vars_, v)));
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(keep.size());
    for (std::size_t k : keep) f.push_back(e[k]);
    out.emplace(std::move(f), c);
  }
  Polynomial p;
  p.vars_ = std::move(used);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  r.vars_ = merge_universe(p.vars_, q.vars_);
  r.terms_ = embed(p.terms_, p.vars_, r.vars_);
  for (auto& [e, c] : embed(q.terms_, q.vars_, r.vars_)) {
    auto [it, inserted] = r.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  r.vars_ = merge_universe(p.vars_, q.vars_);
  if (p.is_zero() || q.is_zero()) return r;
  auto a = embed(p.terms_, p.vars_, r.vars_);
  auto b = embed(q.terms_, q.vars_, r.vars_);
  Polynomial::Exponents e(r.vars_.size());
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.terms_[e] += ca * cb;
    }
  }
  r.canonicalize();
  return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  auto u = merge_universe(p.vars_, q.vars_);
  return embed(p.terms_, p.vars_, u) == embed(q.terms_, q.vars_, u);
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    unsigned dx = 0, dy = 0;
    for (unsigned k : x->first) dx += k;
    for (unsigned k : y->first) dy += k;
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << to_exact_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, std::string_view var) {
  long i = index_of(p.variables(), var);
  if (i < 0) return Polynomial(p.variables(), {});
  auto k = static_cast<std::size_t>(i);
  Polynomial::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Polynomial::Exponents f = e;
    Rational nc = c * static_cast<unsigned long>(f[k]);
    --f[k];
    out.emplace(std::move(f), nc);
  }
  return Polynomial(p.variables(), std::move(out));
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  const auto& vars = p.variables();
  std::vector<std::string> free_vars;
  std::vector<long> bound_slot(vars.size(), -1);
  std::vector<const Polynomial*> repl;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it == bindings.end()) {
      free_vars.push_back(vars[i]);
    } else {
      bound_slot[i] = static_cast<long>(repl.size());
      repl.push_back(&it->second);
    }
  }
  if (repl.empty()) return p;

  // Power tables for each replacement, filled lazily.
  std::vector<std::vector<Polynomial>> powers(repl.size());
  auto power_of = [&](std::size_t r, unsigned n) -> const Polynomial& {
    auto& table = powers[r];
    if (table.empty()) table.emplace_back(Rational(1));
    while (table.size() <= n) table.push_back(table.back() * *repl[r]);
    return table[n];
  };

  Polynomial result(free_vars, {});
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents fe;
    fe.reserve(free_vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (bound_slot[i] < 0) fe.push_back(e[i]);
    Polynomial term(free_vars, Polynomial::TermMap{{fe, c}});
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (bound_slot[i] >= 0 && e[i] > 0) term *= power_of(static_cast<std::size_t>(bound_slot[i]), e[i]);
    result += term;
  }
  return result;
}

Rational eval(const Polynomial& p, const Point& point) {
  const auto& vars = p.variables();
  std::vector<Rational> values(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw std::invalid_argument("eval: unbound variable '" + vars[i] + "'");
    values[i] = it->second;
  }
  Rational total(0);
  Rational term;
  Rational pw;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpq_set(pw.get_mpq_t(), values[i].get_mpq_t());
      for (unsigned k = 1; k < e[i]; ++k) pw *= values[i];
      term *= pw;
    }
    total += term;
  }
  return total;
}

double eval_double(const Polynomial& p, const std::map<std::string, double, std::less<>>& point) {
  const auto& vars = p.variables();
  std::vector<double> values(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw std::invalid_argument("eval_double: unbound variable '" + vars[i] + "'");
    values[i] = it->second;
  }
  double total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(values[i], static_cast<double>(e[i]));
    total += term;
  }
  return total;
}

Homogeneity homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {true, std::nullopt};
  std::optional<int> d;
  for (const auto& [e, c] : p.terms()) {
    int td = 0;
    for (unsigned k : e) td += static_cast<int>(k);
    if (!d) d = td;
    else if (*d != td) return {false, std::nullopt};
  }
  return {false, d};
}

std::optional<std::string> sole_variable(const Polynomial& p) {
  auto used = p.used_variables();
  if (used.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + p.to_string());
  if (used.empty()) return std::nullopt;
  return used.front();
}

Rational eval_univariate(const Polynomial& p, const Rational& x) {
  Point pt;
  for (const auto& v : p.variables()) pt.emplace(v, x);
  auto used = p.used_variables();
  if (used.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + p.to_string());
  return eval(p, pt);
}

}  // namespace extremal
