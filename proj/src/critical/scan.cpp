#include "extremal/critical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace extremal {

namespace {

// Bivariate integer polynomial in (alpha, delta) at beta = 1, evaluated on
// p/q coordinates with denominators cleared to a common q_a^6 q_d^6.
struct ClearedPoly {
  struct Term {
    unsigned i, j;
    Integer c;
  };
  std::vector<Term> terms;

  explicit ClearedPoly(const Polynomial& p) {
    Polynomial q = substitute(p, {{kBeta, Polynomial(1)}});
    for (const auto& [e, c] : q.terms()) {
      unsigned i = 0, j = 0;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (q.variables()[v] == kAlpha) i = e[v];
        if (q.variables()[v] == kDelta) j = e[v];
      }
      if (c.get_den() != 1 || i > 6 || j > 6) throw std::logic_error("unexpected slice polynomial shape");
      terms.push_back({i, j, c.get_num()});
    }
  }
};

struct PowerTable {
  Integer num[7], den[7];
  void fill(const Rational& x) {
    num[0] = 1;
    den[0] = 1;
    for (int k = 1; k <= 6; ++k) {
      num[k] = num[k - 1] * x.get_num();
      den[k] = den[k - 1] * x.get_den();
    }
  }
};

Integer eval_cleared(const ClearedPoly& p, const PowerTable& a, const PowerTable& d) {
  Integer total(0), t;
  for (const auto& term : p.terms) {
    t = term.c * a.num[term.i];
    t *= a.den[6 - term.i];
    t *= d.num[term.j];
    t *= d.den[6 - term.j];
    total += t;
  }
  return total;
}

double ratio_to_double(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q.get_d();
}

struct SliceEvaluator {
  ClearedPoly n, d, na, nd, da, dd;

  SliceEvaluator()
      : n(energy_numerator_poly()),
        d(t_variance_poly()),
        na(partial(energy_numerator_poly(), kAlpha)),
        nd(partial(energy_numerator_poly(), kDelta)),
        da(partial(t_variance_poly(), kAlpha)),
        dd(partial(t_variance_poly(), kDelta)) {}

  ScanCell cell(double alpha, double delta) const {
    PowerTable pa, pd;
    pa.fill(from_double(alpha));
    pd.fill(from_double(delta));
    Integer vn = eval_cleared(n, pa, pd), vd = eval_cleared(d, pa, pd);
    Integer vna = eval_cleared(na, pa, pd), vnd = eval_cleared(nd, pa, pd);
    Integer vda = eval_cleared(da, pa, pd), vdd = eval_cleared(dd, pa, pd);
    ScanCell c;
    c.alpha = alpha;
    c.delta = delta;
    c.value = Rational(vn, vd);
    c.value.canonicalize();
    Integer d2 = vd * vd;
    c.grad_alpha = ratio_to_double(vna * vd - vn * vda, d2);
    c.grad_delta = ratio_to_double(vnd * vd - vn * vdd, d2);
    c.grad_norm = std::hypot(c.grad_alpha, c.grad_delta);
    return c;
  }
};

void validate(const ScanGrid& g) {
  if (!(g.alpha_min > 0)) throw std::invalid_argument("alpha range must be positive");
  if (!(g.alpha_max > g.alpha_min)) throw std::invalid_argument("degenerate alpha range");
  if (!(g.delta_min >= 0)) throw std::invalid_argument("delta range must be nonnegative");
  if (!(g.delta_max > g.delta_min)) throw std::invalid_argument("degenerate delta range");
  if (g.alpha_count < 2 || g.delta_count < 2) throw std::invalid_argument("grid counts must be >= 2");
  if (!std::isfinite(g.alpha_max) || !std::isfinite(g.delta_max)) throw std::invalid_argument("non-finite range");
}

}  // namespace

std::vector<double> ScanGrid::alpha_nodes() const {
  std::vector<double> out(alpha_count);
  const double lo = std::log(alpha_min), hi = std::log(alpha_max);
  for (std::size_t i = 0; i < alpha_count; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(alpha_count - 1);
    out[i] = std::exp(lo + t * (hi - lo));
  }
  out.front() = alpha_min;
  out.back() = alpha_max;
  if (snap_unit_alpha && alpha_min <= 1.0 && 1.0 <= alpha_max) {
    auto nearest = std::min_element(out.begin(), out.end(), [](double x, double y) {
      return std::fabs(std::log(x)) < std::fabs(std::log(y));
    });
    *nearest = 1.0;
  }
  return out;
}

std::vector<double> ScanGrid::delta_nodes() const {
  std::vector<double> out(delta_count);
  for (std::size_t j = 0; j < delta_count; ++j) {
    double t = static_cast<double>(j) / static_cast<double>(delta_count - 1);
    out[j] = delta_min + t * (delta_max - delta_min);
  }
  out.back() = delta_max;
  return out;
}

ScanReport scan_three_point(const ScanGrid& grid, unsigned threads) {
  validate(grid);
  static const SliceEvaluator eval;

  ScanReport rep;
  rep.grid = grid;
  const auto alphas = grid.alpha_nodes();
  const auto deltas = grid.delta_nodes();
  const std::size_t na = alphas.size(), nd = deltas.size();
  rep.cells.resize(na * nd);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, na));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < na; i = next++)
      for (std::size_t j = 0; j < nd; ++j) rep.cells[i * nd + j] = eval.cell(alphas[i], deltas[j]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      const ScanCell& c = rep.cells[i * nd + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          long ii = static_cast<long>(i) + di, jj = static_cast<long>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<long>(na) || jj >= static_cast<long>(nd)) continue;
          if (!(c.value < rep.cells[static_cast<std::size_t>(ii) * nd + static_cast<std::size_t>(jj)].value)) {
            is_min = false;
            break;
          }
        }
      if (is_min) rep.local_minima.push_back(i * nd + j);
      if (c.value < rep.cells[rep.global_min].value) rep.global_min = i * nd + j;
      if (c.delta > 0 && c.grad_norm < grid.zero_threshold) rep.interior_zero_candidates.push_back(i * nd + j);
    }
  }

  for (std::size_t idx : rep.interior_zero_candidates) {
    PolishedPoint p = polish_critical(rep.cells[idx].alpha, rep.cells[idx].delta);
    if (p.converged && p.delta > 0) rep.interior_critical.push_back(p);
  }

  const ScanCell& g = rep.cells[rep.global_min];
  rep.global_min_on_boundary = g.delta == grid.delta_min;
  rep.global_min_delta_slope = g.grad_delta;
  return rep;
}

PolishedPoint polish_critical(double alpha, double delta, int max_iterations) {
  static const RationalFunction f = energy_closed_form().as_function();
  static const RationalFunction fa = f.partial(kAlpha);
  static const RationalFunction fd = f.partial(kDelta);
  static const RationalFunction faa = fa.partial(kAlpha);
  static const RationalFunction fad = fa.partial(kDelta);
  static const RationalFunction fdd = fd.partial(kDelta);

  PolishedPoint p{alpha, delta, 0, false};
  for (int it = 0; it < max_iterations; ++it) {
    if (!(p.alpha > 0) || p.delta < 0 || !std::isfinite(p.alpha) || !std::isfinite(p.delta)) return p;
    Point pt{{kAlpha, from_double(p.alpha)}, {kBeta, Rational(1)}, {kDelta, from_double(p.delta)}};
    double ga = fa.eval(pt).get_d(), gd = fd.eval(pt).get_d();
    p.grad_norm = std::hypot(ga, gd);
    if (p.grad_norm < 1e-14) {
      p.converged = true;
      return p;
    }
    double haa = faa.eval(pt).get_d(), had = fad.eval(pt).get_d(), hdd = fdd.eval(pt).get_d();
    double det = haa * hdd - had * had;
    if (det == 0 || !std::isfinite(det)) return p;
    p.alpha -= (hdd * ga - had * gd) / det;
    p.delta -= (haa * gd - had * ga) / det;
  }
  return p;
}

}  // namespace extremal
