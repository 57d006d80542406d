#include "qcs/funceq.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "qcs/constants.hpp"
#include "qcs/error.hpp"
#include "qcs/smooth_min.hpp"

namespace qcs {

namespace {

const double kE = std::exp(1.0);
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, int iterations = 200) {
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iterations && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, f(x)};
}

// Linear interpolation on grid[0..last].
double interp(const std::vector<double>& grid, const std::vector<double>& values,
              std::size_t last, double y) {
  if (y <= grid[0]) return values[0];
  if (y >= grid[last]) return values[last];
  const auto it = std::upper_bound(grid.begin(), grid.begin() + static_cast<long>(last) + 1, y);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double w = (y - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

struct StepResult {
  double value;
  double y;
  std::size_t discrete_arg;
};

// min over 0 <= y <= min(x - 1, grid[last]) of F(y) + x / (y + 1), using the
// stored values. The discrete scan starts at `from`: the smallest discrete
// argmin is nondecreasing in x, because x/(y+1) has decreasing differences.
StepResult dp_step(double x, const std::vector<double>& grid, const std::vector<double>& values,
                   std::size_t last, std::size_t from) {
  const double upper = std::min(x - 1.0, grid[last]);
  std::size_t arg = from;
  double best = std::numeric_limits<double>::infinity();
  std::size_t j = from;
  for (; j <= last && grid[j] <= upper; ++j) {
    // F is nondecreasing, so no later candidate can beat the current best.
    if (values[j] >= best) break;
    const double v = values[j] + x / (grid[j] + 1.0);
    if (v < best) {
      best = v;
      arg = j;
    }
  }
  auto phi = [&](double y) { return interp(grid, values, last, y) + x / (y + 1.0); };
  const double a = grid[arg >= 3 ? arg - 3 : 0];
  const double b = std::min(upper, grid[std::min(arg + 3, last)]);
  StepResult out{best, grid[arg], arg};
  if (b > a) {
    const auto [y, v] = golden_min(phi, a, b);
    if (v < out.value) out = {v, y, arg};
  }
  if (const double v = phi(upper); v < out.value) out = {v, upper, arg};
  return out;
}

struct Grid {
  std::vector<double> x;
  std::size_t unit_points;
};

Grid make_grid(double x_max, std::size_t unit_points, std::size_t per_decade) {
  Grid g{{}, unit_points};
  for (std::size_t i = 0; i < unit_points; ++i) {
    g.x.push_back(static_cast<double>(i) / static_cast<double>(unit_points - 1));
  }
  for (std::size_t i = 1;; ++i) {
    const double v = std::pow(10.0, static_cast<double>(i) / static_cast<double>(per_decade));
    if (v >= x_max) break;
    g.x.push_back(v);
  }
  if (g.x.back() < x_max) g.x.push_back(x_max);
  return g;
}

std::vector<double> solve_grid(const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  std::size_t from = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 1.0) {
      values[i] = grid[i];
      continue;
    }
    const StepResult r = dp_step(grid[i], grid, values, i - 1, from);
    values[i] = r.value;
    from = r.discrete_arg;
  }
  return values;
}

}  // namespace

FuncEqTable build_F_table(double x_max, double tol, const FuncEqOptions& options) {
  if (!(x_max >= 1.0)) throw DomainError("x_max must be at least 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (x_max > kFuncEqMaxX) {
    throw CapacityError("function table is capped at x_max = 1e5");
  }
  if (options.unit_points < 2 || options.per_decade < 1) throw DomainError("grid too coarse");

  std::size_t density = options.per_decade;
  Grid coarse = make_grid(x_max, options.unit_points, density);
  std::vector<double> coarse_values = solve_grid(coarse.x);
  for (std::size_t pass = 0;; ++pass) {
    Grid fine = make_grid(x_max, options.unit_points, density * 2);
    std::vector<double> fine_values = solve_grid(fine.x);
    // Log point i of the coarse grid is log point 2i of the fine grid.
    double change = 0.0;
    const std::size_t u = options.unit_points;
    for (std::size_t i = u; i + 1 < coarse.x.size(); ++i) {
      const std::size_t fi = u + 2 * (i - u + 1) - 1;
      change = std::max(change, std::abs(coarse_values[i] - fine_values[fi]));
    }
    change = std::max(change, std::abs(coarse_values.back() - fine_values.back()));
    density *= 2;
    if (change <= tol) {
      FuncEqTable t;
      t.grid_ = std::move(fine.x);
      t.values_ = std::move(fine_values);
      t.tolerance_ = tol;
      t.per_decade_ = density;
      t.refinement_change_ = change;
      return t;
    }
    if (pass + 1 >= options.max_doublings) {
      throw CapacityError("function table did not reach tolerance " + std::to_string(tol) +
                          " within the grid cap (last change " + std::to_string(change) + ")");
    }
    coarse = std::move(fine);
    coarse_values = std::move(fine_values);
  }
}

double FuncEqTable::operator()(double x) const {
  if (!(x >= 0.0) || x > x_max()) throw DomainError("x outside the tabulated range");
  if (x <= 1.0) return x;
  return dp_step(x, grid_, values_, grid_.size() - 1, 0).value;
}

double FuncEqTable::argmin(double x) const {
  if (!(x >= 0.0) || x > x_max()) throw DomainError("x outside the tabulated range");
  if (x <= 1.0) return 0.0;
  return dp_step(x, grid_, values_, grid_.size() - 1, 0).y;
}

double FuncEqTable::interpolate(double x) const {
  if (!(x >= 0.0) || x > x_max()) throw DomainError("x outside the tabulated range");
  return interp(grid_, values_, grid_.size() - 1, x);
}

void FuncEqTable::write_csv(std::ostream& out) const {
  out << "x,F\n" << std::setprecision(17);
  for (std::size_t i = 0; i < grid_.size(); ++i) out << grid_[i] << ',' << values_[i] << '\n';
}

double staircase_sum(double x, std::span<const double> chain) {
  double total = 0.0;
  double prev = 0.0;
  for (double t : chain) {
    total += t / (prev + 1.0);
    prev = t;
  }
  return total + x / (prev + 1.0);
}

namespace {

constexpr double kHuge = 1e300;

// t_n from the critical-point recurrence started at t_0 = 0, t_1.
double shoot(double t1, std::size_t n, std::vector<double>* chain = nullptr) {
  if (chain) chain->assign(1, t1);
  double prev = 0.0, cur = t1;
  for (std::size_t j = 1; j < n; ++j) {
    const double next = (cur + 1.0) * (cur + 1.0) / (prev + 1.0);
    if (!(next < kHuge)) return kHuge;
    prev = cur;
    cur = next;
    if (chain && j + 1 < n) chain->push_back(cur);
  }
  return cur;
}

}  // namespace

namespace {

// Interior critical chain of F_n with the least value, if any. t_n is not
// monotone in t_1, so every sign change of t_n - x on a t_1 grid is bisected.
std::optional<StaircaseResult> staircase_interior(double x, std::size_t n) {
  constexpr std::size_t kGrid = 2048;
  std::vector<double> starts{0.0};
  const double lo = 1e-12, hi = std::max(x, 1.0);
  for (std::size_t i = 0; i < kGrid; ++i) {
    starts.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (kGrid - 1)));
  }
  std::optional<StaircaseResult> best;
  auto consider = [&](double t1) {
    StaircaseResult r{n, 0.0, {}, t1 == 0.0};
    shoot(t1, n, &r.chain);
    r.value = staircase_sum(x, r.chain);
    if (!best || r.value < best->value) best = std::move(r);
  };
  double prev = shoot(starts[0], n) - x;
  if (prev == 0.0) consider(starts[0]);
  for (std::size_t i = 1; i < starts.size(); ++i) {
    const double cur = shoot(starts[i], n) - x;
    if (cur == 0.0) consider(starts[i]);
    if ((prev < 0.0) != (cur < 0.0) && prev != 0.0 && cur != 0.0) {
      double a = starts[i - 1], b = starts[i];
      const bool rising = prev < 0.0;
      for (int it = 0; it < 200 && b - a > 1e-16 * std::max(1.0, b); ++it) {
        const double mid = 0.5 * (a + b);
        ((shoot(mid, n) < x) == rising ? a : b) = mid;
      }
      consider(0.5 * (a + b));
    }
    prev = cur;
  }
  return best;
}

std::size_t staircase_max_n(double x) {
  return static_cast<std::size_t>(std::ceil(2.0 * std::log(x + 1.0))) + 3;
}

}  // namespace

StaircaseResult staircase_min(double x, std::size_t n) {
  if (n < 1) throw DomainError("n must be positive");
  if (!(x > 0.0)) throw DomainError("x must be positive");
  if (n == 1) return {1, x, {}, false};

  const StaircaseResult lower = staircase_min(x, n - 1);
  StaircaseResult out{n, lower.value, {0.0}, true};
  out.chain.insert(out.chain.end(), lower.chain.begin(), lower.chain.end());
  if (auto interior = staircase_interior(x, n); interior && interior->value < out.value) {
    out = std::move(*interior);
  }
  return out;
}

StaircaseResult staircase_F(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive");
  StaircaseResult best{1, x, {}, false};
  for (std::size_t n = 2; n <= staircase_max_n(x); ++n) {
    if (auto r = staircase_interior(x, n); r && r->value < best.value) best = std::move(*r);
  }
  return best;
}

double distance_to_nearest_integer(double y) { return std::abs(y - std::round(y)); }

AsymptoticResidual F_residual(double x, const FuncEqTable& table) {
  if (!(x > std::exp(2.0))) throw DomainError("residual needs x > e^2");
  const double L = std::log(x);
  const double a = constants::variable_window_a.value;
  const double b = constants::phase_b.value;
  const double fx = table(x);
  const double dist = distance_to_nearest_integer(b + L);
  const double base = kE * L - a;
  return {fx - (base + kE * dist * dist / (2.0 * L)), fx - base};
}

AmgmResult amgm_f_log(double log_x) {
  if (!std::isfinite(log_x)) throw DomainError("ln x must be finite");
  if (log_x <= 0.0) return {std::exp(log_x), 1};
  const auto top = static_cast<std::size_t>(std::ceil(3.0 * log_x)) + 2;
  AmgmResult best{std::numeric_limits<double>::infinity(), 1};
  for (std::size_t n = 1; n <= top; ++n) {
    const double nn = static_cast<double>(n);
    const double v = nn * std::exp(log_x / nn);
    if (v < best.value) best = {v, n};
  }
  return best;
}

AmgmResult amgm_f(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive");
  return amgm_f_log(std::log(x));
}

double amgm_residual_log(double log_x) {
  if (!(log_x > 0.0)) throw DomainError("ln x must be positive");
  const double d = distance_to_nearest_integer(log_x);
  return amgm_f_log(log_x).value - kE * log_x - kE * d * d / (2.0 * log_x);
}

WeightedDigraph shallit_graph(std::size_t n) {
  if (n < 1) throw DomainError("n must be positive");
  WeightedDigraph g;
  for (std::size_t j = 0; j <= n; ++j) g.add_vertex(std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) g.add_edge(j, 0, 1.0);
  for (std::size_t j = 1; j <= n; ++j) g.add_edge(0, j, 1.0);
  for (std::size_t j = 1; j < n; ++j) g.add_edge(j, j + 1, 1.0);
  return g;
}

double shallit_g(std::span<const double> x) {
  double total = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0.0)) throw DomainError("x must be positive");
    total += x[j] + 1.0 / x[j];
    if (j + 1 < x.size()) total += x[j] / x[j + 1];
  }
  return total;
}

ShallitResult shallit_min(std::size_t n) {
  const QuotientSumSpec spec = build_quotient_sum(shallit_graph(n), Pin{0, 1.0});
  ShallitResult out;
  out.report = minimize(spec);
  out.c_n = 3.0 * static_cast<double>(n) - out.report.value;
  return out;
}

double a_n_star(std::size_t n, const FuncEqTable& table) {
  if (n < 1) throw DomainError("n must be positive");
  return table(static_cast<double>(n));
}

double variable_window_log_objective(std::span<const std::size_t> windows,
                                     std::span<const double> t, std::span<double> grad) {
  const std::size_t n = windows.size();
  if (t.size() != n) throw ValidationError("vector length does not match window count");
  if (!grad.empty()) std::fill(grad.begin(), grad.end(), 0.0);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(t[i]);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = windows[j];
    double sum = 0.0;
    for (std::size_t s = 1; s <= k; ++s) sum += x[(j + s) % n];
    const double term = x[j] * static_cast<double>(k) / sum;
    total += term;
    if (grad.empty()) continue;
    grad[j] += term;
    for (std::size_t s = 1; s <= k; ++s) grad[(j + s) % n] -= term * x[(j + s) % n] / sum;
  }
  return total;
}

BruteForceResult a_n_star_bruteforce(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > 5) throw CapacityError("brute force over window vectors is capped at n = 5");
  BruteForceResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> windows(n, 1);
  const auto starts = seeded_starts(n - 1, 16, seed);
  for (;;) {
    const SmoothObjective f = [&windows, n](std::span<const double> free, std::span<double> grad) {
      std::vector<double> t(n, 0.0), g(grad.empty() ? 0 : n);
      std::copy(free.begin(), free.end(), t.begin() + 1);
      const double v = variable_window_log_objective(windows, t, g);
      if (!grad.empty()) std::copy(g.begin() + 1, g.end(), grad.begin());
      return v;
    };
    for (const auto& s : starts) {
      const SmoothResult r = minimize_smooth(f, s);
      if (r.value < best.value) {
        best.value = r.value;
        best.windows = windows;
        best.x.assign(n, 1.0);
        for (std::size_t i = 1; i < n; ++i) best.x[i] = std::exp(r.x[i - 1]);
      }
    }
    // Odometer over [1, n]^n.
    std::size_t pos = 0;
    while (pos < n && windows[pos] == n) windows[pos++] = 1;
    if (pos == n) break;
    ++windows[pos];
  }
  return best;
}

}  // namespace qcs
