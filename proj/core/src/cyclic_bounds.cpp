#include "qcs/cyclic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcs/error.hpp"
#include "qcs/smooth_min.hpp"

namespace qcs {

namespace {

void check_nk(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("need 1 <= k <= n");
}

// Full log-vector from the free coordinates, t_0 = 0.
std::vector<double> with_anchor(std::span<const double> free) {
  std::vector<double> t(free.size() + 1, 0.0);
  std::copy(free.begin(), free.end(), t.begin() + 1);
  return t;
}

SmoothObjective pinned_objective(std::size_t n, std::size_t k, double p) {
  return [n, k, p](std::span<const double> free, std::span<double> grad) {
    const std::vector<double> t = with_anchor(free);
    std::vector<double> g(grad.empty() ? 0 : n);
    const double f = diananda_log_objective(n, k, p, t, g);
    if (!grad.empty()) std::copy(g.begin() + 1, g.end(), grad.begin());
    return f;
  };
}

// S_{n,k,+inf} at x = exp(t), without forming x.
double max_sum_log(std::size_t n, std::size_t k, const std::vector<double>& t) {
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 1; s <= k; ++s) top = std::max(top, t[(j + s) % n]);
    total += std::exp(t[j] - top);
  }
  return total;
}

}  // namespace

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::formula: return "formula";
    case BoundKind::upper_bound: return "upper-bound";
  }
  return "unknown";
}

double diananda_log_objective(std::size_t n, std::size_t k, double p, std::span<const double> t,
                              std::span<double> grad) {
  check_nk(n, k);
  if (t.size() != n) throw ValidationError("vector length does not match n");
  if (!std::isfinite(p)) throw DomainError("finite p required");
  if (!grad.empty()) std::fill(grad.begin(), grad.end(), 0.0);
  const double kk = static_cast<double>(k);
  double total = 0.0;
  std::vector<double> window(k);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 1; s <= k; ++s) window[s - 1] = t[(j + s) % n];
    double log_mean;
    if (p == 0.0) {
      log_mean = 0.0;
      for (double v : window) log_mean += v;
      log_mean /= kk;
    } else {
      double peak = -std::numeric_limits<double>::infinity();
      for (double v : window) peak = std::max(peak, p * v);
      double acc = 0.0;
      for (double v : window) acc += std::exp(p * v - peak);
      log_mean = (peak + std::log(acc / kk)) / p;
    }
    const double term = std::exp(t[j] - log_mean);
    total += term;
    if (grad.empty()) continue;
    grad[j] += term;
    for (std::size_t s = 1; s <= k; ++s) {
      const std::size_t m = (j + s) % n;
      grad[m] -= term * std::exp(p * (t[m] - log_mean)) / kk;
    }
  }
  return total;
}

DianandaReport minimize_diananda(std::size_t n, std::size_t k, PowerOrder p,
                                 const DianandaOptions& options) {
  check_nk(n, k);
  if (std::isnan(p.p)) throw DomainError("power order is NaN");
  DianandaReport out;
  OptReport& r = out.report;
  if (p.p <= 0.0) {
    r.value = static_cast<double>(n);
    r.minimizer.assign(n, 1.0);
    r.attained = true;
    out.kind = BoundKind::exact;
    out.citation = p.p <= -1.0 ? "B_{k,-1} = 1 via the permutation form of AM-GM"
                               : "B_{k,0} = 1 via AM-GM on geometric-mean windows";
    return out;
  }
  if (p.is_max()) {
    r.value = static_cast<double>((n + k - 1) / k);
    r.attained = false;
    out.kind = BoundKind::formula;
    out.citation = "Diananda: A_{n,k,+inf} = floor((n + k - 1) / k)";
    return out;
  }
  const SmoothResult best = multi_start(pinned_objective(n, k, p.p), n - 1, options.starts,
                                        options.seed);
  r.value = best.value;
  r.minimizer = with_anchor(best.x);
  for (double& v : r.minimizer) v = std::exp(v);
  r.attained = true;
  r.status = best.converged ? SolveStatus::converged : SolveStatus::iteration_limit;
  r.iterations = best.iterations;
  out.kind = BoundKind::upper_bound;
  out.citation = "numeric local minimum; no certifying method is known for finite p > 0";
  return out;
}

ContinuationResult diananda_max_continuation(std::size_t n, std::size_t k,
                                             const DianandaOptions& options) {
  check_nk(n, k);
  ContinuationResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& start : seeded_starts(n - 1, std::max<std::size_t>(options.starts, 1),
                                   options.seed)) {
    std::vector<double> free = std::move(start);
    double surrogate = 0.0;
    for (double p : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
      const SmoothResult r = minimize_smooth(pinned_objective(n, k, p), free);
      free = r.x;
      surrogate = r.value;
    }
    std::vector<double> x = with_anchor(free);
    const double value = max_sum_log(n, k, x);
    for (double& v : x) v = std::exp(v);
    if (value < best.value) best = {value, surrogate, std::move(x)};
  }
  return best;
}

double diananda_lb(std::size_t k) {
  if (k < 1) throw DomainError("k must be positive");
  const double kk = static_cast<double>(k);
  return kk * std::expm1(std::log(2.0) / kk);
}

double bkp_factor(std::size_t k, double p) {
  if (!(p > 1.0)) throw DomainError("p must exceed 1");
  if (k < 2) throw DomainError("k must be at least 2");
  const double kk = static_cast<double>(k);
  const double inv_p = 1.0 / p;
  const double inv_q = 1.0 - inv_p;
  auto u = [kk](double t) {
    // (k^t - 1)^t t^{-t} = ((k^t - 1) / t)^t
    return std::pow(std::expm1(t * std::log(kk)) / t, t);
  };
  return std::pow(kk, -inv_q * inv_q) / (kk - 1.0) * u(inv_p) * u(inv_q);
}

double bkp_lower_bound(std::size_t k, double p, double bk1_lower) {
  if (!(bk1_lower > 0.0) || bk1_lower > 1.0) throw DomainError("B_{k,1} bound must lie in (0, 1]");
  return std::pow(bk1_lower, 1.0 / p) * bkp_factor(k, p);
}

double mavlo_lhs(double a, double b, double c, double x) {
  if (a < 0.0 || b < 0.0 || c < 0.0 || a + b + c <= 0.0) {
    throw DomainError("a, b, c must be nonnegative and not all zero");
  }
  if (!(x > 0.0)) throw DomainError("x must be positive");
  const double da = b + c * x, db = c + a * x, dc = a + b * x;
  if (!(da > 0.0 && db > 0.0 && dc > 0.0)) throw DomainError("zero denominator");
  return a / da + b / db + c / dc;
}

MavloBounds mavlo_bounds(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive");
  return {3.0 * x / (1.0 + x * x * x), 3.0 / (1.0 + x)};
}

double georgiev_identity_residual(double a, double b, double c, double x) {
  const double lhs = mavlo_lhs(a, b, c, x) * (1.0 + x * x * x);
  const double A = b + c * x, B = c + a * x, C = a + b * x;
  const double x2 = x * x;
  const double rhs = B / A * x2 + A / B + C / B * x2 + B / C + A / C * x2 + C / A - 3.0 * x;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

double mavlo_uvw_lhs(double u, double v, double w) {
  if (!(u > 0.0 && v > 0.0 && w > 0.0)) throw DomainError("u, v, w must be positive");
  return 1.0 / (u * (1.0 + v)) + 1.0 / (v * (1.0 + w)) + 1.0 / (w * (1.0 + u));
}

MavloTuple mavlo_substitution(double u, double v, double w) {
  if (!(u > 0.0 && v > 0.0 && w > 0.0)) throw DomainError("u, v, w must be positive");
  const double x = std::cbrt(u * v * w);
  const double b = u / x;
  const double c = v * b / x;
  return {1.0, b, c, x};
}

WeightedDigraph mavlo_graph(double x) {
  if (!(x > 0.0)) throw DomainError("x must be positive");
  const double x2 = x * x;
  WeightedDigraph g;
  for (const char* id : {"A", "B", "C"}) g.add_vertex(id);
  g.add_edge("A", "B", 1.0);
  g.add_edge("B", "C", 1.0);
  g.add_edge("C", "A", 1.0);
  g.add_edge("B", "A", x2);
  g.add_edge("C", "B", x2);
  g.add_edge("A", "C", x2);
  return g;
}

}  // namespace qcs
