#pragma once

// Independent reference implementations used only by tests. None of them
// calls into the library's solvers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcs/digraph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const qcs::Digraph& g) {
  Adjacency a(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& e : g.edges()) a[e.from][e.to] = true;
  return a;
}

// Length of the shortest simple directed cycle by exhaustive DFS; 0 if none.
inline std::size_t girth_by_enumeration(const qcs::Digraph& g) {
  const Adjacency a = adjacency(g);
  const std::size_t n = g.size();
  std::size_t best = 0;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                                        std::size_t v,
                                                                        std::size_t len) {
    for (std::size_t w = start; w < n; ++w) {
      if (!a[v][w]) continue;
      if (w == start) {
        if (best == 0 || len < best) best = len;
      } else if (!used[w]) {
        used[w] = true;
        dfs(start, w, len + 1);
        used[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = true;
    dfs(s, s, 1);
    used[s] = false;
  }
  return best;
}

// Transitive closure by Floyd-Warshall; reach[i][i] is true.
inline Adjacency reachability(const qcs::Digraph& g) {
  Adjacency r = adjacency(g);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline bool strongly_connected(const qcs::Digraph& g) {
  const Adjacency r = reachability(g);
  for (const auto& row : r)
    for (bool b : row)
      if (!b) return false;
  return true;
}

// Random digraph on n vertices ("1".."n"), each ordered pair an edge with
// probability `density`, every vertex with at least one out-neighbor.
inline qcs::Digraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  qcs::Digraph g;
  for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
  for (std::size_t v = 0; v < n; ++v) {
    bool any = false;
    for (std::size_t w = 0; w < n; ++w) {
      if (v != w && coin(rng)) {
        g.add_edge(v, w);
        any = true;
      }
    }
    while (!any && n > 1) {
      const std::size_t w = pick(rng);
      if (w != v) {
        g.add_edge(v, w);
        any = true;
      }
    }
  }
  return g;
}

// Corpus of strongly connected digraphs with 2..max_n vertices.
inline std::vector<qcs::Digraph> strongly_connected_corpus(std::size_t count, std::size_t max_n,
                                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  std::vector<qcs::Digraph> out;
  while (out.size() < count) {
    qcs::Digraph g = random_digraph(size(rng), density(rng), rng);
    if (strongly_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

// Golden-section minimum of a unimodal f on [a, b].
inline std::pair<double, double> golden(const std::function<double(double)>& f, double a,
                                        double b) {
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 100; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc, c = b - kGolden * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd, d = a + kGolden * (b - a), fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

// Global 1-D minimum on [a, b]: dense scan, then golden section around the
// best sample.
inline double scan_min(const std::function<double(double)>& f, double a, double b,
                       std::size_t samples = 2000) {
  std::size_t arg = 0;
  double best = std::numeric_limits<double>::infinity();
  const double h = (b - a) / static_cast<double>(samples);
  for (std::size_t i = 0; i <= samples; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    if (v < best) best = v, arg = i;
  }
  const double lo = a + h * static_cast<double>(arg == 0 ? 0 : arg - 1);
  const double hi = a + h * static_cast<double>(std::min(arg + 1, samples));
  return std::min(best, golden(f, lo, hi).second);
}

// F_n(x) by nested 1-D minimization over the last chain element:
// F_n(x) = min over 0 <= t <= x of F_{n-1}(t) + x/(t+1), F_1(x) = x.
inline double staircase_by_recursion(double x, std::size_t n, std::size_t samples = 400) {
  if (n == 1) return x;
  auto phi = [x, n, samples](double t) {
    return staircase_by_recursion(t, n - 1, samples) + x / (t + 1.0);
  };
  return scan_min(phi, 0.0, x, samples);
}

// Minimum of g_n(x) = sum (x_j + 1/x_j) + sum_{j<n} x_j/x_{j+1} by cyclic
// coordinate descent; each coordinate has the closed-form update
// x_j = sqrt(b_j / a_j), a_j = 1 + 1/x_{j+1} (j < n), b_j = 1 + x_{j-1} (j > 1).
inline std::pair<double, std::vector<double>> shallit_coordinate_descent(std::size_t n) {
  std::vector<double> x(n, 1.0);
  auto value = [&] {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += x[j] + 1.0 / x[j];
      if (j + 1 < n) s += x[j] / x[j + 1];
    }
    return s;
  };
  double prev = value();
  for (int sweep = 0; sweep < 200000; ++sweep) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = 1.0 + (j + 1 < n ? 1.0 / x[j + 1] : 0.0);
      const double b = 1.0 + (j > 0 ? x[j - 1] : 0.0);
      x[j] = std::sqrt(b / a);
    }
    const double cur = value();
    if (prev - cur < 1e-16 * cur && sweep > 10) break;
    prev = cur;
  }
  return {value(), x};
}

// Minimum of sum_u w_u y_from/y_to over positive y by cyclic coordinate
// descent in log coordinates: in t_v alone the objective is
// a e^{t_v} + b e^{-t_v} + const, minimized at t_v = ln(b/a)/2. Requires every
// vertex to have in- and out-edges; vertex 0 stays at 1.
inline std::pair<double, std::vector<double>> quotient_sum_coordinate_descent(
    const qcs::WeightedDigraph& g, std::size_t sweeps = 200000) {
  const std::size_t n = g.size();
  std::vector<double> t(n, 0.0);
  const auto& edges = g.base().edges();
  auto value = [&] {
    double s = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      s += g.weight(e) * std::exp(t[edges[e].from] - t[edges[e].to]);
    }
    return s;
  };
  double prev = value();
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t v = 1; v < n; ++v) {
      double a = 0.0, b = 0.0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].from == v && edges[e].to != v) a += g.weight(e) * std::exp(-t[edges[e].to]);
        if (edges[e].to == v && edges[e].from != v) b += g.weight(e) * std::exp(t[edges[e].from]);
      }
      t[v] = 0.5 * std::log(b / a);
    }
    const double cur = value();
    if (prev - cur <= 1e-15 * cur && sweep > 10) break;
    prev = cur;
  }
  std::vector<double> y(n);
  for (std::size_t v = 0; v < n; ++v) y[v] = std::exp(t[v]);
  return {value(), y};
}

}  // namespace oracle
