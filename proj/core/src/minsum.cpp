#include "qcs/minsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "qcs/error.hpp"
#include "qcs/smooth_min.hpp"
#include "qcs/sums.hpp"

namespace qcs {

namespace {

// Restricted growth strings enumerate unordered set partitions; every
// permutation of block ranks then yields each ordered partition once.
void enumerate_rgs(std::size_t n, std::vector<std::size_t>& rgs, std::size_t pos,
                   std::size_t blocks, const std::function<void(std::size_t)>& leaf) {
  if (pos == n) {
    leaf(blocks);
    return;
  }
  for (std::size_t b = 0; b <= blocks && b < n; ++b) {
    rgs[pos] = b;
    enumerate_rgs(n, rgs, pos + 1, std::max(blocks, b + 1), leaf);
  }
}

bool block_graph_strongly_connected(std::size_t m, const std::vector<std::uint32_t>& adj) {
  // Closure on bitmasks; m <= 8.
  std::vector<std::uint32_t> reach(m);
  for (std::size_t i = 0; i < m; ++i) reach[i] = adj[i] | (1u << i);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (reach[i] & (1u << k)) reach[i] |= reach[k];
    }
  }
  const std::uint32_t all = (m >= 32) ? ~0u : ((1u << m) - 1u);
  for (std::size_t i = 0; i < m; ++i) {
    if ((reach[i] & all) != all) return false;
  }
  return true;
}

bool better(double value, const std::vector<std::size_t>& enc, double best_value,
            const std::vector<std::size_t>& best_enc) {
  const double tie = 1e-12 * std::max(1.0, std::abs(best_value));
  if (value < best_value - tie) return true;
  if (value > best_value + tie) return false;
  return enc < best_enc;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::optional<MinSumCertificate> cert;
  std::size_t candidates = 0;
  std::size_t accepted = 0;
};

void consider(const Digraph& g, OrderedPartition part, const MinSumOptions& options, Best& best) {
  ++best.candidates;
  assign_nu(g, part);
  const std::size_t m = part.blocks.size();
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (part.nu[v] != part.block_of[v]) adj[part.block_of[v]] |= 1u << part.nu[v];
  }
  if (!block_graph_strongly_connected(m, adj)) return;

  const BlockReduction red = block_reduction(g, part);
  const OptReport r = minimize(red.spec);
  if (!r.attained) return;
  for (std::size_t b = 0; b + 1 < m; ++b) {
    if (r.minimizer[b + 1] < r.minimizer[b] * (1.0 + options.order_tolerance)) return;
  }
  ++best.accepted;
  const double value = r.value + red.offset;
  if (best.cert && !better(value, part.block_of, best.value, best.cert->partition.block_of)) {
    return;
  }
  best.value = value;
  best.cert = MinSumCertificate{std::move(part), r.minimizer, value};
}

}  // namespace

std::size_t for_each_ordered_partition(std::size_t n,
                                       const std::function<void(const OrderedPartition&)>& visit,
                                       std::size_t cap) {
  if (n > cap) {
    throw CapacityError("ordered partition enumeration is capped at n = " + std::to_string(cap));
  }
  if (n == 0) return 0;
  std::size_t count = 0;
  std::vector<std::size_t> rgs(n, 0);
  OrderedPartition part;
  enumerate_rgs(n, rgs, 0, 0, [&](std::size_t m) {
    std::vector<std::size_t> rank(m);
    std::iota(rank.begin(), rank.end(), 0);
    do {
      part.blocks.assign(m, {});
      part.block_of.resize(n);
      for (std::size_t v = 0; v < n; ++v) {
        part.block_of[v] = rank[rgs[v]];
        part.blocks[part.block_of[v]].push_back(v);
      }
      part.nu.clear();
      visit(part);
      ++count;
    } while (std::next_permutation(rank.begin(), rank.end()));
  });
  return count;
}

std::vector<OrderedPartition> enumerate_ordered_partitions(std::size_t n, std::size_t cap) {
  std::vector<OrderedPartition> out;
  for_each_ordered_partition(n, [&](const OrderedPartition& p) { out.push_back(p); }, cap);
  return out;
}

void assign_nu(const Digraph& g, OrderedPartition& part) {
  if (part.block_of.size() != g.size()) throw ValidationError("partition does not cover V");
  part.nu.assign(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nb = g.out(v);
    if (nb.empty()) throw StructureError("vertex '" + g.id(v) + "' has no out-neighbors");
    std::size_t lowest = std::numeric_limits<std::size_t>::max();
    for (std::size_t w : nb) lowest = std::min(lowest, part.block_of[w]);
    part.nu[v] = lowest;
  }
}

BlockReduction block_reduction(const Digraph& g, const OrderedPartition& part) {
  OrderedPartition p = part;
  if (p.nu.size() != g.size()) assign_nu(g, p);
  const std::size_t m = p.blocks.size();
  std::vector<double> weight(m * m, 0.0);
  BlockReduction red;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (p.nu[v] == p.block_of[v]) {
      red.offset += 1.0;
    } else {
      weight[p.block_of[v] * m + p.nu[v]] += 1.0;
    }
  }
  WeightedDigraph blocks;
  for (std::size_t b = 0; b < m; ++b) blocks.add_vertex("B" + std::to_string(b));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (weight[a * m + b] > 0.0) blocks.add_edge(a, b, weight[a * m + b]);
    }
  }
  red.spec = build_quotient_sum(std::move(blocks));
  return red;
}

std::vector<double> MinSumCertificate::induced_x() const {
  std::vector<double> x(partition.block_of.size());
  for (std::size_t v = 0; v < x.size(); ++v) x[v] = block_values.at(partition.block_of[v]);
  return x;
}

MinSumResult minsum_exact(const Digraph& g, const MinSumOptions& options) {
  const std::size_t n = g.size();
  if (n == 0) throw StructureError("empty graph");
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out(v).empty()) throw StructureError("vertex '" + g.id(v) + "' has no out-neighbors");
  }
  if (n > options.cap) {
    throw CapacityError("exact min-sum is capped at " + std::to_string(options.cap) + " vertices");
  }

  MinSumResult result;
  if (!is_strongly_connected(g)) {
    // Scaling components apart sends every term whose out-neighbors all lie
    // downstream to 0; each strong component keeps its own min-sum.
    const SccDecomposition d = scc(g);
    result.report.minimizer.assign(n, 1.0);
    for (const auto& comp : d.components) {
      const Digraph sub = g.induced(comp);
      bool has_internal = false;
      for (std::size_t v = 0; v < sub.size(); ++v) has_internal = has_internal || sub.out_degree(v) > 0;
      if (!has_internal) continue;
      const MinSumResult part = minsum_exact(sub, options);
      result.report.value += part.report.value;
      result.candidates += part.candidates;
      result.accepted += part.accepted;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        result.report.minimizer[comp[i]] = part.report.minimizer[i];
      }
    }
    result.report.attained = false;
    result.report.status = SolveStatus::recession_detected;
    std::vector<double> dir(n);
    for (std::size_t v = 0; v < n; ++v) dir[v] = static_cast<double>(d.component_of[v]);
    result.report.recession_direction = std::move(dir);
    return result;
  }

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  std::vector<Best> partial(threads);
  auto work = [&](std::size_t tid) {
    std::size_t index = 0;
    for_each_ordered_partition(
        n,
        [&](const OrderedPartition& p) {
          if (index++ % threads == tid) consider(g, p, options, partial[tid]);
        },
        options.cap);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  Best best;
  for (auto& p : partial) {
    best.candidates += p.candidates;
    best.accepted += p.accepted;
    if (!p.cert) continue;
    if (!best.cert || better(p.value, p.cert->partition.block_of, best.value,
                             best.cert->partition.block_of)) {
      best.value = p.value;
      best.cert = std::move(p.cert);
    }
  }
  result.candidates = best.candidates;
  result.accepted = best.accepted;
  if (!best.cert) {
    result.inconsistent = true;
    result.report.attained = false;
    result.report.status = SolveStatus::iteration_limit;
    result.report.value = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  result.report.value = best.value;
  result.report.minimizer = best.cert->induced_x();
  result.report.attained = true;
  result.report.status = SolveStatus::converged;
  result.certificate = std::move(best.cert);
  return result;
}

namespace {

// Unnormalized power-mean surrogate for p < 0 (exact min-sum at p = -inf),
// evaluated at x = exp(t) with t_0 pinned to 0.
double oracle_objective(const Digraph& g, const std::vector<double>& t_free, double p,
                        std::vector<double>& x) {
  x[0] = 1.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(t_free[i - 1]) > 300.0) return std::numeric_limits<double>::infinity();
    x[i] = std::exp(t_free[i - 1]);
  }
  return graphic_p_sum(g, x, PowerOrder{p});
}

struct PatternResult {
  std::vector<double> t;
  double value;
};

PatternResult pattern_search(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> t, std::mt19937_64& rng) {
  const std::size_t dim = t.size();
  double fx = f(t);
  double step = 0.5;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> dirs;
  std::vector<double> trial(dim);
  for (std::size_t iter = 0; iter < 20000 && step > 1e-10; ++iter) {
    dirs.clear();
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<double> e(dim, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
      e[i] = -1.0;
      dirs.push_back(e);
    }
    for (std::size_t r = 0; r < 8 * dim; ++r) {
      std::vector<double> d(dim);
      double norm = 0.0;
      for (double& v : d) {
        v = normal(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      for (double& v : d) v /= norm;
      dirs.push_back(d);
      for (double& v : d) v = -v;
      dirs.push_back(d);
    }
    bool improved = false;
    for (const auto& d : dirs) {
      for (std::size_t i = 0; i < dim; ++i) trial[i] = t[i] + step * d[i];
      const double ft = f(trial);
      if (ft < fx) {
        fx = ft;
        t = trial;
        improved = true;
        break;
      }
    }
    step = improved ? std::min(step * 2.0, 4.0) : step * 0.5;
  }
  return {std::move(t), fx};
}

}  // namespace

double minsum_oracle(const Digraph& g, const OracleOptions& options) {
  const std::size_t n = g.size();
  if (n == 0) throw StructureError("empty graph");
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out(v).empty()) throw StructureError("vertex '" + g.id(v) + "' has no out-neighbors");
  }
  std::vector<double> x(n, 1.0);
  if (n == 1) return min_sum(g, x);
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  double best = std::numeric_limits<double>::infinity();
  for (auto& start : seeded_starts(n - 1, std::max<std::size_t>(options.restarts, 1),
                                   options.seed, 2.0)) {
    std::vector<double> t = std::move(start);
    for (double p : {-8.0, -32.0, -128.0, -512.0, -2048.0,
                     -std::numeric_limits<double>::infinity()}) {
      t = pattern_search([&](const std::vector<double>& s) { return oracle_objective(g, s, p, x); },
                         t, rng)
              .t;
    }
    best = std::min(best, oracle_objective(g, t, -std::numeric_limits<double>::infinity(), x));
  }
  return best;
}

ExtremalValue extremal_minsum_value(std::size_t n) {
  if (n < 3) throw DomainError("extremal min-sum value needs n >= 3");
  ExtremalValue best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double v = (kk + 1.0) * std::exp(std::log(static_cast<double>(n - k)) / (kk + 1.0));
    if (v < best.value) best = {v, k};
  }
  return best;
}

double extremal_lower_bound(std::size_t n) {
  if (n < 1) throw DomainError("n must be positive");
  const double m = static_cast<double>(n) + 1.0;
  return std::exp(1.0) * std::log(m - std::log(m));
}

KsGap ks_gap(double r) {
  if (!(r >= 2.0) || !std::isfinite(r)) throw DomainError("ks_gap needs r >= 2");
  const double hi = r - 1.0;
  auto phi = [r](double x) { return std::log(x) + std::log(r - x) / x; };

  // Log grid bracketing, then golden section on the bracketing cells.
  constexpr std::size_t kGrid = 4000;
  const double lo = std::min(1e-3, hi / 2.0);
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(kGrid - 1));
  std::size_t arg = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> grid(kGrid);
  for (std::size_t i = 0; i < kGrid; ++i) {
    grid[i] = (i + 1 == kGrid) ? hi : lo * std::pow(ratio, static_cast<double>(i));
    const double v = phi(grid[i]);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  double a = grid[arg == 0 ? 0 : arg - 1];
  double b = grid[std::min(arg + 1, kGrid - 1)];
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - golden * (b - a), d = a + golden * (b - a);
  double fc = phi(c), fd = phi(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - golden * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + golden * (b - a);
      fd = phi(d);
    }
  }
  double xmin = (a + b) / 2.0;
  double fmin = phi(xmin);
  if (best < fmin) {
    xmin = grid[arg];
    fmin = best;
  }
  return {fmin - std::log(std::log(r - std::log(r))), xmin, fmin};
}

}  // namespace qcs
