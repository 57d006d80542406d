#include "qcs/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <Eigen/Dense>

#include "qcs/error.hpp"
#include "qcs/smooth_min.hpp"

namespace qcs {

namespace {

struct LocalEdge {
  std::size_t from;
  std::size_t to;
  double weight;
};

struct SubsetResult {
  double value = 0.0;
  std::vector<double> t;  // local log-coordinates
  std::size_t iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
};

double eval_local(std::span<const LocalEdge> edges, const Eigen::VectorXd& t) {
  double f = 0.0;
  for (const auto& e : edges) f += e.weight * std::exp(t[e.from] - t[e.to]);
  return f;
}

double grad_norm_local(std::span<const LocalEdge> edges, std::size_t m, std::size_t fixed,
                       const Eigen::VectorXd& t) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
  for (const auto& e : edges) {
    if (e.from == e.to) continue;
    const double term = e.weight * std::exp(t[e.from] - t[e.to]);
    g[e.from] += term;
    g[e.to] -= term;
  }
  g[fixed] = 0.0;
  return g.cwiseAbs().maxCoeff();
}

// Damped Newton on the edges internal to one strong component, with local
// coordinate `fixed` held at its starting value.
SubsetResult newton(std::span<const LocalEdge> edges, std::size_t m, std::size_t fixed,
                    Eigen::VectorXd t, const GpOptions& opts) {
  SubsetResult r;
  Eigen::VectorXd g(m);
  Eigen::MatrixXd h(m, m);
  double f = eval_local(edges, t);
  for (std::size_t it = 0;; ++it) {
    g.setZero();
    h.setZero();
    for (const auto& e : edges) {
      if (e.from == e.to) continue;
      const double term = e.weight * std::exp(t[e.from] - t[e.to]);
      g[e.from] += term;
      g[e.to] -= term;
      h(e.from, e.from) += term;
      h(e.to, e.to) += term;
      h(e.from, e.to) -= term;
      h(e.to, e.from) -= term;
    }
    g[fixed] = 0.0;
    r.gradient_norm = g.cwiseAbs().maxCoeff();
    r.iterations = it;
    if (r.gradient_norm <= opts.tolerance * std::max(1.0, std::abs(f))) {
      r.converged = true;
      break;
    }
    if (it >= opts.max_iterations) break;

    h.row(fixed).setZero();
    h.col(fixed).setZero();
    h(fixed, fixed) = 1.0;
    Eigen::VectorXd d = h.ldlt().solve(-g);
    if (!d.allFinite() || d.dot(g) >= 0.0) d = -g;
    d[fixed] = 0.0;
    if (const double big = d.cwiseAbs().maxCoeff(); big > 10.0) d *= 10.0 / big;

    const double slope = d.dot(g);
    double step = 1.0;
    double f_new = eval_local(edges, t + step * d);
    // Near the minimum f is flat to rounding; accept a full step that shrinks the gradient.
    const double flat = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, f);
    if (f_new <= f + flat && grad_norm_local(edges, m, fixed, t + d) < r.gradient_norm) {
      t += d;
      f = f_new;
      continue;
    }
    while (!(f_new <= f + 1e-4 * step * slope) && step > 1e-16) {
      step *= 0.5;
      f_new = eval_local(edges, t + step * d);
    }
    if (step <= 1e-16) break;  // no further decrease representable
    t += step * d;
    f = f_new;
  }
  r.value = f;
  r.t.assign(t.data(), t.data() + m);
  return r;
}

void validate(const QuotientSumSpec& spec) {
  if (spec.pin) {
    if (spec.pin->vertex >= spec.graph.size()) throw ValidationError("pinned vertex out of range");
    if (!(spec.pin->value > 0.0)) throw ValidationError("pinned value must be positive");
  }
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::recession_detected: return "recession-detected";
    case SolveStatus::iteration_limit: return "iteration-limit";
  }
  return "unknown";
}

QuotientSumSpec build_quotient_sum(WeightedDigraph g, std::optional<Pin> pin) {
  QuotientSumSpec spec{std::move(g), pin};
  validate(spec);
  return spec;
}

double evaluate(const QuotientSumSpec& spec, std::span<const double> y) {
  if (y.size() != spec.graph.size()) throw ValidationError("vector length does not match graph");
  for (double v : y) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("y must be positive");
  }
  const auto& edges = spec.graph.base().edges();
  double f = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    f += spec.graph.weight(e) * y[edges[e].from] / y[edges[e].to];
  }
  return f;
}

double log_objective(const QuotientSumSpec& spec, std::span<const double> t) {
  if (t.size() != spec.graph.size()) throw ValidationError("vector length does not match graph");
  const auto& edges = spec.graph.base().edges();
  double f = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    f += spec.graph.weight(e) * std::exp(t[edges[e].from] - t[edges[e].to]);
  }
  return f;
}

std::vector<double> log_gradient(const QuotientSumSpec& spec, std::span<const double> t) {
  if (t.size() != spec.graph.size()) throw ValidationError("vector length does not match graph");
  std::vector<double> g(t.size(), 0.0);
  const auto& edges = spec.graph.base().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double term = spec.graph.weight(e) * std::exp(t[edges[e].from] - t[edges[e].to]);
    g[edges[e].from] += term;
    g[edges[e].to] -= term;
  }
  return g;
}

Attainment attainment_check(const QuotientSumSpec& spec) {
  validate(spec);
  const SccDecomposition d = scc(spec.graph.base());
  Attainment a;
  a.attained = d.components.size() == 1;
  if (!a.attained) {
    a.direction.resize(spec.graph.size());
    for (std::size_t v = 0; v < a.direction.size(); ++v) {
      a.direction[v] = static_cast<double>(d.component_of[v]);
    }
    if (spec.pin) {
      const double shift = a.direction[spec.pin->vertex];
      for (double& x : a.direction) x -= shift;
    }
  }
  return a;
}

OptReport minimize(const QuotientSumSpec& spec, const GpOptions& options) {
  validate(spec);
  const std::size_t n = spec.graph.size();
  if (!options.initial_log.empty() && options.initial_log.size() != n) {
    throw ValidationError("initial point has the wrong dimension");
  }
  OptReport report;
  if (n == 0) {
    report.attained = true;
    return report;
  }
  const SccDecomposition d = scc(spec.graph.base());
  const auto& edges = spec.graph.base().edges();

  std::vector<std::vector<LocalEdge>> local_edges(d.components.size());
  std::vector<std::size_t> local_index(n);
  for (const auto& comp : d.components) {
    for (std::size_t i = 0; i < comp.size(); ++i) local_index[comp[i]] = i;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t c = d.component_of[edges[e].from];
    if (c != d.component_of[edges[e].to]) continue;
    local_edges[c].push_back(
        {local_index[edges[e].from], local_index[edges[e].to], spec.graph.weight(e)});
  }

  report.minimizer.assign(n, 1.0);
  bool all_converged = true;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    std::size_t fixed = 0;
    if (spec.pin && d.component_of[spec.pin->vertex] == c) fixed = local_index[spec.pin->vertex];
    Eigen::VectorXd t0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(comp.size()));
    if (!options.initial_log.empty()) {
      for (std::size_t i = 0; i < comp.size(); ++i) t0[i] = options.initial_log[comp[i]];
    }
    const SubsetResult r = newton(local_edges[c], comp.size(), fixed, t0, options);
    report.value += r.value;
    report.iterations += r.iterations;
    report.gradient_norm = std::max(report.gradient_norm, r.gradient_norm);
    all_converged = all_converged && r.converged;
    const double anchor = r.t[fixed];
    const double scale = (spec.pin && d.component_of[spec.pin->vertex] == c) ? spec.pin->value : 1.0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      report.minimizer[comp[i]] = scale * std::exp(r.t[i] - anchor);
    }
  }

  if (d.components.size() == 1) {
    report.attained = all_converged;
    report.status = all_converged ? SolveStatus::converged : SolveStatus::iteration_limit;
    if (!spec.pin) {
      const double first = report.minimizer[0];
      for (double& y : report.minimizer) y /= first;
    }
  } else {
    report.attained = false;
    report.status = all_converged ? SolveStatus::recession_detected : SolveStatus::iteration_limit;
    report.recession_direction = attainment_check(spec).direction;
  }
  return report;
}

UniquenessReport verify_uniqueness(const QuotientSumSpec& spec, std::size_t trials,
                                   std::uint64_t seed, double tolerance) {
  if (!attainment_check(spec).attained) {
    throw PreconditionError("uniqueness check needs a strongly connected support graph");
  }
  UniquenessReport out{true, 0.0};
  std::vector<double> reference;
  for (auto& start : seeded_starts(spec.graph.size(), trials, seed)) {
    GpOptions opts;
    opts.initial_log = std::move(start);
    const OptReport r = minimize(spec, opts);
    if (r.status != SolveStatus::converged) throw Error("minimizer did not converge");
    if (reference.empty()) {
      reference = r.minimizer;
      continue;
    }
    for (std::size_t v = 0; v < reference.size(); ++v) {
      const double diff =
          std::abs(r.minimizer[v] - reference[v]) / std::max(1.0, std::abs(reference[v]));
      out.max_discrepancy = std::max(out.max_discrepancy, diff);
    }
  }
  out.unique = out.max_discrepancy <= tolerance;
  return out;
}

bool verify_symmetry(const QuotientSumSpec& spec, std::span<const std::size_t> perm,
                     double tolerance) {
  if (!check_automorphism(spec.graph, perm)) {
    throw PreconditionError("permutation is not an automorphism of the weighted graph");
  }
  const OptReport r = minimize(spec);
  if (!r.attained) throw PreconditionError("minimum is not attained");
  for (std::size_t v = 0; v < perm.size(); ++v) {
    const double a = r.minimizer[v];
    const double b = r.minimizer[perm[v]];
    if (std::abs(a - b) > tolerance * std::max(1.0, std::abs(a))) return false;
  }
  return true;
}

std::vector<CycleConstraint> cycle_constraints(const QuotientSumSpec& spec) {
  const Digraph& g = spec.graph.base();
  const std::size_t n = g.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Undirected incidence: (neighbor, edge id).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    if (ed.from == ed.to) continue;
    adj[ed.from].push_back({ed.to, e});
    adj[ed.to].push_back({ed.from, e});
  }

  std::vector<std::size_t> parent(n, kNone), parent_edge(n, kNone), depth(n, 0);
  std::vector<bool> seen(n, false), tree_edge(g.edge_count(), false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        tree_edge[e] = true;
        q.push(w);
      }
    }
  }

  // Sign of traversing tree edge parent_edge[child] from `child` to its parent.
  auto upward_sign = [&](std::size_t child) {
    return g.edges()[parent_edge[child]].from == child ? +1 : -1;
  };

  std::vector<CycleConstraint> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    const Edge& ed = g.edges()[e];
    CycleConstraint c;
    c.edges.push_back(e);
    c.signs.push_back(+1);
    if (ed.from != ed.to) {
      // Walk from `to` back to `from` through the tree: up from `to` to the
      // common ancestor, then down to `from`.
      std::size_t a = ed.to, b = ed.from;
      std::vector<std::pair<std::size_t, int>> down;
      while (a != b) {
        if (depth[a] >= depth[b]) {
          c.edges.push_back(parent_edge[a]);
          c.signs.push_back(upward_sign(a));
          a = parent[a];
        } else {
          down.push_back({parent_edge[b], -upward_sign(b)});
          b = parent[b];
        }
      }
      for (auto it = down.rbegin(); it != down.rend(); ++it) {
        c.edges.push_back(it->first);
        c.signs.push_back(it->second);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

double constraint_residual(const QuotientSumSpec& spec, const CycleConstraint& c,
                           std::span<const double> y) {
  if (y.size() != spec.graph.size()) throw ValidationError("vector length does not match graph");
  double s = 0.0;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& ed = spec.graph.base().edges().at(c.edges[i]);
    s += c.signs[i] * (std::log(y[ed.from]) - std::log(y[ed.to]));
  }
  return std::abs(s);
}

}  // namespace qcs
