#include "qcs/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "qcs/error.hpp"

namespace qcs {

std::size_t Digraph::add_vertex(std::string_view id) {
  std::string key(id);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const std::size_t v = ids_.size();
  index_.emplace(key, v);
  ids_.push_back(std::move(key));
  out_.emplace_back();
  out_edges_.emplace_back();
  return v;
}

std::size_t Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw ValidationError("edge endpoint out of range");
  if (from == to && !allow_self_loops_) {
    throw ValidationError("self-loop at vertex '" + ids_[from] + "' is not allowed");
  }
  if (has_edge(from, to)) {
    throw ValidationError("duplicate edge '" + ids_[from] + "' -> '" + ids_[to] + "'");
  }
  const std::size_t e = edges_.size();
  edges_.push_back({from, to});
  out_[from].push_back(to);
  out_edges_[from].push_back(e);
  return e;
}

std::size_t Digraph::add_edge(std::string_view from, std::string_view to) {
  const std::size_t u = add_vertex(from);
  const std::size_t v = add_vertex(to);
  return add_edge(u, v);
}

std::optional<std::size_t> Digraph::index_of(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Digraph::find_edge(std::size_t from, std::size_t to) const {
  if (from >= size()) return std::nullopt;
  const auto& nb = out_[from];
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (nb[i] == to) return out_edges_[from][i];
  }
  return std::nullopt;
}

Digraph Digraph::induced(std::span<const std::size_t> vertices) const {
  Digraph sub(allow_self_loops_);
  std::vector<std::size_t> local(size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t v : vertices) local.at(v) = sub.add_vertex(ids_[v]);
  for (std::size_t v : vertices) {
    for (std::size_t w : out_[v]) {
      if (local[w] != std::numeric_limits<std::size_t>::max()) sub.add_edge(local[v], local[w]);
    }
  }
  return sub;
}

WeightedDigraph::WeightedDigraph(Digraph base)
    : base_(std::move(base)), weights_(base_.edge_count(), 1.0) {}

WeightedDigraph::WeightedDigraph(Digraph base, std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.edge_count()) {
    throw ValidationError("weight count does not match edge count");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("edge weights must be positive");
  }
}

std::size_t WeightedDigraph::add_edge(std::size_t from, std::size_t to, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ValidationError("edge weights must be positive");
  }
  const std::size_t e = base_.add_edge(from, to);
  weights_.push_back(weight);
  return e;
}

std::size_t WeightedDigraph::add_edge(std::string_view from, std::string_view to,
                                      double weight) {
  const std::size_t u = base_.add_vertex(from);
  const std::size_t v = base_.add_vertex(to);
  return add_edge(u, v, weight);
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> reverse_adjacency(const Digraph& g) {
  std::vector<std::vector<std::size_t>> in(g.size());
  for (const Edge& e : g.edges()) in[e.to].push_back(e.from);
  return in;
}

}  // namespace

SccDecomposition scc(const Digraph& g) {
  // Iterative Tarjan. Components come out in reverse topological order.
  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> found;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto nb = g.out(f.v);
      if (f.next < nb.size()) {
        const std::size_t w = nb[f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> c;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          c.push_back(w);
        } while (w != v);
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
      }
    }
  }

  SccDecomposition d;
  d.components.assign(found.rbegin(), found.rend());
  d.component_of.assign(n, 0);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    for (std::size_t v : d.components[c]) d.component_of[v] = c;
  }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    d.condensation.add_vertex(std::to_string(c));
  }
  for (const Edge& e : g.edges()) {
    const std::size_t a = d.component_of[e.from];
    const std::size_t b = d.component_of[e.to];
    if (a != b && !d.condensation.has_edge(a, b)) d.condensation.add_edge(a, b);
  }
  d.final.resize(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    d.final[c] = d.condensation.out_degree(c) == 0;
  }
  return d;
}

std::vector<std::vector<std::size_t>> final_strong_components(const Digraph& g) {
  SccDecomposition d = scc(g);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (d.final[c]) out.push_back(std::move(d.components[c]));
  }
  return out;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.size() == 0) return false;
  return scc(g).components.size() == 1;
}

std::optional<std::size_t> girth(const Digraph& g) {
  const std::size_t n = g.size();
  const auto in = reverse_adjacency(g);
  std::size_t best = kUnset;
  std::vector<std::size_t> dist(n);
  std::queue<std::size_t> q;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      if (dist[v] + 1 >= best) continue;
      for (std::size_t w : g.out(v)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (std::size_t u : in[s]) {
      if (dist[u] != kUnset) best = std::min(best, dist[u] + 1);
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

std::optional<std::vector<std::size_t>> shortest_cycle(const Digraph& g) {
  const auto len = girth(g);
  if (!len) return std::nullopt;
  const std::size_t n = g.size();
  const std::size_t target = *len;
  const auto in = reverse_adjacency(g);
  std::vector<std::size_t> to_s(n);
  std::queue<std::size_t> q;
  for (std::size_t s = 0; s < n; ++s) {
    // Distances to s inside the subgraph on vertices >= s.
    std::fill(to_s.begin(), to_s.end(), kUnset);
    to_s[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t u : in[v]) {
        if (u > s && to_s[u] == kUnset) {
          to_s[u] = to_s[v] + 1;
          q.push(u);
        }
      }
    }
    if (target == 1) {
      if (g.has_edge(s, s)) return std::vector<std::size_t>{s};
      continue;
    }
    std::size_t through = kUnset;
    for (std::size_t w : g.out(s)) {
      if (w > s && to_s[w] != kUnset) through = std::min(through, to_s[w] + 1);
    }
    if (through != target) continue;
    std::vector<std::size_t> cycle{s};
    std::size_t cur = s;
    for (std::size_t step = 1; step < target; ++step) {
      std::size_t pick = kUnset;
      for (std::size_t w : g.out(cur)) {
        if (w > s && to_s[w] == target - step) pick = std::min(pick, w);
      }
      cycle.push_back(pick);
      cur = pick;
    }
    return cycle;
  }
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> distances_to(const Digraph& g,
                                                     std::span<const std::size_t> targets) {
  const auto in = reverse_adjacency(g);
  std::vector<std::optional<std::size_t>> dist(g.size());
  std::queue<std::size_t> q;
  for (std::size_t t : targets) {
    if (!dist.at(t)) {
      dist[t] = 0;
      q.push(t);
    }
  }
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t u : in[v]) {
      if (!dist[u]) {
        dist[u] = *dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

bool check_automorphism(const WeightedDigraph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) throw ValidationError("permutation size does not match vertex count");
  std::vector<bool> hit(n, false);
  for (std::size_t image : perm) {
    if (image >= n || hit[image]) throw ValidationError("map is not a bijection on the vertices");
    hit[image] = true;
  }
  const Digraph& base = g.base();
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const Edge& edge = base.edges()[e];
    const auto mapped = base.find_edge(perm[edge.from], perm[edge.to]);
    if (!mapped || g.weight(*mapped) != g.weight(e)) return false;
  }
  // Edge counts match, so an injective edge map is onto.
  return true;
}

}  // namespace qcs
