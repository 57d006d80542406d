#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qcs {

struct Edge {
  std::size_t from;
  std::size_t to;
};

// Directed graph with opaque string vertex ids. Vertices get dense indices in
// first-appearance order; the order is stable and every algorithm in the
// library reports results in terms of these indices.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(bool allow_self_loops) : allow_self_loops_(allow_self_loops) {}

  // Returns the index of `id`, inserting it if absent.
  std::size_t add_vertex(std::string_view id);

  // Throws ValidationError on duplicate edges, on self-loops when they are not
  // allowed, and on out-of-range indices. Returns the edge index.
  std::size_t add_edge(std::size_t from, std::size_t to);
  std::size_t add_edge(std::string_view from, std::string_view to);

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool allows_self_loops() const noexcept { return allow_self_loops_; }

  const std::string& id(std::size_t v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const std::size_t> out(std::size_t v) const { return out_.at(v); }
  std::span<const std::size_t> out_edges(std::size_t v) const { return out_edges_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }

  std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;
  bool has_edge(std::size_t from, std::size_t to) const { return find_edge(from, to).has_value(); }

  // Subgraph induced by `vertices` (kept in the given order), ids preserved.
  Digraph induced(std::span<const std::size_t> vertices) const;

 private:
  bool allow_self_loops_ = false;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

// Digraph with a strictly positive weight on every edge.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(Digraph base);  // unit weights
  WeightedDigraph(Digraph base, std::vector<double> weights);

  std::size_t add_vertex(std::string_view id) { return base_.add_vertex(id); }
  std::size_t add_edge(std::size_t from, std::size_t to, double weight);
  std::size_t add_edge(std::string_view from, std::string_view to, double weight);

  const Digraph& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  std::size_t edge_count() const noexcept { return base_.edge_count(); }
  double weight(std::size_t edge) const { return weights_.at(edge); }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  Digraph base_;
  std::vector<double> weights_;
};

// Strongly connected components listed in a topological order of the
// condensation: every condensation edge goes from a lower to a higher index.
struct SccDecomposition {
  std::vector<std::vector<std::size_t>> components;  // each sorted ascending
  std::vector<std::size_t> component_of;             // vertex -> component
  Digraph condensation;                              // vertex i = component i
  std::vector<bool> final;                           // no outgoing condensation edge
};

SccDecomposition scc(const Digraph& g);
std::vector<std::vector<std::size_t>> final_strong_components(const Digraph& g);
bool is_strongly_connected(const Digraph& g);

// Length of the shortest directed cycle; nullopt when the graph is acyclic.
// One BFS per vertex. A self-loop is a cycle of length 1.
std::optional<std::size_t> girth(const Digraph& g);

// A shortest directed cycle as a vertex sequence starting at its smallest
// index; among all shortest cycles the lexicographically smallest sequence.
std::optional<std::vector<std::size_t>> shortest_cycle(const Digraph& g);

// BFS distances (edge counts) from every vertex to the nearest target,
// following edges forward. Unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> distances_to(const Digraph& g,
                                                     std::span<const std::size_t> targets);

// perm[v] is the image of vertex v. Throws ValidationError if perm is not a
// bijection on the vertex indices.
bool check_automorphism(const WeightedDigraph& g, std::span<const std::size_t> perm);

}  // namespace qcs
