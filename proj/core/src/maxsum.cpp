#include "qcs/maxsum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcs/error.hpp"

namespace qcs {

namespace {

void require_out_neighbors(const Digraph& g) {
  if (g.size() == 0) throw StructureError("empty graph");
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.out(v).empty()) throw StructureError("vertex '" + g.id(v) + "' has no out-neighbors");
  }
}

bool disjoint_cycles(const Digraph& g) {
  std::vector<std::size_t> indeg(g.size(), 0);
  for (const Edge& e : g.edges()) ++indeg[e.to];
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.out_degree(v) != 1 || indeg[v] != 1) return false;
  }
  return true;
}

}  // namespace

MaxSumInfimum maxsum_infimum(const Digraph& g) {
  require_out_neighbors(g);
  MaxSumInfimum out;
  out.final_components = final_strong_components(g);
  for (const auto& comp : out.final_components) {
    const auto len = girth(g.induced(comp));
    if (!len) {
      throw StructureError("final strong component without a cycle at vertex '" +
                           g.id(comp.front()) + "'");
    }
    out.girths.push_back(*len);
    out.value += *len;
  }
  out.attainment = disjoint_cycles(g) ? MaxSumAttainment::attained : MaxSumAttainment::unknown;
  return out;
}

std::vector<double> maxsum_witness(const Digraph& g, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  require_out_neighbors(g);
  std::vector<std::size_t> on_cycle;
  for (const auto& comp : final_strong_components(g)) {
    const auto cycle = shortest_cycle(g.induced(comp));
    if (!cycle) throw StructureError("final strong component without a cycle");
    for (std::size_t local : *cycle) on_cycle.push_back(comp[local]);
  }
  const double delta = std::min(epsilon / (2.0 * static_cast<double>(g.size())), 0.5);
  const auto dist = distances_to(g, on_cycle);
  std::vector<double> x(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    // Every vertex reaches a final component, hence a chosen cycle.
    x[v] = std::pow(delta, static_cast<double>(dist[v].value()));
  }
  return x;
}

GameBound game_bound(std::size_t people, std::size_t outdegree) {
  if (outdegree < 1 || outdegree >= people) throw DomainError("need 1 <= k < n");
  return {(people + outdegree - 1) / outdegree, true};
}

}  // namespace qcs
