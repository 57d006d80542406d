#pragma once

#include <cstddef>
#include <vector>

#include "qcs/digraph.hpp"

namespace qcs {

enum class MaxSumAttainment { attained, unknown };

struct MaxSumInfimum {
  std::size_t value = 0;  // sum of girths of the final strong components
  std::vector<std::vector<std::size_t>> final_components;
  std::vector<std::size_t> girths;  // one per final component
  // attained only for disjoint unions of directed cycles, where x = 1 gives
  // the infimum; otherwise the question is left open.
  MaxSumAttainment attainment = MaxSumAttainment::unknown;
};

// Infimum of the graphic max-sum. Throws StructureError on a vertex without
// out-neighbors.
MaxSumInfimum maxsum_infimum(const Digraph& g);

// Positive x with S_max(x|g) <= maxsum_infimum(g) + epsilon. A shortest cycle
// (lexicographically smallest) is chosen in each final strong component and
// set to 1; every other vertex gets delta^d with d its distance to the chosen
// cycles and delta = min(epsilon / (2|V|), 1/2).
std::vector<double> maxsum_witness(const Digraph& g, double epsilon);

// ceil(n / k): the girth bound for strongly connected digraphs with minimum
// out-degree k, valid only if the Caccetta-Haggkvist conjecture holds.
struct GameBound {
  std::size_t value = 0;
  bool conditional = true;
};
GameBound game_bound(std::size_t people, std::size_t outdegree);

}  // namespace qcs
