#pragma once

#include <string_view>

#include "qcs/digraph.hpp"

namespace qcs {

enum class GraphFormat { edge_list, json };

struct ParseOptions {
  bool allow_self_loops = false;
};

struct ParsedGraph {
  WeightedDigraph graph;
  bool weighted = false;  // true when any edge carried an explicit weight
};

// Edge list: one "FROM TO [WEIGHT]" per line, whitespace separated, '#'
// starts a comment. JSON: {"vertices":[...], "edges":[{"from","to","weight"}]}.
// Omitted weights default to 1.
ParsedGraph parse_graph(std::string_view text, GraphFormat format, ParseOptions options = {});

// Guesses the format from the first non-blank character.
GraphFormat detect_format(std::string_view text);

}  // namespace qcs
