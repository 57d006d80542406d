#include "qcs/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcs/error.hpp"

namespace qcs {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

double parse_weight(std::string_view field, std::size_t line) {
  double w = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "malformed weight '" + std::string(field) + "'");
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ValidationError("line " + std::to_string(line) + ": weight must be positive, got " +
                          std::string(field));
  }
  return w;
}

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  ParsedGraph result{WeightedDigraph(Digraph(options.allow_self_loops)), false};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 'FROM TO [WEIGHT]', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    double w = 1.0;
    if (fields.size() == 3) {
      w = parse_weight(fields[2], line_no);
      result.weighted = true;
    }
    try {
      result.graph.add_edge(fields[0], fields[1], w);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  return result;
}

std::string vertex_key(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw ParseError(1, "vertex ids must be strings or integers");
}

ParsedGraph parse_json(std::string_view text, const ParseOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to a line number.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset; ++i) line += text[i] == '\n';
    throw ParseError(line, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(1, "expected an object with an \"edges\" array");
  }
  ParsedGraph result{WeightedDigraph(Digraph(options.allow_self_loops)), false};
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw ParseError(1, "\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) result.graph.add_vertex(vertex_key(v));
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to")) {
      throw ParseError(1, "every edge needs \"from\" and \"to\"");
    }
    double w = 1.0;
    if (e.contains("weight")) {
      if (!e["weight"].is_number()) throw ParseError(1, "edge weight must be a number");
      w = e["weight"].get<double>();
      if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("edge weights must be positive");
      result.weighted = true;
    }
    result.graph.add_edge(vertex_key(e["from"]), vertex_key(e["to"]), w);
  }
  return result;
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? GraphFormat::json : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format, ParseOptions options) {
  return format == GraphFormat::json ? parse_json(text, options)
                                     : parse_edge_list(text, options);
}

}  // namespace qcs
