#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ddsg/graph.hpp"

namespace ddsg {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_node_id(const std::string& tok, const std::string& file,
                         int lineno) {
  size_t pos = 0;
  long v = -1;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || v < 0)
    throw InputError(file + ":" + std::to_string(lineno) +
                     ": expected a non-negative node id, got '" + tok + "'");
  return static_cast<int>(v);
}

}  // namespace detail

// Graph file: lines "u v" with 0-based ids, '#' starts a comment.
// Returns the raw edge list; node count comes from the color file.
inline std::vector<std::pair<int, int>> read_edge_list(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": expected 'u v', got '" + line + "'");
    edges.push_back({detail::parse_node_id(toks[0], path, lineno),
                     detail::parse_node_id(toks[1], path, lineno)});
  }
  return edges;
}

// Color file: lines "node_id color_label", one line per node. Node count is
// the number of lines; ids must cover 0..n-1 exactly once.
inline std::vector<std::string> read_color_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open color file '" + path + "'");
  std::vector<std::pair<int, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": expected 'node_id color_label', got '" + line + "'");
    entries.push_back(
        {detail::parse_node_id(toks[0], path, lineno), toks[1]});
  }
  std::vector<std::string> colors(entries.size());
  std::vector<char> seen(entries.size(), 0);
  for (const auto& [v, label] : entries) {
    if (v >= static_cast<int>(entries.size()) || seen[v])
      throw InputError(path + ": node ids must cover 0.." +
                       std::to_string(entries.size() - 1) +
                       " exactly once (offending id " + std::to_string(v) +
                       ")");
    seen[v] = 1;
    colors[v] = label;
  }
  return colors;
}

// Combined TSV variant: "u<TAB>v" edge lines plus "@color node label"
// directives in one file.
inline ColoredGraph read_combined(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, std::string>> colors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "@color") {
      if (toks.size() != 3)
        throw InputError(path + ":" + std::to_string(lineno) +
                         ": expected '@color node label'");
      colors.push_back(
          {detail::parse_node_id(toks[1], path, lineno), toks[2]});
    } else {
      if (toks.size() != 2)
        throw InputError(path + ":" + std::to_string(lineno) +
                         ": expected 'u\\tv' or '@color node label'");
      edges.push_back({detail::parse_node_id(toks[0], path, lineno),
                       detail::parse_node_id(toks[1], path, lineno)});
    }
  }
  std::vector<std::string> labels(colors.size());
  std::vector<char> seen(colors.size(), 0);
  for (const auto& [v, label] : colors) {
    if (v >= static_cast<int>(colors.size()) || seen[v])
      throw InputError(path + ": @color ids must cover 0.." +
                       std::to_string(colors.size() - 1) +
                       " exactly once (offending id " + std::to_string(v) +
                       ")");
    seen[v] = 1;
    labels[v] = label;
  }
  return build_graph(static_cast<int>(labels.size()), std::move(edges),
                     labels);
}

inline bool looks_combined(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("@color", 0) == 0) return true;
  return false;
}

// Loads a graph from either a (graph, colors) file pair or a single
// combined file; the combined layout is auto-detected.
inline ColoredGraph read_instance(const std::string& graph_path,
                                  const std::optional<std::string>& colors_path) {
  if (!colors_path) {
    if (!looks_combined(graph_path))
      throw InputError("'" + graph_path +
                       "' has no @color directives; pass a color file");
    return read_combined(graph_path);
  }
  auto colors = read_color_list(*colors_path);
  auto edges = read_edge_list(graph_path);
  return build_graph(static_cast<int>(colors.size()), std::move(edges),
                     colors);
}

inline void write_instance(const ColoredGraph& g, const std::string& graph_path,
                           const std::string& colors_path) {
  std::ofstream ge(graph_path);
  if (!ge) throw InputError("cannot write graph file '" + graph_path + "'");
  ge << "# n " << g.n() << " m " << g.m() << "\n";
  for (const auto& [u, v] : g.edges) ge << u << " " << v << "\n";
  std::ofstream ce(colors_path);
  if (!ce) throw InputError("cannot write color file '" + colors_path + "'");
  for (int v = 0; v < g.n(); ++v)
    ce << v << " " << g.color_labels[g.color_of[v]] << "\n";
}

}  // namespace ddsg
