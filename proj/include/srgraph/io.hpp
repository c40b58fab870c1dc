#pragma once

#include <string>
#include <string_view>

#include "srgraph/graph.hpp"

namespace srgraph {

constexpr std::size_t kGraph6OrderCap = 62;

/// Short-form graph6 (order <= 62). Surrounding whitespace is ignored; a
/// ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge-list text: optional "n <count>" header, optional "labels l0 l1 ..."
/// line, then one "u v" pair per line. '#' starts a comment. Endpoints are
/// indices unless the graph is labeled; unlabeled files with non-numeric
/// tokens take labels in order of first appearance.
Graph parse_edge_list(std::string_view text);
/// Deterministic: header, labels (if any), edges sorted by (min,max) index.
std::string emit_edge_list(const Graph& g);

/// Edge list when the text contains whitespace between tokens or a header,
/// graph6 otherwise.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace srgraph
