#pragma once

#include <string>
#include <string_view>

#include "sylow/sylow_graph.hpp"

namespace sylow {

/// {group, order (decimal string), vertices, arrows: [{from, to, automiser_order}],
///  connected, diameter (int or null)}
std::string to_json(const SylowGraph& graph);

/// Inverse of to_json. Vertices without an outgoing arrow get automiser order 1
/// (every prime of |A_p(G)| divides |G|, so it would carry an arrow).
/// Throws ParseError on malformed input.
SylowGraph graph_from_json(std::string_view text);

/// Directed graph, one node per prime, one edge per arrow labelled with |A_p(G)|.
std::string to_dot(const SylowGraph& graph);

/// Fixed-width text table, one row per prime.
std::string to_table(const SylowGraph& graph);

}  // namespace sylow
