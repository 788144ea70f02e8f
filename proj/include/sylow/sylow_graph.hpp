#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm_group.hpp"

namespace sylow {

struct Arrow {
  std::uint64_t from;
  std::uint64_t to;
  BigInt automiser_order;  // |A_from(G)|, which `to` divides

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Vertices pi(G) and arrows p -> q for q dividing |N_G(P) : P C_G(P)|.
/// Vertices and arrows are sorted; the metric view ignores arrow direction.
struct SylowGraph {
  std::string group_label;
  BigInt group_order;
  std::vector<std::uint64_t> vertices;
  std::vector<Arrow> arrows;
  std::map<std::uint64_t, BigInt> automiser_orders;

  bool has_vertex(std::uint64_t p) const;
  bool has_arrow(std::uint64_t from, std::uint64_t to) const;
  /// p and q joined by an arrow in either direction.
  bool adjacent(std::uint64_t p, std::uint64_t q) const;

  friend bool operator==(const SylowGraph&, const SylowGraph&) = default;
};

/// |N_G(P)| |Z(P)| / (|P| |C_G(P)|) for P a Sylow p-subgroup.
/// Throws std::invalid_argument unless p is a prime dividing |G|.
BigInt automiser_order(const PermGroup& g, std::uint64_t p);

/// Budget errors are rethrown with the offending prime in the message.
SylowGraph sylow_graph(const PermGroup& g, std::string label = {});

/// Length of a shortest undirected path; 0 for p == q; nullopt if none.
/// Throws std::invalid_argument if p or q is not a vertex.
std::optional<unsigned> distance(const SylowGraph& graph, std::uint64_t p, std::uint64_t q);

/// Largest distance between vertices; nullopt when disconnected.
/// Graphs with at most one vertex have diameter 0.
std::optional<unsigned> diameter(const SylowGraph& graph);
bool is_connected(const SylowGraph& graph);

struct RealCentralWitness {
  Permutation z;  // 1 != z in Z(P)
  Permutation g;  // z^g = z^-1
};

/// A nontrivial real element of Z(P), P a Sylow p-subgroup, with its
/// inverting element. Such a witness forces p -> 2 when z has odd order.
/// nullopt when 2 does not divide |G| or no central element is real.
/// Throws std::invalid_argument for p = 2 or p not dividing |G|.
std::optional<RealCentralWitness> real_central_edge_certificate(const PermGroup& g, std::uint64_t p);

}  // namespace sylow
