#include "sylow/sylow_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sylow/arith.hpp"
#include "sylow/errors.hpp"
#include "sylow/subgroup_ops.hpp"

namespace sylow {

bool SylowGraph::has_vertex(std::uint64_t p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

bool SylowGraph::has_arrow(std::uint64_t from, std::uint64_t to) const {
  return std::any_of(arrows.begin(), arrows.end(),
                     [&](const Arrow& a) { return a.from == from && a.to == to; });
}

bool SylowGraph::adjacent(std::uint64_t p, std::uint64_t q) const {
  return has_arrow(p, q) || has_arrow(q, p);
}

BigInt automiser_order(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("automiser_order: " + std::to_string(p) + " is not a prime divisor of |G|");
  const Subgroup sp = sylow_subgroup(g, p);
  const BigInt n = normalizer(g, sp).order();
  const BigInt c = centralizer(g, sp).order();
  const BigInt z = center(sp.group).order();
  const BigInt num = n * z, den = sp.order() * c;
  if (num % den != 0) throw std::logic_error("automiser_order: non-integral quotient");
  return num / den;
}

SylowGraph sylow_graph(const PermGroup& g, std::string label) {
  SylowGraph graph;
  graph.group_label = std::move(label);
  graph.group_order = g.order();
  graph.vertices = prime_divisors(g.order());
  for (std::uint64_t p : graph.vertices) {
    BigInt a;
    try {
      a = automiser_order(g, p);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("prime " + std::to_string(p) + ": " + e.what());
    }
    graph.automiser_orders.emplace(p, a);
    for (std::uint64_t q : graph.vertices)
      if (a % q == 0) graph.arrows.push_back({p, q, a});
  }
  return graph;
}

namespace {

std::size_t vertex_index(const SylowGraph& graph, std::uint64_t p) {
  auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), p);
  if (it == graph.vertices.end() || *it != p)
    throw std::invalid_argument(std::to_string(p) + " is not a vertex");
  return static_cast<std::size_t>(it - graph.vertices.begin());
}

// Unreachable vertices keep distance -1.
std::vector<int> bfs(const SylowGraph& graph, std::size_t source) {
  const std::size_t n = graph.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Arrow& a : graph.arrows) {
    const std::size_t u = vertex_index(graph, a.from), v = vertex_index(graph, a.to);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> dist(n, -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::optional<unsigned> distance(const SylowGraph& graph, std::uint64_t p, std::uint64_t q) {
  const std::size_t u = vertex_index(graph, p), v = vertex_index(graph, q);
  const int d = bfs(graph, u)[v];
  if (d < 0) return std::nullopt;
  return static_cast<unsigned>(d);
}

std::optional<unsigned> diameter(const SylowGraph& graph) {
  unsigned best = 0;
  for (std::size_t u = 0; u < graph.vertices.size(); ++u)
    for (int d : bfs(graph, u)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, static_cast<unsigned>(d));
    }
  return best;
}

bool is_connected(const SylowGraph& graph) { return diameter(graph).has_value(); }

std::optional<RealCentralWitness> real_central_edge_certificate(const PermGroup& g, std::uint64_t p) {
  if (p == 2 || !is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("real_central_edge_certificate: need an odd prime divisor of |G|");
  if (g.order() % 2 != 0) return std::nullopt;
  const Subgroup z = center(sylow_subgroup(g, p).group);
  auto stream = z.group.elements();
  while (auto x = stream.next()) {
    if (x->is_identity()) continue;
    if (auto w = conjugating_element(g, *x, x->inverse())) return RealCentralWitness{*x, *w};
  }
  return std::nullopt;
}

}  // namespace sylow
