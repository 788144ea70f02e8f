#include "sylow/graph_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sylow/errors.hpp"

namespace sylow {

using nlohmann::json;

std::string to_json(const SylowGraph& graph) {
  json j;
  j["group"] = graph.group_label;
  j["order"] = graph.group_order.str();
  j["vertices"] = graph.vertices;
  j["arrows"] = json::array();
  for (const Arrow& a : graph.arrows)
    j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"automiser_order", a.automiser_order.str()}});
  const auto d = diameter(graph);
  j["connected"] = d.has_value();
  j["diameter"] = d ? json(*d) : json(nullptr);
  return j.dump(2);
}

SylowGraph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    SylowGraph g;
    g.group_label = j.at("group").get<std::string>();
    g.group_order = BigInt(j.at("order").get<std::string>());
    g.vertices = j.at("vertices").get<std::vector<std::uint64_t>>();
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::uint64_t p : g.vertices) g.automiser_orders[p] = 1;
    for (const auto& a : j.at("arrows")) {
      Arrow arrow{a.at("from").get<std::uint64_t>(), a.at("to").get<std::uint64_t>(),
                  BigInt(a.at("automiser_order").get<std::string>())};
      if (!g.has_vertex(arrow.from) || !g.has_vertex(arrow.to))
        throw ParseError("arrow " + std::to_string(arrow.from) + "->" + std::to_string(arrow.to) +
                             " joins a non-vertex", 0);
      g.automiser_orders[arrow.from] = arrow.automiser_order;
      g.arrows.push_back(std::move(arrow));
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected JSON layout: ") + e.what(), 0);
  } catch (const std::runtime_error& e) {  // bad decimal string
    throw ParseError(std::string("bad number: ") + e.what(), 0);
  }
}

std::string to_dot(const SylowGraph& graph) {
  std::ostringstream out;
  out << "digraph " << std::quoted(graph.group_label) << " {\n";
  for (std::uint64_t p : graph.vertices) out << "  " << p << ";\n";
  for (const Arrow& a : graph.arrows)
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.automiser_order << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_table(const SylowGraph& graph) {
  std::ostringstream out;
  out << "group " << graph.group_label << "  order " << graph.group_order << "\n";
  out << std::left << std::setw(8) << "p" << std::setw(16) << "|A_p(G)|" << "arrows\n";
  for (std::uint64_t p : graph.vertices) {
    std::string targets;
    for (const Arrow& a : graph.arrows)
      if (a.from == p) targets += (targets.empty() ? "" : " ") + std::to_string(p) + "->" + std::to_string(a.to);
    auto it = graph.automiser_orders.find(p);
    out << std::setw(8) << p << std::setw(16) << (it == graph.automiser_orders.end() ? "?" : it->second.str())
        << (targets.empty() ? "-" : targets) << "\n";
  }
  const auto d = diameter(graph);
  out << "connected " << (d ? "yes" : "no") << "  diameter " << (d ? std::to_string(*d) : "inf") << "\n";
  return out.str();
}

}  // namespace sylow
