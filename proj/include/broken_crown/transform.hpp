#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "broken_crown/errors.hpp"
#include "broken_crown/graph.hpp"
#include "broken_crown/hc_enum.hpp"

namespace broken_crown {

// Vertex j of the directed graph becomes the path in(j) - mid(j) - out(j)
// with ids 3j-2, 3j-1, 3j.
class KarpMapping {
 public:
  explicit KarpMapping(int original_order) : original_order_(original_order) {}

  int original_order() const noexcept { return original_order_; }

  static constexpr VertexId in_node(VertexId j) { return 3 * j - 2; }
  static constexpr VertexId mid_node(VertexId j) { return 3 * j - 1; }
  static constexpr VertexId out_node(VertexId j) { return 3 * j; }

  std::array<VertexId, 3> triple(VertexId j) const {
    detail::check_endpoint(original_order_, j);
    return {in_node(j), mid_node(j), out_node(j)};
  }

  // Original vertex of a converted id.
  static constexpr VertexId original(VertexId id) { return (id + 2) / 3; }
  // 0 = in, 1 = mid, 2 = out.
  static constexpr int role(VertexId id) { return (id + 2) % 3; }

 private:
  int original_order_;
};

struct KarpImage {
  UndirectedGraph graph;
  KarpMapping mapping;
};

// Directed -> undirected reduction. Each arc (a, b) becomes the edge
// {out(a), in(b)}; the Hamiltonian cycles of the two graphs correspond
// one-to-one.
inline KarpImage to_undirected_karp(const DirectedGraph& g) {
  if (g.order() < 2) throw InvalidParameter("conversion needs at least two vertices");
  std::vector<Edge> edges;
  edges.reserve(2 * g.order() + g.arc_count());
  for (VertexId j = 1; j <= g.order(); ++j) {
    edges.emplace_back(KarpMapping::in_node(j), KarpMapping::mid_node(j));
    edges.emplace_back(KarpMapping::mid_node(j), KarpMapping::out_node(j));
  }
  for (const Arc& a : g.arcs()) edges.emplace_back(KarpMapping::out_node(a.from), KarpMapping::in_node(a.to));
  return {UndirectedGraph(3 * g.order(), std::move(edges)), KarpMapping(g.order())};
}

// Collapses a Hamiltonian cycle of the converted graph back onto the
// directed graph. The traversal direction is the one that meets each triple
// in -> mid -> out. Result is in canonical directed form.
inline Cycle lift_cycle(const KarpMapping& mapping, const Cycle& undirected) {
  const std::size_t size = undirected.size();
  const int order = mapping.original_order();
  if (size != static_cast<std::size_t>(3 * order)) {
    throw MalformedCycle("cycle length " + std::to_string(size) + " is not 3 x " + std::to_string(order));
  }
  std::vector<bool> seen(size + 1, false);
  for (VertexId id : undirected) {
    if (id < 1 || id > static_cast<VertexId>(size) || seen[id]) {
      throw MalformedCycle("cycle is not a permutation of 1.." + std::to_string(size));
    }
    seen[id] = true;
  }

  // Triples are centred on mid nodes; start one position before the first.
  std::size_t offset = 0;
  while (KarpMapping::role(undirected[offset]) != 1) ++offset;
  offset = (offset + size - 1) % size;

  Cycle lifted;
  lifted.reserve(order);
  int direction = 0;  // +1 forward, -1 reversed
  for (std::size_t t = 0; t < size; t += 3) {
    const VertexId a = undirected[(offset + t) % size];
    const VertexId b = undirected[(offset + t + 1) % size];
    const VertexId c = undirected[(offset + t + 2) % size];
    const VertexId j = KarpMapping::original(b);
    int here = 0;
    if (a == KarpMapping::in_node(j) && b == KarpMapping::mid_node(j) && c == KarpMapping::out_node(j)) {
      here = 1;
    } else if (a == KarpMapping::out_node(j) && b == KarpMapping::mid_node(j) && c == KarpMapping::in_node(j)) {
      here = -1;
    } else {
      throw MalformedCycle("positions " + std::to_string((offset + t) % size) + ".. do not form a vertex triple");
    }
    if (direction != 0 && here != direction) throw MalformedCycle("triples traversed in mixed directions");
    direction = here;
    lifted.push_back(j);
  }
  if (direction < 0) std::reverse(lifted.begin(), lifted.end());
  return canonical_directed(std::move(lifted));
}

}  // namespace broken_crown
