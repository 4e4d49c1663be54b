#pragma once

#include <algorithm>
#include <compare>
#include <iterator>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "broken_crown/errors.hpp"

namespace broken_crown {

// Vertex ids are 1-based on every interface.
using VertexId = int;

struct Arc {
  VertexId from = 0;
  VertexId to = 0;

  auto operator<=>(const Arc&) const = default;
};

// Unordered pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

namespace detail {

inline void check_order(int order) {
  if (order < 1) {
    throw InvalidParameter("graph order must be positive, got " + std::to_string(order));
  }
}

inline void check_endpoint(int order, VertexId v) {
  if (v < 1 || v > order) {
    throw InvalidParameter("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order));
  }
}

inline bool sorted_contains(const std::vector<VertexId>& list, VertexId v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace detail

// Simple directed graph on vertices 1..order. Immutable once built; both
// out- and in-adjacency are kept sorted ascending.
class DirectedGraph {
 public:
  DirectedGraph(int order, std::vector<Arc> arcs) : order_(order) {
    detail::check_order(order);
    out_.resize(order + 1);
    in_.resize(order + 1);
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc& a = arcs[i];
      detail::check_endpoint(order, a.from);
      detail::check_endpoint(order, a.to);
      if (a.from == a.to) {
        throw InvalidParameter("self-loop at vertex " + std::to_string(a.from));
      }
      if (i > 0 && arcs[i - 1] == a) {
        throw InvalidParameter("parallel arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
      }
      out_[a.from].push_back(a.to);
      in_[a.to].push_back(a.from);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
    arc_count_ = arcs.size();
  }

  int order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    detail::check_endpoint(order_, v);
    return out_[v];
  }

  std::span<const VertexId> in_neighbors(VertexId v) const {
    detail::check_endpoint(order_, v);
    return in_[v];
  }

  bool has_arc(VertexId from, VertexId to) const {
    if (from < 1 || from > order_) return false;
    return detail::sorted_contains(out_[from], to);
  }

  // Sorted ascending by (from, to).
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (VertexId u = 1; u <= order_; ++u) {
      for (VertexId v : out_[u]) result.push_back({u, v});
    }
    return result;
  }

  bool operator==(const DirectedGraph& other) const {
    return order_ == other.order_ && out_ == other.out_;
  }

 private:
  int order_;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

// Simple undirected graph on vertices 1..order.
class UndirectedGraph {
 public:
  UndirectedGraph(int order, std::vector<Edge> edges) : order_(order) {
    detail::check_order(order);
    adj_.resize(order + 1);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      detail::check_endpoint(order, e.u);
      detail::check_endpoint(order, e.v);
      if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
      if (i > 0 && edges[i - 1] == e) {
        throw InvalidParameter("parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    edge_count_ = edges.size();
  }

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    detail::check_endpoint(order_, v);
    return adj_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_edge(VertexId a, VertexId b) const {
    if (a < 1 || a > order_) return false;
    return detail::sorted_contains(adj_[a], b);
  }

  // Sorted ascending by (u, v) with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (VertexId u = 1; u <= order_; ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) result.emplace_back(u, v);
      }
    }
    return result;
  }

  bool operator==(const UndirectedGraph& other) const {
    return order_ == other.order_ && adj_ == other.adj_;
  }

 private:
  int order_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<VertexId>> adj_;
};

// Returns g without the listed arcs. Duplicates in the list count once.
inline DirectedGraph remove_arcs(const DirectedGraph& g, std::span<const Arc> doomed) {
  std::vector<Arc> removal(doomed.begin(), doomed.end());
  std::sort(removal.begin(), removal.end());
  removal.erase(std::unique(removal.begin(), removal.end()), removal.end());
  for (const Arc& a : removal) {
    if (!g.has_arc(a.from, a.to)) {
      throw MissingArc("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") not present");
    }
  }
  std::vector<Arc> kept;
  kept.reserve(g.arc_count() - removal.size());
  for (const Arc& a : g.arcs()) {
    if (!std::binary_search(removal.begin(), removal.end(), a)) kept.push_back(a);
  }
  return DirectedGraph(g.order(), std::move(kept));
}

// Distinct vertices joined to v by an arc in either direction.
inline std::vector<VertexId> underlying_neighbors(const DirectedGraph& g, VertexId v) {
  auto out = g.out_neighbors(v);
  auto in = g.in_neighbors(v);
  std::vector<VertexId> merged;
  merged.reserve(out.size() + in.size());
  std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(merged));
  return merged;
}

inline std::size_t underlying_degree(const DirectedGraph& g, VertexId v) {
  return underlying_neighbors(g, v).size();
}

// True when u and w are joined in both directions, both have underlying
// degree 2, and the graph has at least four vertices.
inline bool is_smoothable(const DirectedGraph& g, VertexId u, VertexId w) {
  if (u == w || g.order() < 4) return false;
  if (u < 1 || u > g.order() || w < 1 || w > g.order()) return false;
  return g.has_arc(u, w) && g.has_arc(w, u) && underlying_degree(g, u) == 2 &&
         underlying_degree(g, w) == 2;
}

// Every smoothable pair, as (smaller id, larger id), ascending.
inline std::vector<std::pair<VertexId, VertexId>> smoothable_pairs(const DirectedGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 1; u <= g.order(); ++u) {
    for (VertexId w : g.out_neighbors(u)) {
      if (u < w && is_smoothable(g, u, w)) pairs.emplace_back(u, w);
    }
  }
  return pairs;
}

struct SmoothResult {
  DirectedGraph graph;
  // rename[old id] = new id; index 0 unused. Both merged vertices map to
  // the surviving id.
  std::vector<VertexId> rename;
};

// Merges the adjacent degree-2 vertices u and w. The merged vertex keeps
// min(u, w); ids above max(u, w) shift down by one.
inline SmoothResult smooth_pair(const DirectedGraph& g, VertexId u, VertexId w) {
  if (!is_smoothable(g, u, w)) {
    throw NotContractible("vertices " + std::to_string(u) + " and " + std::to_string(w) +
                          " are not an adjacent degree-2 pair");
  }
  const VertexId keep = std::min(u, w);
  const VertexId drop = std::max(u, w);

  std::vector<VertexId> rename(g.order() + 1, 0);
  for (VertexId v = 1; v <= g.order(); ++v) {
    rename[v] = v < drop ? v : v - 1;
  }
  rename[drop] = keep;

  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) {
    const VertexId from = rename[a.from];
    const VertexId to = rename[a.to];
    if (from == to) continue;  // the internal u<->w arcs
    arcs.push_back({from, to});
  }
  return {DirectedGraph(g.order() - 1, std::move(arcs)), std::move(rename)};
}

// Orientation-blind image: one edge per pair joined by at least one arc.
inline UndirectedGraph underlying_undirected(const DirectedGraph& g) {
  std::vector<Edge> edges;
  for (const Arc& a : g.arcs()) {
    if (a.from < a.to || !g.has_arc(a.to, a.from)) edges.emplace_back(a.from, a.to);
  }
  return UndirectedGraph(g.order(), std::move(edges));
}

// Replaces each edge by the two opposite arcs.
inline DirectedGraph bidirected(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return DirectedGraph(g.order(), std::move(arcs));
}

}  // namespace broken_crown
