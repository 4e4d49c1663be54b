#pragma once

// Small graphs shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "broken_crown/construct.hpp"
#include "broken_crown/graph.hpp"

namespace broken_crown::testing {

inline DirectedGraph bidirected_cycle(int order) {
  std::vector<Arc> arcs;
  for (VertexId i = 1; i <= order; ++i) {
    const VertexId next = i % order + 1;
    arcs.push_back({i, next});
    arcs.push_back({next, i});
  }
  return DirectedGraph(order, std::move(arcs));
}

inline DirectedGraph directed_cycle(int order) {
  std::vector<Arc> arcs;
  for (VertexId i = 1; i <= order; ++i) arcs.push_back({i, i % order + 1});
  return DirectedGraph(order, std::move(arcs));
}

inline UndirectedGraph complete_graph(int order) {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= order; ++u) {
    for (VertexId v = u + 1; v <= order; ++v) edges.emplace_back(u, v);
  }
  return UndirectedGraph(order, std::move(edges));
}

inline DirectedGraph random_directed(int order, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Arc> arcs;
  for (VertexId u = 1; u <= order; ++u) {
    for (VertexId v = 1; v <= order; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
  return DirectedGraph(order, std::move(arcs));
}

inline UndirectedGraph random_undirected(int order, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= order; ++u) {
    for (VertexId v = u + 1; v <= order; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph(order, std::move(edges));
}

template <typename Graph>
struct Fixture {
  std::string name;
  Graph graph;
};

// Directed fixtures of order <= 8.
inline std::vector<Fixture<DirectedGraph>> small_directed_fixtures() {
  std::vector<Fixture<DirectedGraph>> out;
  for (int order = 2; order <= 8; ++order) {
    out.push_back({"directed_cycle_" + std::to_string(order), directed_cycle(order)});
    out.push_back({"complete_bidirected_" + std::to_string(order), bidirected(complete_graph(order))});
  }
  for (int order = 3; order <= 8; ++order) {
    out.push_back({"bidirected_cycle_" + std::to_string(order), bidirected_cycle(order)});
  }
  for (int m = 1; m <= 7; ++m) {
    // Path hub closed by an apex: a single directed cycle.
    const HubSpec hub = build_path_hub(m);
    std::vector<Arc> arcs = hub.graph.arcs();
    arcs.push_back({m + 1, hub.start});
    arcs.push_back({hub.finish, m + 1});
    out.push_back({"closed_path_hub_" + std::to_string(m), DirectedGraph(m + 1, std::move(arcs))});
  }
  std::mt19937 rng(20160311);
  for (int i = 0; i < 60; ++i) {
    const int order = 3 + i % 6;
    const double density = 0.25 + 0.1 * (i % 5);
    out.push_back({"random_directed_" + std::to_string(i), random_directed(order, density, rng)});
  }
  return out;
}

// Undirected fixtures of order <= 8.
inline std::vector<Fixture<UndirectedGraph>> small_undirected_fixtures() {
  std::vector<Fixture<UndirectedGraph>> out;
  for (int order = 3; order <= 8; ++order) {
    out.push_back({"complete_" + std::to_string(order), complete_graph(order)});
  }
  for (int n = 4; n <= 8; ++n) {
    out.push_back({"wheel_" + std::to_string(n), build_wheel(n)});
  }
  out.push_back({"wheel_8_spokes_1_2", build_wheel(8, std::vector<VertexId>{1, 2})});
  out.push_back({"wheel_8_spokes_1_3_5", build_wheel(8, std::vector<VertexId>{1, 3, 5})});
  std::mt19937 rng(20140829);
  for (int i = 0; i < 60; ++i) {
    const int order = 3 + i % 6;
    const double density = 0.35 + 0.1 * (i % 5);
    out.push_back({"random_undirected_" + std::to_string(i), random_undirected(order, density, rng)});
  }
  return out;
}

}  // namespace broken_crown::testing
