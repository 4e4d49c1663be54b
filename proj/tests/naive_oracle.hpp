#pragma once

// Factorial-time reference counters. They share nothing with the search in
// hc_enum.hpp beyond the graph types, so they can check it on small graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "broken_crown/graph.hpp"

namespace broken_crown::testing {

// Directed Hamiltonian cycles up to rotation: vertex 1 fixed first, every
// ordering of the rest scanned.
inline std::uint64_t naive_count_directed(const DirectedGraph& g) {
  const int order = g.order();
  if (order < 2) return 0;
  std::vector<VertexId> rest(order - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::uint64_t count = 0;
  do {
    VertexId prev = 1;
    bool ok = true;
    for (VertexId v : rest) {
      if (!g.has_arc(prev, v)) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && g.has_arc(prev, 1)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

// Undirected cycles up to rotation and reflection: each cycle appears twice
// among orderings with vertex 1 fixed, once per direction.
inline std::uint64_t naive_count_undirected(const UndirectedGraph& g) {
  const int order = g.order();
  if (order < 3) return 0;
  std::vector<VertexId> rest(order - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::uint64_t count = 0;
  do {
    VertexId prev = 1;
    bool ok = true;
    for (VertexId v : rest) {
      if (!g.has_edge(prev, v)) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && g.has_edge(prev, 1)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count / 2;
}

}  // namespace broken_crown::testing
