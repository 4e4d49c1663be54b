#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "broken_crown/construct.hpp"
#include "broken_crown/errors.hpp"
#include "broken_crown/graph.hpp"

namespace broken_crown {

using Cycle = std::vector<VertexId>;

struct LabelPair {
  Label incoming = 0;
  Label outgoing = 0;

  bool operator==(const LabelPair&) const = default;
};

struct CycleReport {
  std::uint64_t count = 0;
  // Canonical cycles in discovery order, at most the collection limit.
  std::vector<Cycle> cycles;
  // The search stopped at the caller's cap; count is a lower bound.
  bool truncated = false;
  // More cycles were counted than collected.
  bool collection_capped = false;
  std::optional<std::vector<LabelPair>> label_usage;
};

inline constexpr std::size_t kDefaultCollectLimit = 10000;

// Rotation so the smallest id comes first.
inline Cycle canonical_directed(Cycle cycle) {
  if (cycle.empty()) return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

// Smallest id first, then the lexicographically smaller direction.
inline Cycle canonical_undirected(Cycle cycle) {
  cycle = canonical_directed(std::move(cycle));
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

namespace detail {

// Counters are decremented during descent and restored from the trail on
// backtrack.
class Trail {
 public:
  // Returns the new value.
  int decrement(int& counter) {
    entries_.push_back(&counter);
    return --counter;
  }

  std::size_t mark() const { return entries_.size(); }

  void undo(std::size_t mark) {
    while (entries_.size() > mark) {
      ++*entries_.back();
      entries_.pop_back();
    }
  }

 private:
  std::vector<int*> entries_;
};

struct SearchSink {
  std::optional<std::uint64_t> cap;
  bool collect = false;
  std::size_t collect_limit = kDefaultCollectLimit;
  CycleReport report;
  bool stop = false;

  void record(const Cycle& path) {
    ++report.count;
    if (collect) {
      if (report.cycles.size() < collect_limit) {
        report.cycles.push_back(path);
      } else {
        report.collection_capped = true;
      }
    }
    if (cap && report.count >= *cap) {
      report.truncated = true;
      stop = true;
    }
  }
};

// Depth-first extension of a path rooted at vertex 1. For every unvisited y,
// in_avail[y] counts in-neighbours that are unvisited or the path end, and
// out_avail[y] counts out-neighbours that are unvisited or vertex 1. A zero
// in either kills the branch. An unvisited out-neighbour of the end whose
// only remaining predecessor is the end must come next.
class DirectedSearch {
 public:
  DirectedSearch(const DirectedGraph& g, SearchSink& sink)
      : g_(g), sink_(sink), order_(g.order()), visited_(order_ + 1, false),
        in_avail_(order_ + 1, 0), out_avail_(order_ + 1, 0) {}

  void run() {
    if (order_ < 2) return;
    for (VertexId v = 1; v <= order_; ++v) {
      in_avail_[v] = static_cast<int>(g_.in_neighbors(v).size());
      out_avail_[v] = static_cast<int>(g_.out_neighbors(v).size());
      if (in_avail_[v] == 0 || out_avail_[v] == 0) return;
    }
    closers_ = in_avail_[1];
    visited_[1] = true;
    path_.push_back(1);
    extend();
  }

 private:
  void extend() {
    if (sink_.stop) return;
    const VertexId end = path_.back();
    if (static_cast<int>(path_.size()) == order_) {
      if (g_.has_arc(end, 1)) sink_.record(path_);
      return;
    }
    VertexId forced = 0;
    for (VertexId y : g_.out_neighbors(end)) {
      if (visited_[y] || in_avail_[y] != 1) continue;
      if (forced != 0) return;
      forced = y;
    }
    if (forced != 0) {
      step(forced);
      return;
    }
    for (VertexId y : g_.out_neighbors(end)) {
      if (!visited_[y]) step(y);
      if (sink_.stop) return;
    }
  }

  void step(VertexId x) {
    const std::size_t mark = trail_.mark();
    const VertexId from = path_.back();
    bool alive = true;
    for (VertexId y : g_.out_neighbors(from)) {
      if (!visited_[y] && y != x && trail_.decrement(in_avail_[y]) == 0) alive = false;
    }
    visited_[x] = true;
    path_.push_back(x);
    for (VertexId z : g_.in_neighbors(x)) {
      if (!visited_[z] && trail_.decrement(out_avail_[z]) == 0) alive = false;
    }
    if (g_.has_arc(x, 1) && trail_.decrement(closers_) == 0 &&
        static_cast<int>(path_.size()) < order_) {
      alive = false;
    }
    if (alive) extend();
    trail_.undo(mark);
    path_.pop_back();
    visited_[x] = false;
  }

  const DirectedGraph& g_;
  SearchSink& sink_;
  int order_;
  std::vector<bool> visited_;
  std::vector<int> in_avail_;
  std::vector<int> out_avail_;
  // Unvisited in-neighbours of vertex 1.
  int closers_ = 0;
  Cycle path_;
  Trail trail_;
};

// Undirected variant. avail[y] counts neighbours of an unvisited y that are
// unvisited, the path end, or vertex 1; fewer than two kills the branch.
// A cycle is emitted only when its second vertex is smaller than its last,
// so each undirected cycle is counted once.
class UndirectedSearch {
 public:
  UndirectedSearch(const UndirectedGraph& g, SearchSink& sink)
      : g_(g), sink_(sink), order_(g.order()), visited_(order_ + 1, false), avail_(order_ + 1, 0) {}

  void run() {
    if (order_ < 3) return;
    for (VertexId v = 1; v <= order_; ++v) {
      avail_[v] = static_cast<int>(g_.degree(v));
      if (avail_[v] < 2) return;
    }
    closers_ = avail_[1];
    visited_[1] = true;
    path_.push_back(1);
    extend();
  }

 private:
  void extend() {
    if (sink_.stop) return;
    const VertexId end = path_.back();
    if (static_cast<int>(path_.size()) == order_) {
      if (g_.has_edge(end, 1) && path_[1] < end) sink_.record(path_);
      return;
    }
    if (path_.size() >= 2) {
      VertexId forced = 0;
      for (VertexId y : g_.neighbors(end)) {
        if (visited_[y] || avail_[y] != 2) continue;
        if (forced != 0) return;
        forced = y;
      }
      if (forced != 0) {
        step(forced);
        return;
      }
    }
    for (VertexId y : g_.neighbors(end)) {
      if (!visited_[y]) step(y);
      if (sink_.stop) return;
    }
  }

  void step(VertexId x) {
    const std::size_t mark = trail_.mark();
    const VertexId from = path_.back();
    bool alive = true;
    if (from != 1) {
      for (VertexId y : g_.neighbors(from)) {
        if (!visited_[y] && y != x && trail_.decrement(avail_[y]) < 2) alive = false;
      }
    }
    visited_[x] = true;
    path_.push_back(x);
    if (g_.has_edge(x, 1) && trail_.decrement(closers_) == 0 &&
        static_cast<int>(path_.size()) < order_) {
      alive = false;
    }
    if (alive) extend();
    trail_.undo(mark);
    path_.pop_back();
    visited_[x] = false;
  }

  const UndirectedGraph& g_;
  SearchSink& sink_;
  int order_;
  std::vector<bool> visited_;
  std::vector<int> avail_;
  int closers_ = 0;
  Cycle path_;
  Trail trail_;
};

}  // namespace detail

// Directed Hamiltonian cycles up to rotation. Cycles are reported starting
// at vertex 1; the search order is ascending by id, so reports are
// deterministic.
inline CycleReport count_hc_directed(const DirectedGraph& g, std::optional<std::uint64_t> cap = std::nullopt,
                                     bool collect = false, std::size_t collect_limit = kDefaultCollectLimit) {
  detail::SearchSink sink{cap, collect, collect_limit, {}, false};
  detail::DirectedSearch(g, sink).run();
  return std::move(sink.report);
}

// Undirected Hamiltonian cycles up to rotation and reflection.
inline CycleReport count_hc_undirected(const UndirectedGraph& g, std::optional<std::uint64_t> cap = std::nullopt,
                                       bool collect = false, std::size_t collect_limit = kDefaultCollectLimit) {
  detail::SearchSink sink{cap, collect, collect_limit, {}, false};
  detail::UndirectedSearch(g, sink).run();
  return std::move(sink.report);
}

struct LabelAnalysis {
  // One entry per cycle, in report order.
  std::vector<LabelPair> pairs;
  bool all_matched = true;
  bool all_distinct = true;

  bool holds() const noexcept { return all_matched && all_distinct; }
};

// For each collected cycle of a broken crown graph, finds the single arc
// leaving the hub (its target names the incoming label) and the single arc
// entering it (its source names the outgoing label).
inline LabelAnalysis analyze_labels(const CycleReport& report, const CrownAttachment& att, const HubRange& hub) {
  if (report.cycles.size() != report.count) {
    throw InvalidParameter("label analysis needs every cycle collected (" + std::to_string(report.cycles.size()) +
                           " of " + std::to_string(report.count) + ")");
  }
  LabelAnalysis analysis;
  for (std::size_t c = 0; c < report.cycles.size(); ++c) {
    const Cycle& cycle = report.cycles[c];
    std::optional<Label> incoming;
    std::optional<Label> outgoing;
    int leaving = 0;
    int entering = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const VertexId a = cycle[i];
      const VertexId b = cycle[(i + 1) % cycle.size()];
      const bool a_in = hub.contains(a);
      const bool b_in = hub.contains(b);
      if (a_in && !b_in) {
        ++leaving;
        if (a == hub.finish) incoming = att.label_of_entry(b);
      } else if (!a_in && b_in) {
        ++entering;
        if (b == hub.start) outgoing = att.label_of_exit(a);
      }
    }
    if (leaving != 1 || entering != 1 || !incoming || !outgoing) {
      throw PropertyViolation("cycle " + std::to_string(c) + " crosses the hub boundary " +
                              std::to_string(leaving) + "x outward and " + std::to_string(entering) +
                              "x inward, or not through a labelled edge");
    }
    analysis.pairs.push_back({*incoming, *outgoing});
    if (*incoming != *outgoing) analysis.all_matched = false;
  }
  std::vector<Label> seen;
  for (const LabelPair& p : analysis.pairs) seen.push_back(p.incoming);
  std::sort(seen.begin(), seen.end());
  analysis.all_distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  return analysis;
}

// Exactly one Hamiltonian path, and it runs start -> finish. Counted as
// Hamiltonian cycles through an auxiliary apex vertex.
inline bool is_unique_path_hub(const HubSpec& hub) {
  const int m = hub.graph.order();
  if (m == 1) return hub.start == 1 && hub.finish == 1;
  if (hub.start == hub.finish) return false;
  const VertexId apex = m + 1;
  std::vector<Arc> all = hub.graph.arcs();
  std::vector<Arc> pinned = all;
  for (VertexId v = 1; v <= m; ++v) {
    all.push_back({apex, v});
    all.push_back({v, apex});
  }
  pinned.push_back({apex, hub.start});
  pinned.push_back({hub.finish, apex});
  const auto any_path = count_hc_directed(DirectedGraph(m + 1, std::move(all)), 2);
  const auto pinned_path = count_hc_directed(DirectedGraph(m + 1, std::move(pinned)), 2);
  return any_path.count == 1 && pinned_path.count == 1;
}

}  // namespace broken_crown
