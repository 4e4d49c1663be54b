#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "broken_crown/errors.hpp"
#include "broken_crown/graph.hpp"

namespace broken_crown {

using Label = int;

// Where the labelled hub edges meet a crown of parameter n. entry(i) is the
// vertex the incoming edge i points at; exit(i) is the vertex outgoing edge i
// leaves from. Both maps are bijections from labels 1..n onto crown vertices.
class CrownAttachment {
 public:
  // Canonical attachment for the crown of parameter n (n >= 4).
  static CrownAttachment for_crown(int n) {
    if (n < 4) throw InvalidParameter("crown parameter must be >= 4, got " + std::to_string(n));
    std::vector<VertexId> entry(n + 1, 0);
    std::vector<VertexId> exit(n + 1, 0);
    for (Label i = 1; i <= n; ++i) entry[i] = 2 * i - 1;
    exit[1] = 5 * n - 10;
    exit[2] = 1;
    exit[n - 1] = 2 * n - 1;
    exit[n] = 2 * n;
    for (int i = 1; i <= (n - 4) / 2; ++i) exit[i + 2] = 5 * n - 9 - 3 * i;
    for (int i = 1; i <= (n - 3) / 2; ++i) exit[n - 1 - i] = 2 * n - 1 + 3 * i;
    return CrownAttachment(n, std::move(entry), std::move(exit));
  }

  int n() const noexcept { return n_; }

  VertexId entry(Label i) const { return entry_.at(check_label(i)); }
  VertexId exit(Label i) const { return exit_.at(check_label(i)); }

  std::optional<Label> label_of_entry(VertexId v) const { return find(entry_, v); }
  std::optional<Label> label_of_exit(VertexId v) const { return find(exit_, v); }

  // Attachment after the crown vertices were renumbered (rename[old] = new).
  CrownAttachment renamed(const std::vector<VertexId>& rename) const {
    std::vector<VertexId> entry(entry_.size(), 0);
    std::vector<VertexId> exit(exit_.size(), 0);
    for (Label i = 1; i <= n_; ++i) {
      entry[i] = rename.at(entry_[i]);
      exit[i] = rename.at(exit_[i]);
    }
    return CrownAttachment(n_, std::move(entry), std::move(exit));
  }

  bool operator==(const CrownAttachment&) const = default;

 private:
  CrownAttachment(int n, std::vector<VertexId> entry, std::vector<VertexId> exit)
      : n_(n), entry_(std::move(entry)), exit_(std::move(exit)) {}

  Label check_label(Label i) const {
    if (i < 1 || i > n_) {
      throw InvalidParameter("label " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    return i;
  }

  std::optional<Label> find(const std::vector<VertexId>& map, VertexId v) const {
    for (Label i = 1; i <= n_; ++i) {
      if (map[i] == v) return i;
    }
    return std::nullopt;
  }

  int n_;
  std::vector<VertexId> entry_;
  std::vector<VertexId> exit_;
};

enum class RemovalPolicy { OutgoingOnly, IncomingOnly, Both };

inline std::string_view to_string(RemovalPolicy p) {
  switch (p) {
    case RemovalPolicy::OutgoingOnly: return "outgoing";
    case RemovalPolicy::IncomingOnly: return "incoming";
    case RemovalPolicy::Both: return "both";
  }
  return "outgoing";
}

inline std::optional<RemovalPolicy> parse_policy(std::string_view text) {
  if (text == "outgoing") return RemovalPolicy::OutgoingOnly;
  if (text == "incoming") return RemovalPolicy::IncomingOnly;
  if (text == "both") return RemovalPolicy::Both;
  return std::nullopt;
}

// Subgraph standing in for the single hub vertex. Must contain exactly one
// Hamiltonian path, running from start to finish (see is_unique_path_hub).
struct HubSpec {
  DirectedGraph graph;
  VertexId start = 1;
  VertexId finish = 1;
};

// Contiguous id range [first, last] occupied by the hub inside a larger graph.
struct HubRange {
  VertexId first = 0;
  VertexId last = 0;
  VertexId start = 0;
  VertexId finish = 0;

  bool contains(VertexId v) const noexcept { return v >= first && v <= last; }
  bool operator==(const HubRange&) const = default;
};

struct BrokenCrownSpec {
  int n = 4;
  int k = 4;
  RemovalPolicy policy = RemovalPolicy::OutgoingOnly;
  std::vector<Label> removed_labels;
  bool contract = false;
  int hub_length = 1;
};

struct Crown {
  DirectedGraph graph;
  CrownAttachment attachment;
};

struct BrokenCrown {
  DirectedGraph graph;
  CrownAttachment attachment;
  HubRange hub;
};

// The n-k largest labels.
inline std::vector<Label> default_removed_labels(int n, int k) {
  std::vector<Label> labels;
  for (Label i = k + 1; i <= n; ++i) labels.push_back(i);
  return labels;
}

inline void validate(const BrokenCrownSpec& spec) {
  if (spec.n < 4) throw InvalidParameter("n must be >= 4, got " + std::to_string(spec.n));
  if (spec.k < 1 || spec.k > spec.n) {
    throw InvalidParameter("k must satisfy 1 <= k <= n, got n=" + std::to_string(spec.n) +
                           " k=" + std::to_string(spec.k));
  }
  if (spec.hub_length < 1) {
    throw InvalidParameter("hub length must be >= 1, got " + std::to_string(spec.hub_length));
  }
  if (static_cast<int>(spec.removed_labels.size()) != spec.n - spec.k) {
    throw InvalidParameter("expected " + std::to_string(spec.n - spec.k) + " removed labels, got " +
                           std::to_string(spec.removed_labels.size()));
  }
  std::vector<Label> sorted = spec.removed_labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > spec.n) {
      throw InvalidParameter("removed label " + std::to_string(sorted[i]) + " outside 1.." +
                             std::to_string(spec.n));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw InvalidParameter("removed label " + std::to_string(sorted[i]) + " listed twice");
    }
  }
}

// Crown subgraph on 5n-10 vertices: a bidirected cycle 1..5n-10 plus n-2
// one-way chords.
inline Crown build_crown(int n) {
  if (n < 4) throw InvalidParameter("crown parameter must be >= 4, got " + std::to_string(n));
  const int order = 5 * n - 10;
  std::vector<Arc> arcs;
  arcs.reserve(11 * n - 22);
  for (VertexId i = 1; i < order; ++i) {
    arcs.push_back({i, i + 1});
    arcs.push_back({i + 1, i});
  }
  arcs.push_back({1, order});
  arcs.push_back({order, 1});
  arcs.push_back({2 * n, 2 * n - 2});
  arcs.push_back({order, 2});
  for (int i = 1; i <= (n - 3) / 2; ++i) arcs.push_back({2 * n + 3 * i, 2 * n - 2 - 2 * i});
  for (int i = 1; i <= (n - 4) / 2; ++i) arcs.push_back({order - 3 * i, 2 * i + 2});
  return {DirectedGraph(order, std::move(arcs)), CrownAttachment::for_crown(n)};
}

// Directed path 1 -> 2 -> ... -> m.
inline HubSpec build_path_hub(int m) {
  if (m < 1) throw InvalidParameter("hub path length must be >= 1, got " + std::to_string(m));
  std::vector<Arc> arcs;
  for (VertexId i = 1; i < m; ++i) arcs.push_back({i, i + 1});
  return {DirectedGraph(m, std::move(arcs)), 1, m};
}

// Appends the hub after the crown vertices and wires every label: the
// incoming edge i leaves hub.finish for entry(i), the outgoing edge i leaves
// exit(i) for hub.start.
inline DirectedGraph attach_hub(const DirectedGraph& crown, const CrownAttachment& att,
                                const HubSpec& hub) {
  const int n = att.n();
  const int base = 5 * n - 10;
  if (crown.order() != base) {
    throw InvalidParameter("crown order " + std::to_string(crown.order()) + " does not match n=" +
                           std::to_string(n));
  }
  const int m = hub.graph.order();
  if (hub.start < 1 || hub.start > m || hub.finish < 1 || hub.finish > m) {
    throw InvalidParameter("hub start/finish outside the hub graph");
  }
  std::vector<Arc> arcs = crown.arcs();
  for (const Arc& a : hub.graph.arcs()) arcs.push_back({base + a.from, base + a.to});
  for (Label i = 1; i <= n; ++i) {
    arcs.push_back({base + hub.finish, att.entry(i)});
    arcs.push_back({att.exit(i), base + hub.start});
  }
  return DirectedGraph(base + m, std::move(arcs));
}

// Crown plus path hub with the label edges of spec.removed_labels deleted
// according to spec.policy. With spec.contract, every exit vertex left with
// underlying degree 2 by an outgoing removal is smoothed together with an
// adjacent degree-2 crown vertex, when one exists.
inline BrokenCrown build_broken_crown(const BrokenCrownSpec& spec) {
  validate(spec);
  const int n = spec.n;
  Crown crown = build_crown(n);
  const HubSpec hub = build_path_hub(spec.hub_length);
  const int base = 5 * n - 10;
  HubRange range{base + 1, base + spec.hub_length, base + hub.start, base + hub.finish};

  DirectedGraph graph = attach_hub(crown.graph, crown.attachment, hub);

  std::vector<Label> removed = spec.removed_labels;
  std::sort(removed.begin(), removed.end());
  const bool drop_out = spec.policy != RemovalPolicy::IncomingOnly;
  const bool drop_in = spec.policy != RemovalPolicy::OutgoingOnly;
  std::vector<Arc> doomed;
  for (Label i : removed) {
    if (drop_out) doomed.push_back({crown.attachment.exit(i), range.start});
    if (drop_in) doomed.push_back({range.finish, crown.attachment.entry(i)});
  }
  graph = remove_arcs(graph, doomed);

  if (!spec.contract || !drop_out) {
    return {std::move(graph), std::move(crown.attachment), range};
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<bool> used(graph.order() + 1, false);
  for (Label i : removed) {
    const VertexId x = crown.attachment.exit(i);
    if (used[x]) continue;
    for (VertexId w : underlying_neighbors(graph, x)) {
      if (range.contains(w) || used[w] || !is_smoothable(graph, x, w)) continue;
      pairs.emplace_back(x, w);
      used[x] = used[w] = true;
      break;
    }
  }

  // current[v] tracks where original vertex v ended up.
  std::vector<VertexId> current(graph.order() + 1);
  for (VertexId v = 0; v <= graph.order(); ++v) current[v] = v;
  for (const auto& [a, b] : pairs) {
    if (!is_smoothable(graph, current[a], current[b])) continue;
    SmoothResult step = smooth_pair(graph, current[a], current[b]);
    for (VertexId& v : current) v = v == 0 ? 0 : step.rename[v];
    graph = std::move(step.graph);
  }

  CrownAttachment att = crown.attachment.renamed(current);
  HubRange moved{current[range.first], current[range.last], current[range.start], current[range.finish]};
  return {std::move(graph), std::move(att), moved};
}

// Wheel W_n: rim cycle on 1..n-1 and hub n joined to every rim vertex, or
// only to kept_spokes when given.
inline UndirectedGraph build_wheel(int n, const std::optional<std::vector<VertexId>>& kept_spokes = std::nullopt) {
  if (n < 4) throw InvalidParameter("wheel order must be >= 4, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 1);
  if (kept_spokes) {
    std::vector<VertexId> spokes = *kept_spokes;
    std::sort(spokes.begin(), spokes.end());
    spokes.erase(std::unique(spokes.begin(), spokes.end()), spokes.end());
    for (VertexId s : spokes) {
      if (s < 1 || s > n - 1) {
        throw InvalidParameter("spoke " + std::to_string(s) + " is not a rim vertex of W_" + std::to_string(n));
      }
      edges.emplace_back(s, n);
    }
  } else {
    for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, n);
  }
  return UndirectedGraph(n, std::move(edges));
}

// Generalized Petersen graph GP(n,2): outer cycle on 1..n, inner vertices
// n+1..2n joined at step 2, spokes between matching positions.
inline UndirectedGraph build_gp2(int n) {
  if (n < 5) throw InvalidParameter("GP(n,2) needs n >= 5, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  auto outer = [](int i) { return i + 1; };
  auto inner = [n](int i) { return n + i + 1; };
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(outer(i), outer((i + 1) % n));
    edges.emplace_back(outer(i), inner(i));
    edges.emplace_back(inner(i), inner((i + 2) % n));
  }
  return UndirectedGraph(2 * n, std::move(edges));
}

}  // namespace broken_crown
