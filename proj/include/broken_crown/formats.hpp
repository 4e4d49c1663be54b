#pragma once

// Text formats for generated instances.
//
// TSPLIB HCP (undirected):
//
//   NAME : <name>
//   COMMENT : family=<family> [n=<n>] [k=<k>] [policy=<policy>] [labels=<l1,l2,...>]
//   TYPE : HCP
//   DIMENSION : <order>
//   EDGE_DATA_FORMAT : EDGE_LIST
//   EDGE_DATA_SECTION
//   <u> <v>          one per edge, u < v, ascending
//   -1
//   EOF
//
// Directed arc list ("dhc"):
//
//   p dhc <order> <arc-count>
//   c name=<name>
//   c family=<family>
//   c n=<n> / c k=<k> / c policy=<policy> / c labels=<l1,...>   (when present)
//   a <u> <v>        one per arc, ascending
//
// Both writers emit LF line endings and are deterministic for a given graph
// and metadata. A JSON form is also available for programmatic consumers.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "broken_crown/construct.hpp"
#include "broken_crown/errors.hpp"
#include "broken_crown/graph.hpp"

namespace broken_crown {

enum class Family { Crown, BrokenCrown, Wheel, Gp2, Converted, Custom };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Crown: return "crown";
    case Family::BrokenCrown: return "broken_crown";
    case Family::Wheel: return "wheel";
    case Family::Gp2: return "gp2";
    case Family::Converted: return "converted";
    case Family::Custom: return "custom";
  }
  return "custom";
}

inline std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::Crown, Family::BrokenCrown, Family::Wheel, Family::Gp2, Family::Converted,
                   Family::Custom}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

// Converted instances carry the parameters of the graph they came from.
struct InstanceMetadata {
  std::string name;
  Family family = Family::Custom;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<RemovalPolicy> policy;
  std::optional<std::vector<Label>> removed_labels;
  bool directed = false;

  bool operator==(const InstanceMetadata&) const = default;
};

enum class Format { Auto, Tsplib, Dhc, Json };

struct ParsedInstance {
  std::variant<DirectedGraph, UndirectedGraph> graph;
  InstanceMetadata meta;

  bool directed() const noexcept { return std::holds_alternative<DirectedGraph>(graph); }
};

namespace detail {

inline std::string join_labels(const std::vector<Label>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

// key=value pairs in fixed order, family first.
inline std::vector<std::pair<std::string, std::string>> metadata_fields(const InstanceMetadata& meta) {
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("family", std::string(to_string(meta.family)));
  if (meta.n) fields.emplace_back("n", std::to_string(*meta.n));
  if (meta.k) fields.emplace_back("k", std::to_string(*meta.k));
  if (meta.policy) fields.emplace_back("policy", std::string(to_string(*meta.policy)));
  if (meta.removed_labels) fields.emplace_back("labels", join_labels(*meta.removed_labels));
  return fields;
}

inline std::optional<int> to_int(std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

inline int require_int(std::string_view text, std::size_t line) {
  auto value = to_int(text);
  if (!value) throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  return *value;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Applies one key=value field; unknown keys are ignored.
inline void apply_field(InstanceMetadata& meta, std::string_view key, std::string_view value, std::size_t line) {
  if (key == "name") {
    meta.name = std::string(value);
  } else if (key == "family") {
    auto family = parse_family(value);
    if (!family) throw ParseError(line, "unknown family '" + std::string(value) + "'");
    meta.family = *family;
  } else if (key == "n") {
    meta.n = require_int(value, line);
  } else if (key == "k") {
    meta.k = require_int(value, line);
  } else if (key == "policy") {
    auto policy = parse_policy(value);
    if (!policy) throw ParseError(line, "unknown policy '" + std::string(value) + "'");
    meta.policy = *policy;
  } else if (key == "labels") {
    std::vector<Label> labels;
    std::size_t start = 0;
    while (start < value.size()) {
      auto comma = value.find(',', start);
      if (comma == std::string_view::npos) comma = value.size();
      labels.push_back(require_int(value.substr(start, comma - start), line));
      start = comma + 1;
    }
    meta.removed_labels = std::move(labels);
  }
}

inline void check_vertex(int v, int order, std::size_t line) {
  if (v < 1) throw ParseError(line, "vertex id " + std::to_string(v) + " is not 1-based");
  if (v > order) {
    throw DimensionMismatch("line " + std::to_string(line) + ": vertex " + std::to_string(v) +
                            " exceeds declared order " + std::to_string(order));
  }
}

inline ParsedInstance parse_tsplib(std::string_view text) {
  const auto lines = split_lines(text);
  InstanceMetadata meta;
  meta.directed = false;
  std::optional<int> dimension;
  bool saw_type = false;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line == "EDGE_DATA_SECTION") break;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'KEY : value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "NAME") {
      meta.name = std::string(value);
    } else if (key == "COMMENT") {
      for (auto token : split_ws(value)) {
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) continue;
        apply_field(meta, token.substr(0, eq), token.substr(eq + 1), line_no);
      }
    } else if (key == "TYPE") {
      if (value != "HCP") throw ParseError(line_no, "unsupported TYPE '" + std::string(value) + "'");
      saw_type = true;
    } else if (key == "DIMENSION") {
      dimension = require_int(value, line_no);
      if (*dimension < 1) throw ParseError(line_no, "DIMENSION must be positive");
    } else if (key == "EDGE_DATA_FORMAT") {
      if (value != "EDGE_LIST") throw ParseError(line_no, "unsupported EDGE_DATA_FORMAT '" + std::string(value) + "'");
    } else {
      throw ParseError(line_no, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (i == lines.size()) throw ParseError(lines.size(), "missing EDGE_DATA_SECTION");
  if (!saw_type) throw ParseError(i + 1, "missing TYPE : HCP");
  if (!dimension) throw ParseError(i + 1, "missing DIMENSION");

  std::vector<Edge> edges;
  bool terminated = false;
  for (++i; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(lines[i]);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0] == "-1") {
      terminated = true;
      ++i;
      break;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const int u = require_int(tokens[0], line_no);
    const int v = require_int(tokens[1], line_no);
    check_vertex(u, *dimension, line_no);
    check_vertex(v, *dimension, line_no);
    if (u == v) throw ParseError(line_no, "self-loop");
    edges.emplace_back(u, v);
  }
  if (!terminated) throw ParseError(lines.size(), "edge section not terminated by -1");
  for (; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (!line.empty() && line != "EOF") throw ParseError(i + 1, "unexpected content after -1");
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(lines.size(), "duplicate edge");
  }
  return {UndirectedGraph(*dimension, std::move(edges)), std::move(meta)};
}

inline ParsedInstance parse_dhc(std::string_view text) {
  const auto lines = split_lines(text);
  InstanceMetadata meta;
  meta.directed = true;
  std::optional<int> order;
  std::size_t declared = 0;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line == "c" || line.starts_with("c ")) {
      const auto body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string_view::npos) apply_field(meta, body.substr(0, eq), body.substr(eq + 1), line_no);
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      if (order) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "dhc") throw ParseError(line_no, "expected 'p dhc <order> <arcs>'");
      order = require_int(tokens[2], line_no);
      const int count = require_int(tokens[3], line_no);
      if (*order < 1 || count < 0) throw ParseError(line_no, "invalid problem line counts");
      declared = static_cast<std::size_t>(count);
    } else if (tokens[0] == "a") {
      if (!order) throw ParseError(line_no, "arc before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'a u v'");
      const int u = require_int(tokens[1], line_no);
      const int v = require_int(tokens[2], line_no);
      check_vertex(u, *order, line_no);
      check_vertex(v, *order, line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      arcs.push_back({u, v});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!order) throw ParseError(lines.size(), "missing problem line");
  if (arcs.size() != declared) {
    throw DimensionMismatch("declared " + std::to_string(declared) + " arcs, found " + std::to_string(arcs.size()));
  }
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(lines.size(), "duplicate arc");
  }
  return {DirectedGraph(*order, std::move(arcs)), std::move(meta)};
}

inline ParsedInstance parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const bool directed = doc.at("directed").get<bool>();
    const int order = doc.at("order").get<int>();
    InstanceMetadata meta;
    meta.directed = directed;
    if (doc.contains("meta")) {
      for (const auto& [key, value] : doc.at("meta").items()) {
        if (key == "labels") {
          meta.removed_labels = value.get<std::vector<Label>>();
        } else if (value.is_string()) {
          apply_field(meta, key, value.get<std::string>(), 1);
        } else if (value.is_number_integer()) {
          apply_field(meta, key, std::to_string(value.get<int>()), 1);
        }
      }
    }
    if (directed) {
      std::vector<Arc> arcs;
      for (const auto& pair : doc.at("arcs")) arcs.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
      return {DirectedGraph(order, std::move(arcs)), std::move(meta)};
    }
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    return {UndirectedGraph(order, std::move(edges)), std::move(meta)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON instance: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw ParseError(1, e.what());
  }
}

inline nlohmann::ordered_json metadata_json(const InstanceMetadata& meta) {
  nlohmann::ordered_json out;
  out["name"] = meta.name;
  out["family"] = std::string(to_string(meta.family));
  if (meta.n) out["n"] = *meta.n;
  if (meta.k) out["k"] = *meta.k;
  if (meta.policy) out["policy"] = std::string(to_string(*meta.policy));
  if (meta.removed_labels) out["labels"] = *meta.removed_labels;
  return out;
}

}  // namespace detail

inline std::string write_hcp_tsplib(const UndirectedGraph& g, const InstanceMetadata& meta) {
  std::ostringstream out;
  out << "NAME : " << meta.name << '\n';
  out << "COMMENT :";
  for (const auto& [key, value] : detail::metadata_fields(meta)) out << ' ' << key << '=' << value;
  out << '\n';
  out << "TYPE : HCP\n";
  out << "DIMENSION : " << g.order() << '\n';
  out << "EDGE_DATA_FORMAT : EDGE_LIST\n";
  out << "EDGE_DATA_SECTION\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  out << "-1\nEOF\n";
  return out.str();
}

inline std::string write_directed_arclist(const DirectedGraph& g, const InstanceMetadata& meta) {
  std::ostringstream out;
  out << "p dhc " << g.order() << ' ' << g.arc_count() << '\n';
  out << "c name=" << meta.name << '\n';
  for (const auto& [key, value] : detail::metadata_fields(meta)) out << "c " << key << '=' << value << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.from << ' ' << a.to << '\n';
  return out.str();
}

// {"directed": bool, "order": int, "arcs" | "edges": [[u, v], ...], "meta": {...}}
inline std::string write_json(const std::variant<DirectedGraph, UndirectedGraph>& graph, const InstanceMetadata& meta) {
  nlohmann::ordered_json doc;
  if (const auto* g = std::get_if<DirectedGraph>(&graph)) {
    doc["directed"] = true;
    doc["order"] = g->order();
    auto& arcs = doc["arcs"] = nlohmann::ordered_json::array();
    for (const Arc& a : g->arcs()) arcs.push_back({a.from, a.to});
  } else {
    const auto& u = std::get<UndirectedGraph>(graph);
    doc["directed"] = false;
    doc["order"] = u.order();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : u.edges()) edges.push_back({e.u, e.v});
  }
  doc["meta"] = detail::metadata_json(meta);
  return doc.dump() + "\n";
}

inline Format detect_format(std::string_view text) {
  for (auto line : detail::split_lines(text)) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0].starts_with("{")) return Format::Json;
    if (tokens[0] == "p") return Format::Dhc;
    if (tokens[0] == "NAME" || tokens[0].starts_with("NAME:")) return Format::Tsplib;
    break;
  }
  throw ParseError(1, "unrecognised instance format");
}

inline ParsedInstance parse(std::string_view text, Format hint = Format::Auto) {
  const Format format = hint == Format::Auto ? detect_format(text) : hint;
  switch (format) {
    case Format::Tsplib: return detail::parse_tsplib(text);
    case Format::Dhc: return detail::parse_dhc(text);
    case Format::Json: return detail::parse_json(text);
    case Format::Auto: break;
  }
  throw ParseError(1, "unrecognised instance format");
}

}  // namespace broken_crown
