#pragma once

// Command-line front end shared by the bcgraph tool and its tests.
//
//   gen crown   --n N [--out FILE] [--format dhc|json]
//   gen broken  --n N --k K [--remove outgoing|incoming|both] [--labels L1,L2,...]
//               [--contract] [--hub-path M] [--out FILE] [--format dhc|json]
//   gen wheel   --n N [--spokes S1,S2,...] [--out FILE] [--format hcp|json]
//   gen gp2     --n N [--out FILE] [--format hcp|json]
//   convert     [--in FILE] [--out FILE]
//   count       [--in FILE] [--undirected] [--cap C] [--cycles]
//   verify      --n N --k K [construction flags] [--in FILE]
//
// Exit codes: 0 success, 1 verification failure or unusable input, 2 usage.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "broken_crown/construct.hpp"
#include "broken_crown/errors.hpp"
#include "broken_crown/formats.hpp"
#include "broken_crown/graph.hpp"
#include "broken_crown/hc_enum.hpp"
#include "broken_crown/transform.hpp"

namespace broken_crown::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

// Construction flags shared by `gen broken` and `verify`.
struct BrokenFlags {
  int n = 0;
  int k = 0;
  std::string remove = "outgoing";
  std::vector<int> labels;
  bool contract = false;
  int hub_path = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Crown parameter (n >= 4)")->required();
    cmd->add_option("--k", k, "Number of Hamiltonian cycles to keep (1 <= k <= n)")->required();
    cmd->add_option("--remove", remove, "Which label edges to delete")
        ->check(CLI::IsMember({"outgoing", "incoming", "both"}));
    cmd->add_option("--labels", labels, "Labels to remove (default: the n-k largest)")->delimiter(',');
    cmd->add_flag("--contract", contract, "Smooth degree-2 pairs left by outgoing removals");
    cmd->add_option("--hub-path", hub_path, "Replace the hub vertex by a directed path of M vertices");
  }

  BrokenCrownSpec spec() const {
    BrokenCrownSpec s;
    s.n = n;
    s.k = k;
    s.policy = *parse_policy(remove);
    s.removed_labels = labels.empty() && n >= k ? default_removed_labels(n, k) : labels;
    s.contract = contract;
    s.hub_length = hub_path;
    return s;
  }
};

namespace detail {

inline std::string broken_name(const BrokenCrownSpec& s) {
  std::string name = "broken_crown_n" + std::to_string(s.n) + "_k" + std::to_string(s.k) + "_" +
                     std::string(to_string(s.policy));
  if (s.contract) name += "_contracted";
  if (s.hub_length > 1) name += "_hub" + std::to_string(s.hub_length);
  return name;
}

inline InstanceMetadata broken_meta(const BrokenCrownSpec& s) {
  InstanceMetadata meta;
  meta.name = broken_name(s);
  meta.family = Family::BrokenCrown;
  meta.n = s.n;
  meta.k = s.k;
  meta.policy = s.policy;
  std::vector<Label> labels = s.removed_labels;
  std::sort(labels.begin(), labels.end());
  meta.removed_labels = labels;
  meta.directed = true;
  return meta;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

inline std::string format_pairs(const std::vector<LabelPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(p.incoming) + "," + std::to_string(p.outgoing) + ")";
  }
  return out;
}

inline std::string format_labels(const std::vector<Label>& labels) {
  return labels.empty() ? "-" : broken_crown::detail::join_labels(labels);
}

// Builds the reference instance, optionally swaps in a supplied graph, and
// checks arcs against the reference, the cycle count, and the label structure.
inline int run_verify(const BrokenFlags& flags, const std::string& input, Streams& io) {
  const BrokenCrownSpec spec = flags.spec();
  validate(spec);
  BrokenCrown built = build_broken_crown(spec);

  std::ostream& out = io.out;
  out << "verify n=" << spec.n << " k=" << spec.k << " policy=" << to_string(spec.policy)
      << " labels=" << format_labels(broken_meta(spec).removed_labels.value())
      << " contract=" << (spec.contract ? 1 : 0) << " hub=" << spec.hub_length << '\n';

  DirectedGraph graph = built.graph;
  if (!input.empty()) {
    ParsedInstance parsed = parse(read_input(input, io.in));
    if (!parsed.directed()) throw Error("verify needs a directed instance");
    graph = std::get<DirectedGraph>(parsed.graph);
    out << "instance " << input << '\n';
  }

  bool ok = true;
  if (graph.order() != built.graph.order()) {
    out << "FAIL order: expected " << built.graph.order() << ", got " << graph.order() << '\n';
    out << "FAIL\n";
    return kExitFailure;
  }
  out << "order " << graph.order() << " arcs " << graph.arc_count() << '\n';

  if (!input.empty()) {
    const auto want = built.graph.arcs();
    const auto got = graph.arcs();
    std::vector<Arc> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    const bool arcs_ok = missing.empty() && extra.empty();
    ok = ok && arcs_ok;
    out << (arcs_ok ? "ok" : "FAIL") << " arcs: " << missing.size() << " missing, " << extra.size() << " extra";
    if (!missing.empty()) out << ", first missing (" << missing[0].from << "," << missing[0].to << ")";
    if (!extra.empty()) out << ", first extra (" << extra[0].from << "," << extra[0].to << ")";
    out << '\n';
  }

  const CycleReport report = count_hc_directed(graph, std::nullopt, true);
  const bool count_ok = report.count == static_cast<std::uint64_t>(spec.k);
  ok = ok && count_ok;
  out << (count_ok ? "ok" : "FAIL") << " count: expected " << spec.k << ", got " << report.count << '\n';

  if (report.collection_capped) {
    out << "FAIL labels: too many cycles to analyse\n";
    ok = false;
  } else {
    try {
      const LabelAnalysis analysis = analyze_labels(report, built.attachment, built.hub);
      out << (analysis.holds() ? "ok" : "FAIL") << " labels: " << format_pairs(analysis.pairs)
          << (analysis.all_matched ? "" : " [mismatched]") << (analysis.all_distinct ? "" : " [repeated]") << '\n';
      ok = ok && analysis.holds();

      std::set<Label> removed(spec.removed_labels.begin(), spec.removed_labels.end());
      std::vector<Label> expected;
      for (Label i = 1; i <= spec.n; ++i) {
        if (!removed.contains(i)) expected.push_back(i);
      }
      std::vector<Label> surviving;
      for (const auto& p : analysis.pairs) surviving.push_back(p.incoming);
      std::sort(surviving.begin(), surviving.end());
      const bool survivors_ok = surviving == expected;
      ok = ok && survivors_ok;
      out << (survivors_ok ? "ok" : "FAIL") << " surviving labels: expected " << format_labels(expected)
          << ", got " << format_labels(surviving) << '\n';
    } catch (const PropertyViolation& e) {
      out << "FAIL labels: " << e.what() << '\n';
      ok = false;
    }
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

inline int run_count(const std::string& input, bool undirected, std::optional<std::uint64_t> cap, bool cycles,
                     Streams& io) {
  ParsedInstance parsed = parse(read_input(input, io.in));
  CycleReport report;
  if (auto* g = std::get_if<DirectedGraph>(&parsed.graph)) {
    report = undirected ? count_hc_undirected(underlying_undirected(*g), cap, cycles)
                        : count_hc_directed(*g, cap, cycles);
  } else {
    report = count_hc_undirected(std::get<UndirectedGraph>(parsed.graph), cap, cycles);
  }
  nlohmann::ordered_json doc;
  doc["count"] = report.count;
  if (cap || cycles) doc["truncated"] = report.truncated;
  if (cycles) {
    doc["cycles"] = report.cycles;
    doc["cycles_capped"] = report.collection_capped;
  }
  io.out << doc.dump() << '\n';
  return kExitOk;
}

inline int run_convert(const std::string& input, const std::string& output, Streams& io) {
  ParsedInstance parsed = parse(read_input(input, io.in));
  const auto* g = std::get_if<DirectedGraph>(&parsed.graph);
  if (!g) throw Error("convert needs a directed instance");
  KarpImage image = to_undirected_karp(*g);
  InstanceMetadata meta = parsed.meta;
  meta.name = (meta.name.empty() ? std::string("instance") : meta.name) + "_karp";
  meta.family = Family::Converted;
  meta.directed = false;
  emit(output, write_hcp_tsplib(image.graph, meta), io.out);
  return kExitOk;
}

inline void error_line(Streams& io, const std::string& message) {
  if (io.color) {
    io.err << "\x1b[31merror:\x1b[0m " << message << '\n';
  } else {
    io.err << "error: " << message << '\n';
  }
}

}  // namespace detail

// args excludes the program name.
inline int cli_main(std::vector<std::string> args, Streams io) {
  CLI::App app{"Broken crown graph generator and Hamiltonian cycle checker", "bcgraph"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate an instance")->require_subcommand(1);

  int crown_n = 0;
  std::string crown_out, crown_format = "dhc";
  auto* gen_crown = gen->add_subcommand("crown", "Crown subgraph on 5n-10 vertices");
  gen_crown->add_option("--n", crown_n, "Crown parameter (n >= 4)")->required();
  gen_crown->add_option("--out", crown_out, "Output file (default stdout)");
  gen_crown->add_option("--format", crown_format)->check(CLI::IsMember({"dhc", "json"}));

  BrokenFlags broken;
  std::string broken_out, broken_format = "dhc";
  auto* gen_broken = gen->add_subcommand("broken", "Broken crown graph with exactly k Hamiltonian cycles");
  broken.attach(gen_broken);
  gen_broken->add_option("--out", broken_out, "Output file (default stdout)");
  gen_broken->add_option("--format", broken_format)->check(CLI::IsMember({"dhc", "json"}));

  int wheel_n = 0;
  std::vector<int> spokes;
  std::string wheel_out, wheel_format = "hcp";
  auto* gen_wheel = gen->add_subcommand("wheel", "Wheel graph W_n");
  gen_wheel->add_option("--n", wheel_n, "Order (n >= 4)")->required();
  gen_wheel->add_option("--spokes", spokes, "Rim vertices keeping their spoke")->delimiter(',');
  gen_wheel->add_option("--out", wheel_out, "Output file (default stdout)");
  gen_wheel->add_option("--format", wheel_format)->check(CLI::IsMember({"hcp", "json"}));

  int gp_n = 0;
  std::string gp_out, gp_format = "hcp";
  auto* gen_gp2 = gen->add_subcommand("gp2", "Generalized Petersen graph GP(n,2)");
  gen_gp2->add_option("--n", gp_n, "Outer cycle length (n >= 5)")->required();
  gen_gp2->add_option("--out", gp_out, "Output file (default stdout)");
  gen_gp2->add_option("--format", gp_format)->check(CLI::IsMember({"hcp", "json"}));

  std::string convert_in = "-", convert_out;
  auto* convert = app.add_subcommand("convert", "Directed -> undirected conversion, TSPLIB output");
  convert->add_option("--in", convert_in, "Directed instance (default stdin)");
  convert->add_option("--out", convert_out, "Output file (default stdout)");

  std::string count_in = "-";
  bool count_undirected = false, count_cycles = false;
  std::optional<std::uint64_t> count_cap;
  auto* count = app.add_subcommand("count", "Count Hamiltonian cycles, JSON on stdout");
  count->add_option("--in", count_in, "Instance file (default stdin)");
  count->add_flag("--undirected", count_undirected, "Count on the orientation-blind graph");
  count->add_option("--cap", count_cap, "Stop after this many cycles");
  count->add_flag("--cycles", count_cycles, "Include the cycles in the output");

  BrokenFlags verify_flags;
  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Build a broken crown and check its cycles");
  verify_flags.attach(verify);
  verify->add_option("--in", verify_in, "Check this instance instead of the built one");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    detail::error_line(io, e.what());
    return kExitUsage;
  }

  try {
    if (gen_crown->parsed()) {
      Crown crown = build_crown(crown_n);
      InstanceMetadata meta{"crown_n" + std::to_string(crown_n), Family::Crown, crown_n, {}, {}, {}, true};
      detail::emit(crown_out,
                   crown_format == "json" ? write_json(crown.graph, meta) : write_directed_arclist(crown.graph, meta),
                   io.out);
      return kExitOk;
    }
    if (gen_broken->parsed()) {
      const BrokenCrownSpec spec = broken.spec();
      BrokenCrown built = build_broken_crown(spec);
      const InstanceMetadata meta = detail::broken_meta(spec);
      detail::emit(broken_out,
                   broken_format == "json" ? write_json(built.graph, meta) : write_directed_arclist(built.graph, meta),
                   io.out);
      return kExitOk;
    }
    if (gen_wheel->parsed()) {
      std::optional<std::vector<VertexId>> kept;
      std::string name = "wheel_n" + std::to_string(wheel_n);
      if (!spokes.empty()) {
        kept = spokes;
        name += "_spokes" + std::to_string(spokes.size());
      }
      UndirectedGraph g = build_wheel(wheel_n, kept);
      InstanceMetadata meta{name, Family::Wheel, wheel_n, {}, {}, {}, false};
      detail::emit(wheel_out, wheel_format == "json" ? write_json(g, meta) : write_hcp_tsplib(g, meta), io.out);
      return kExitOk;
    }
    if (gen_gp2->parsed()) {
      UndirectedGraph g = build_gp2(gp_n);
      InstanceMetadata meta{"gp2_n" + std::to_string(gp_n), Family::Gp2, gp_n, {}, {}, {}, false};
      detail::emit(gp_out, gp_format == "json" ? write_json(g, meta) : write_hcp_tsplib(g, meta), io.out);
      return kExitOk;
    }
    if (convert->parsed()) return detail::run_convert(convert_in, convert_out, io);
    if (count->parsed()) return detail::run_count(count_in, count_undirected, count_cap, count_cycles, io);
    if (verify->parsed()) return detail::run_verify(verify_flags, verify_in, io);
  } catch (const InvalidParameter& e) {
    detail::error_line(io, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    detail::error_line(io, e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace broken_crown::cli
