#include <gtest/gtest.h>

#include <sstream>

#include "broken_crown/cli.hpp"

using namespace broken_crown;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::cli_main(std::move(args), {in, out, err, false});
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GenBrokenPipesIntoCount) {
  const CliRun gen = run({"gen", "broken", "--n", "4", "--k", "4"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  EXPECT_TRUE(gen.out.starts_with("p dhc 11 30\n"));
  const CliRun count = run({"count"}, gen.out);
  ASSERT_EQ(count.code, 0) << count.err;
  EXPECT_EQ(nlohmann::json::parse(count.out)["count"], 4);
}

TEST(Cli, GenBrokenDefaultsToLargestLabelsOutgoing) {
  const CliRun gen = run({"gen", "broken", "--n", "7", "--k", "4"});
  ASSERT_EQ(gen.code, 0);
  const ParsedInstance parsed = parse(gen.out);
  EXPECT_EQ(parsed.meta.removed_labels, (std::vector<Label>{5, 6, 7}));
  EXPECT_EQ(parsed.meta.policy, RemovalPolicy::OutgoingOnly);
  EXPECT_EQ(parsed.meta.name, "broken_crown_n7_k4_outgoing");
}

TEST(Cli, VerifyFigureInstance) {
  const CliRun r = run({"verify", "--n", "11", "--k", "6", "--labels", "2,5,7,8,9"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("surviving labels: expected 1,3,4,6,10,11, got 1,3,4,6,10,11"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "11", "--k", "6", "--labels", "2,5,7,8,9", "--contract"}).code, 0);
  EXPECT_EQ(run({"verify", "--n", "6", "--k", "3", "--remove", "both", "--hub-path", "3"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--n", "5", "--k", "7"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "6", "--k", "4", "--labels", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "broken", "--n", "6", "--k", "4", "--remove", "sideways"}).code, 2);
  EXPECT_EQ(run({"gen", "crown"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "gp2", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyCatchesDeletedChord) {
  const CliRun gen = run({"gen", "broken", "--n", "6", "--k", "5"});
  ASSERT_EQ(gen.code, 0);
  ParsedInstance parsed = parse(gen.out);
  DirectedGraph g = std::get<DirectedGraph>(parsed.graph);
  const std::vector<Arc> chord{{2 * 6, 2 * 6 - 2}};
  const std::string mutated = write_directed_arclist(remove_arcs(g, chord), parsed.meta);

  const CliRun intact = run({"verify", "--n", "6", "--k", "5", "--in", "-"}, gen.out);
  EXPECT_EQ(intact.code, 0) << intact.out;
  const CliRun broken = run({"verify", "--n", "6", "--k", "5", "--in", "-"}, mutated);
  EXPECT_EQ(broken.code, 1) << broken.out;
  EXPECT_NE(broken.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ConvertAndCountUndirected) {
  const CliRun gen = run({"gen", "broken", "--n", "5", "--k", "3", "--remove", "both"});
  const CliRun conv = run({"convert"}, gen.out);
  ASSERT_EQ(conv.code, 0) << conv.err;
  EXPECT_TRUE(conv.out.starts_with("NAME : broken_crown_n5_k3_both_karp\n"));
  EXPECT_NE(conv.out.find("DIMENSION : 48\n"), std::string::npos);
  const CliRun count = run({"count"}, conv.out);
  EXPECT_EQ(nlohmann::json::parse(count.out)["count"], 3);
  EXPECT_EQ(run({"convert"}, conv.out).code, 1);  // already undirected
}

TEST(Cli, CountCyclesAndCap) {
  const CliRun wheel = run({"gen", "wheel", "--n", "9"});
  ASSERT_EQ(wheel.code, 0);
  const auto full = nlohmann::json::parse(run({"count", "--cycles"}, wheel.out).out);
  EXPECT_EQ(full["count"], 8);
  EXPECT_EQ(full["cycles"].size(), 8u);
  EXPECT_EQ(full["truncated"], false);
  const auto capped = nlohmann::json::parse(run({"count", "--cap", "3"}, wheel.out).out);
  EXPECT_EQ(capped["count"], 3);
  EXPECT_EQ(capped["truncated"], true);

  const CliRun spokes = run({"gen", "wheel", "--n", "9", "--spokes", "1,2,3"});
  EXPECT_EQ(nlohmann::json::parse(run({"count"}, spokes.out).out)["count"], 2);
  const CliRun gp = run({"gen", "gp2", "--n", "7", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(run({"count"}, gp.out).out)["count"], 7);

  // Orientation-blind count; chords pin the crown to its outer cycle.
  const CliRun crown = run({"gen", "crown", "--n", "4"});
  EXPECT_EQ(crown.code, 0);
  const auto blind = nlohmann::json::parse(run({"count", "--undirected"}, crown.out).out);
  EXPECT_EQ(blind["count"], 1);
}

TEST(Cli, BadInputFileExitsOne) {
  EXPECT_EQ(run({"count", "--in", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"count"}, "garbage\n").code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run({"gen", "broken", "--n", "9", "--k", "5", "--contract"}).out,
            run({"gen", "broken", "--n", "9", "--k", "5", "--contract"}).out);
}

TEST(Cli, VerifyCatchesChordThatKeepsTheCount) {
  // Dropping (14,12) from B(7,5) leaves five cycles; only the arc comparison sees it.
  const CliRun gen = run({"gen", "broken", "--n", "7", "--k", "5"});
  ParsedInstance parsed = parse(gen.out);
  const std::vector<Arc> chord{{14, 12}};
  const DirectedGraph cut = remove_arcs(std::get<DirectedGraph>(parsed.graph), chord);
  EXPECT_EQ(count_hc_directed(cut).count, 5u);
  const CliRun r = run({"verify", "--n", "7", "--k", "5", "--in", "-"}, write_directed_arclist(cut, parsed.meta));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL arcs: 1 missing, 0 extra, first missing (14,12)"), std::string::npos) << r.out;
}
