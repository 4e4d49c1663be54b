// Builds the B(11,6) instance with outgoing labels 2, 5, 7, 8, 9 removed,
// checks it, and prints the undirected TSPLIB version.

#include <iostream>

#include "broken_crown/broken_crown.hpp"

int main() {
  using namespace broken_crown;

  BrokenCrownSpec spec;
  spec.n = 11;
  spec.k = 6;
  spec.removed_labels = {2, 5, 7, 8, 9};
  const BrokenCrown bc = build_broken_crown(spec);

  const CycleReport report = count_hc_directed(bc.graph, std::nullopt, true);
  const LabelAnalysis labels = analyze_labels(report, bc.attachment, bc.hub);
  std::cerr << "order " << bc.graph.order() << ", " << report.count << " Hamiltonian cycles, labels "
            << (labels.holds() ? "consistent" : "INCONSISTENT") << '\n';

  const KarpImage image = to_undirected_karp(bc.graph);
  InstanceMetadata meta{"broken_crown_n11_k6", Family::Converted, 11, 6, RemovalPolicy::OutgoingOnly,
                        spec.removed_labels, false};
  std::cout << write_hcp_tsplib(image.graph, meta);
  return labels.holds() && report.count == 6 ? 0 : 1;
}
