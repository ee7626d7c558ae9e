#pragma once

// Structure of the directed graph of a single input map: every weakly
// connected component contains exactly one cycle, with trees flowing into it.
// Edges run sigma(i) -> i, so following an edge means applying the *inverse*
// of sigma; iterating sigma walks backward along edges.

#include <vector>

#include "cellnet/network.hpp"

namespace cellnet {

struct FunctionalGraph {
  explicit FunctionalGraph(const InputMap& sigma);

  int n;
  // All indexed by cell-1.
  std::vector<int> comp;       // component index (0-based, in cycle order below)
  std::vector<bool> on_cycle;
  std::vector<int> depth;      // 0 on the cycle, else tree distance to it
  std::vector<int> indeg;      // number of cells j with sigma(j) == i
  // Per component: its cycle, cells listed in edge direction starting from
  // the smallest cell label on the cycle; and the component's cell count.
  std::vector<std::vector<int>> cycles;
  std::vector<int> comp_size;
};

}  // namespace cellnet
