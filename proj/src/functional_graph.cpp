#include "cellnet/functional_graph.hpp"

#include <algorithm>

namespace cellnet {

FunctionalGraph::FunctionalGraph(const InputMap& sigma) : n(sigma.n()) {
  auto idx = [](int cell) { return static_cast<std::size_t>(cell - 1); };
  comp.assign(static_cast<std::size_t>(n), -1);
  on_cycle.assign(static_cast<std::size_t>(n), false);
  depth.assign(static_cast<std::size_t>(n), 0);
  indeg.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) ++indeg[idx(sigma(i))];

  // Mark cycle cells: iterate sigma with three-colour visiting.
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new 1 open 2 done
  for (int s = 1; s <= n; ++s) {
    if (state[idx(s)] != 0) continue;
    std::vector<int> path;
    int v = s;
    while (state[idx(v)] == 0) {
      state[idx(v)] = 1;
      path.push_back(v);
      v = sigma(v);
    }
    if (state[idx(v)] == 1) {
      // Found a new cycle: the tail of `path` from v onward.
      auto it = std::find(path.begin(), path.end(), v);
      for (auto p = it; p != path.end(); ++p) on_cycle[idx(*p)] = true;
    }
    for (int c : path) state[idx(c)] = 2;
  }

  // Assemble each cycle in edge direction (edge successor of c is the unique
  // cycle cell mapping to c) starting from its smallest cell.
  std::vector<int> cyc_succ(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    if (on_cycle[idx(i)]) cyc_succ[idx(sigma(i))] = i;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int s = 1; s <= n; ++s) {
    if (!on_cycle[idx(s)] || placed[idx(s)]) continue;
    std::vector<int> cyc;
    int v = s;
    do {
      cyc.push_back(v);
      placed[idx(v)] = true;
      v = cyc_succ[idx(v)];
    } while (v != s);
    int id = static_cast<int>(cycles.size());
    for (int c : cyc) comp[idx(c)] = id;
    cycles.push_back(std::move(cyc));
  }

  // Tree cells: component and depth via the unique walk into a cycle.
  for (int s = 1; s <= n; ++s) {
    if (comp[idx(s)] != -1) continue;
    std::vector<int> walk;
    int v = s;
    while (comp[idx(v)] == -1) {
      walk.push_back(v);
      v = sigma(v);
    }
    int id = comp[idx(v)];
    int d = depth[idx(v)];
    for (auto p = walk.rbegin(); p != walk.rend(); ++p) {
      comp[idx(*p)] = id;
      depth[idx(*p)] = ++d;
    }
  }

  comp_size.assign(cycles.size(), 0);
  for (int i = 1; i <= n; ++i) ++comp_size[static_cast<std::size_t>(comp[idx(i)])];
}

}  // namespace cellnet
