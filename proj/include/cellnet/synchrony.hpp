#pragma once

// Balanced partitions (synchrony subspaces).  A cell partition is balanced
// for a network when every input map sends same-block cells to same-block
// cells; the corresponding polydiagonal {x_i = x_j whenever i,j share a
// block} is then flow-invariant for every admissible system.

#include <string>
#include <vector>

#include "cellnet/network.hpp"

namespace cellnet {

// Set partition of {1..n} as a restricted-growth string: block(1) = 1 and
// each later cell's block index exceeds the running maximum by at most one.
class CellPartition {
 public:
  CellPartition(int n, std::vector<int> assignment);

  int n() const { return n_; }
  int block_of(int cell) const { return assignment_[cell - 1]; }
  int block_count() const { return blocks_; }
  const std::vector<int>& assignment() const { return assignment_; }

  static CellPartition total(int n);       // one block
  static CellPartition singletons(int n);  // n blocks

  // Image partition under a relabeling: cell pi(i) joins the block i was in
  // (re-normalized to a restricted-growth string).
  CellPartition relabeled(const Permutation& pi) const;

  // Block notation, e.g. "{1,2|3}".
  std::string to_string() const;

  bool operator==(const CellPartition& o) const {
    return n_ == o.n_ && assignment_ == o.assignment_;
  }
  bool operator<(const CellPartition& o) const {
    return assignment_ < o.assignment_;
  }

 private:
  int n_;
  int blocks_;
  std::vector<int> assignment_;
};

// All partitions of {1..n} in lexicographic restricted-growth order.
std::vector<CellPartition> all_partitions(int n);

// Map-respecting criterion: every input map is constant on blocks after
// projecting to block indices.
bool is_balanced(const Network& net, const CellPartition& p);

// Independent matrix criterion: the polydiagonal of p is invariant under
// every adjacency matrix (A maps block-indicator vectors to block-constant
// vectors).  Kept as a separate code path to cross-validate is_balanced.
bool is_balanced_matrix_oracle(const Network& net, const CellPartition& p);

// All nontrivial balanced partitions: excludes all-singletons, includes the
// total partition; sorted lexicographically.  Guarded (Bell numbers) at
// n <= 12 by default.
std::vector<CellPartition> synchrony_partitions(const Network& net);

// Number of balanced 2-block partitions of a 3-cell network (0..3).
int count_2d_synchrony(const Network& net);

}  // namespace cellnet
