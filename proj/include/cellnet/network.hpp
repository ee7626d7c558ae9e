#pragma once

// Networks with asymmetric inputs.  Cells are numbered 1..n.  One input type
// is a total map sigma: cells -> cells, where sigma(i) is the tail of the
// unique edge of that type whose head is cell i; its adjacency matrix has a
// single 1 per row, at (i, sigma(i)).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellnet/errors.hpp"
#include "cellnet/matrix.hpp"

namespace cellnet {

// One edge type: targets() holds sigma(1..n), 1-based values.
class InputMap {
 public:
  InputMap(int n, std::vector<int> targets);
  InputMap(std::initializer_list<int> targets)
      : InputMap(static_cast<int>(targets.size()),
                 std::vector<int>(targets)) {}

  int n() const { return n_; }
  // sigma(cell), 1-based in and out.
  int operator()(int cell) const { return targets_[cell - 1]; }
  const std::vector<int>& targets() const { return targets_; }

  bool is_identity() const;
  ExactMatrix matrix() const;  // n x n 0/1 adjacency, row i has 1 at sigma(i)

  // sigma o other (apply other first).
  InputMap compose(const InputMap& other) const;

  bool operator==(const InputMap& o) const {
    return n_ == o.n_ && targets_ == o.targets_;
  }
  bool operator!=(const InputMap& o) const { return !(*this == o); }
  bool operator<(const InputMap& o) const {
    return targets_ < o.targets_;  // only meaningful for equal n
  }

 private:
  int n_;
  std::vector<int> targets_;
};

// Bijection on {1..n}; image(cell) is 1-based.
class Permutation {
 public:
  Permutation(int n, std::vector<int> images);
  static Permutation identity(int n);
  // The cyclic rotation (1 2 ... n):  1->2, ..., n->1.
  static Permutation cycle(int n);

  int n() const { return n_; }
  int operator()(int cell) const { return images_[cell - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // this o other (apply other first).
  Permutation compose(const Permutation& other) const;
  ExactMatrix matrix() const;  // P with row i carrying 1 at column pi(i)

  bool operator==(const Permutation& o) const {
    return n_ == o.n_ && images_ == o.images_;
  }

 private:
  int n_;
  std::vector<int> images_;
};

// All n! permutations of {1..n} in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

class Network {
 public:
  Network(int n, std::vector<InputMap> inputs, std::string label = "");

  int n() const { return n_; }
  int k() const { return static_cast<int>(inputs_.size()); }
  const std::vector<InputMap>& inputs() const { return inputs_; }
  const InputMap& input(int type_index) const;  // 1-based type index
  const std::string& label() const { return label_; }
  Network with_label(std::string label) const;

  bool operator==(const Network& o) const {
    return n_ == o.n_ && inputs_ == o.inputs_;  // label is metadata
  }
  bool operator!=(const Network& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<InputMap> inputs_;
  std::string label_;
};

// Builds a Network from per-type edge lists of (head, tail) pairs.  Each type
// must supply exactly one edge per head cell.
Network network_from_edges(
    int n, const std::vector<std::vector<std::pair<int, int>>>& edge_lists);

// Adjacency matrix of one input type (1-based type index).
ExactMatrix adjacency(const Network& net, int type_index);

// All adjacency matrices, in input order.
MatrixFamily adjacency_family(const Network& net);

// Concatenates the input lists of networks on the same cell set.
Network union_nets(const std::vector<Network>& nets);

// Renames cells by pi: every input map sigma becomes pi o sigma o pi^-1;
// equivalently each adjacency A becomes P^-1 A P.
Network relabel(const Network& net, const Permutation& pi);

// Reachability over the union of all edge types.
bool is_connected(const Network& net);           // undirected paths
bool is_strongly_connected(const Network& net);  // directed paths both ways
// True iff some cell is reachable from every cell by a directed path.
bool is_backward_connected(const Network& net);

// Compact stable serialization, e.g. "3|1,1,2|3,1,3" — cell count, then each
// input's target list.  Used for canonical keys and golden files.
std::string digest(const Network& net);

}  // namespace cellnet
