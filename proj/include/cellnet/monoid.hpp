#pragma once

// Symmetry monoids.  The input maps of a network generate, under
// composition together with the identity map, a finite monoid; its
// multiplication table and the associated fundamental network (input type j
// acting by left composition with generator j) are computed here.

#include <string>
#include <vector>

#include "cellnet/network.hpp"

namespace cellnet {

// Multiplication table of a composition-closed set of input maps.
// Elements are 1-based; element 1 is the identity map; table(i,j) is the
// index of elements[i] o elements[j] (j applied first).
class MonoidTable {
 public:
  MonoidTable(std::vector<InputMap> elements,
              std::vector<std::vector<int>> table,
              std::vector<int> generator_indices);

  int size() const { return static_cast<int>(elements_.size()); }
  const InputMap& element(int i) const;  // 1-based
  int product(int i, int j) const;       // 1-based index of e_i o e_j
  const std::vector<std::vector<int>>& table() const { return table_; }
  // One entry per generating map handed to closure(), pointing at its
  // element index (duplicated generators share an index).
  const std::vector<int>& generator_indices() const {
    return generator_indices_;
  }

 private:
  std::vector<InputMap> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> generator_indices_;
};

// Smallest composition-closed superset of {identity} ∪ maps, with its table.
// Elements appear in deterministic discovery order (identity, the distinct
// generators, then products).
MonoidTable closure(const std::vector<InputMap>& maps);

// True iff the closure of the network's input maps has exactly 3 elements
// (for a 2-input network: {id, sigma_1, sigma_2} already closed).
bool has_three_element_monoid(const Network& net);

// True iff some identity-preserving bijection of elements transports one
// table to the other.  Brute force over (m-1)! bijections; m <= 8 guarded.
bool monoid_isomorphic(const MonoidTable& a, const MonoidTable& b);

// Lexicographically least table over identity-preserving element
// relabelings; equal canonical tables <=> isomorphic.  m <= 8 guarded.
std::vector<std::vector<int>> canonical_table(const MonoidTable& t);

// Network on the monoid's elements: input j sends element-cell i to the
// product gen_j o e_i, i.e. row gen_j of the table.
Network fundamental_network(const MonoidTable& t,
                            const std::vector<int>& generators);

// True iff net is isomorphic — via a cell bijection matching input type j to
// generator j — to the fundamental network of its own symmetry monoid.
bool is_fundamental(const Network& net);

// Pretty-printed table in row/column layout with elements named s0..s_{m-1}.
std::string print_table(const MonoidTable& t);

}  // namespace cellnet
