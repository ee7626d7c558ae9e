#pragma once

// Shared builders and frozen small-case data for the test suite.

#include <string>
#include <vector>

#include "cellnet/network.hpp"

namespace testutil {

inline cellnet::Network net1(const std::vector<int>& targets,
                             std::string label = "") {
  std::vector<cellnet::InputMap> in;
  in.emplace_back(static_cast<int>(targets.size()), targets);
  return cellnet::Network(static_cast<int>(targets.size()), std::move(in),
                          std::move(label));
}

inline cellnet::Network netk(const std::vector<std::vector<int>>& lists,
                             std::string label = "") {
  std::vector<cellnet::InputMap> in;
  for (const auto& t : lists)
    in.emplace_back(static_cast<int>(t.size()), t);
  return cellnet::Network(static_cast<int>(lists.front().size()),
                          std::move(in), std::move(label));
}

// The six conjugacy classes of non-identity self-maps of {1,2,3}, one
// representative each: the 3-cycle, a transposition with a fixed point, a
// constant map, and the three shapes with one 2-element structure (chain
// into a loop, two loops with a tail, a 2-cycle with a tail).
inline std::vector<std::vector<int>> class_reps_3() {
  return {{3, 1, 2}, {1, 3, 2}, {1, 1, 1},
          {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
}

// All 26 non-identity self-maps of {1,2,3}, grouped by conjugacy class in
// the order of class_reps_3(); each group starts with the representative.
inline std::vector<std::vector<std::vector<int>>> class_members_3() {
  return {
      {{3, 1, 2}, {2, 3, 1}},
      {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}},
      {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}},
      {{1, 1, 2}, {1, 3, 1}, {3, 2, 2}, {2, 2, 1}, {3, 1, 3}, {2, 3, 3}},
      {{1, 2, 1}, {3, 2, 3}, {1, 2, 2}, {1, 3, 3}, {2, 2, 3}, {1, 1, 3}},
      {{2, 1, 1}, {2, 1, 2}, {2, 3, 2}, {3, 3, 2}, {3, 3, 1}, {3, 1, 1}},
  };
}

// The seven multiplication tables of three-element monoids, up to
// isomorphism, with element 1 the identity.  Row i / column j holds the
// index of e_i * e_j.
inline std::vector<std::vector<std::vector<int>>> monoid_tables_3() {
  return {
      {{1, 2, 3}, {2, 2, 2}, {3, 2, 2}},
      {{1, 2, 3}, {2, 2, 3}, {3, 3, 2}},
      {{1, 2, 3}, {2, 2, 2}, {3, 2, 3}},
      {{1, 2, 3}, {2, 2, 2}, {3, 3, 3}},
      {{1, 2, 3}, {2, 2, 3}, {3, 2, 3}},
      {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}},
      {{1, 2, 3}, {2, 2, 2}, {3, 2, 1}},
  };
}

// Expected 4-cell classes from growing each 3-cell class representative by
// one cycle cell, listed in the order of class_reps_3().
inline std::vector<std::vector<int>> grown_4cell_reps() {
  return {{4, 1, 2, 3}, {1, 4, 2, 3}, {4, 1, 1, 1},
          {4, 1, 2, 1}, {4, 2, 1, 1}, {4, 1, 2, 2}};
}

// Expected classes of the six 4-cell feed-forward extensions (chain of 3
// plus one cell, chain of 2 plus two cells).
inline std::vector<std::vector<int>> feed_forward_4cell_reps() {
  return {{1, 1, 2, 3}, {1, 1, 2, 2}, {1, 1, 2, 1},
          {1, 1, 2, 4}, {1, 1, 1, 1}, {1, 1, 3, 4}};
}

}  // namespace testutil
