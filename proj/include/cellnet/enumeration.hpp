#pragma once

// Exhaustive generation of one-input networks and their combinations, with
// deduplication into ODE-classes.  Desk scale only: the guards keep every
// run interactive.

#include <vector>

#include "cellnet/network.hpp"

namespace cellnet {

struct EnumerateOptions {
  bool exclude_identity = false;
  bool connected_only = false;
};

// All n^n one-input networks in lexicographic target order, filtered.
std::vector<Network> enumerate_one_input(int n, EnumerateOptions opts = {});

// One canonical representative per ODE-class (= conjugacy class) of
// non-identity one-input networks; sorted by class digest.  n <= 5 guarded.
std::vector<Network> one_input_classes(int n, bool connected_only = false);

// Canonical representatives of the ODE-classes of minimal n-cell networks
// with k distinct one-input types (optionally connected only), sorted by
// class digest.  Representatives are minimal with sorted inputs.  Guarded at
// n <= 3, k <= 3.  `jobs` = worker threads (0 = hardware default); the
// result does not depend on it.
std::vector<Network> minimal_class_catalog(int n, int k,
                                           bool connected_only = false,
                                           unsigned jobs = 0);

// Number of k-input union networks (k distinct non-identity one-input types)
// counted the way a family-by-family tally proceeds: pin the first type to
// its conjugacy-class representative via a relabeling, then count the
// residual choices for the second type.  Equivalently, pairs whose types lie
// in different conjugacy classes are identified under relabeling and type
// interchange, while same-class pairs are identified under relabeling only.
// This is the bookkeeping figure sitting between raw pair counting and
// ODE-class counting.  (Closing same-class pairs under interchange as well
// merges three further pairs at n = 3; see the enumeration tests, which pin
// all three variants.)  n <= 3, k in {1,2}.
long intermediate_isomorphism_count(int n, int k);

}  // namespace cellnet
