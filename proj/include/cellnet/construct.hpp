#pragma once

// Explicit constructions: a basis of the space spanned by all valency-one
// matrices (dimension n(n-1)+1), feed-forward one-input families, the
// n(n-1)-input universal representative, and two ways to grow one-input
// networks by a cell while preserving pairwise ODE-distinctness.

#include <vector>

#include "cellnet/network.hpp"

namespace cellnet {

// n(n-1)+1 one-input networks whose adjacency matrices are linearly
// independent and span the space generated by all valency-one matrices.
// Pattern: {sigma(1)=c, others -> n : c=1..n} then {sigma(i)=c, others -> n :
// i=2..n, c=1..n-1}.
std::vector<Network> valency_one_basis(int n);

// Rank of the span of all n^n valency-one matrices; equals n(n-1)+1.
// Exhaustive, guarded at n <= 5.
int full_span_dimension(int n);

// Feed-forward one-input networks F_1..F_{n-1}: cell 1 has the self-loop,
// F_i has i layers — sigma(1)=1, sigma(j)=1 for j=2..n-i+1, sigma(j)=j-1 for
// j=n-i+2..n.
std::vector<Network> feed_forward_family(int n);

// Union of the n cyclic relabelings of every F_i: a minimal network with
// n(n-1) inputs; every minimal network with that many inputs is
// ODE-equivalent to it.  Input order: F_1 orbit (rotation powers 0..n-1),
// then F_2 orbit, etc.
Network universal_representative(int n);

// Grows a one-input n-cell network to n+1 cells by inserting a new cell into
// its largest cycle (cycle 1->...->k->1 becomes 1->...->k+1->1 after the
// canonical renumbering that puts the cycle first).  Distinct input classes
// give distinct output classes.  The largest cycle must be unique; a tie on
// length is broken toward the cycle with the largest weak component, and
// AmbiguousLargestCycle is raised only if that also ties.
Network algorithm1(const Network& net);

// 2(n-1) feed-forward networks on n cells, pairwise ODE-distinct: the
// (n-1)-cell full chain extended by one cell (attached to each cell in turn,
// or isolated with a self-loop), plus the (n-2)-cell full chain extended by
// two cells (both attached to a common non-terminal cell, or both isolated).
// Defined for n >= 4.
std::vector<Network> algorithm2(int n);

// n(n-1) pairwise ODE-distinct one-input n-cell networks: explicit class
// representatives for n = 2, 3; for n >= 4, algorithm1 applied to the
// previous family concatenated with algorithm2(n).
std::vector<Network> lower_bound_family(int n);

}  // namespace cellnet
