#pragma once

// Minimality and ODE-equivalence.  Two networks on the same cells define the
// same admissible ODEs iff span{Id, A_1, ..., A_k} coincide; allowing a cell
// bijection on top of that gives ODE-equivalence.  A network is minimal when
// Id plus its adjacency matrices are linearly independent.

#include <string>

#include "cellnet/network.hpp"
#include "cellnet/span.hpp"

namespace cellnet {

// Canonical form of span{Id_n, A_1, ..., A_k}.
SpanForm identity_augmented_span(const Network& net);

// True iff rank{Id, A_1..A_k} == k+1.
bool is_minimal(const Network& net);

// Greedy scan in input order keeping each map whose matrix lies outside the
// span of Id plus the maps kept so far.  Output is minimal and spans the same
// subspace as the input.
Network reduce_to_minimal(const Network& net);

// Span equality with the cell identification fixed (no relabeling).
bool linearly_equivalent_fixed(const Network& a, const Network& b);

// True iff some permutation pi has linearly_equivalent_fixed(relabel(a,pi), b).
// Candidate permutations are pruned by per-cell invariants derived from the
// span itself (sound and complete: every surviving candidate is verified by
// the exact span test; see tests for the brute-force cross-check).
bool ode_equivalent(const Network& a, const Network& b);

// Canonical per-class key: the representative is the reduced network with
// lexicographically least (sorted-inputs) serialization over all relabelings.
class OdeClassKey {
 public:
  OdeClassKey(Network representative, SpanForm canonical_span)
      : representative_(std::move(representative)),
        canonical_span_(std::move(canonical_span)) {}

  int n() const { return representative_.n(); }
  const Network& representative() const { return representative_; }
  const SpanForm& canonical_span() const { return canonical_span_; }
  // Stable text form for golden files and dedup maps.
  std::string digest() const { return cellnet::digest(representative_); }

  bool operator==(const OdeClassKey& o) const {
    return representative_ == o.representative_ &&
           canonical_span_ == o.canonical_span_;
  }
  bool operator!=(const OdeClassKey& o) const { return !(*this == o); }
  bool operator<(const OdeClassKey& o) const {
    return digest() < o.digest();
  }

 private:
  Network representative_;
  SpanForm canonical_span_;
};

OdeClassKey class_key(const Network& net);

}  // namespace cellnet
