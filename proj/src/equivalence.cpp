#include "cellnet/equivalence.hpp"

#include <algorithm>
#include <optional>

#include "cellnet/functional_graph.hpp"

namespace cellnet {

SpanForm identity_augmented_span(const Network& net) {
  std::size_t n = static_cast<std::size_t>(net.n());
  SpanForm f(n * n);
  f.add(vectorize(ExactMatrix::identity(n)));
  for (const InputMap& sigma : net.inputs()) f.add(vectorize(sigma.matrix()));
  return f;
}

bool is_minimal(const Network& net) {
  return identity_augmented_span(net).rank() ==
         static_cast<std::size_t>(net.k()) + 1;
}

Network reduce_to_minimal(const Network& net) {
  std::size_t n = static_cast<std::size_t>(net.n());
  SpanForm f(n * n);
  f.add(vectorize(ExactMatrix::identity(n)));
  std::vector<InputMap> kept;
  for (const InputMap& sigma : net.inputs()) {
    std::vector<Rational> v = vectorize(sigma.matrix());
    if (!f.contains(v)) {
      f.add(std::move(v));
      kept.push_back(sigma);
    }
  }
  return Network(net.n(), std::move(kept), net.label());
}

bool linearly_equivalent_fixed(const Network& a, const Network& b) {
  if (a.n() != b.n())
    throw SizeMismatch("fixed-label comparison needs equal cell counts");
  return identity_augmented_span(a) == identity_augmented_span(b);
}

namespace {

// All input maps whose adjacency matrix lies in the given span.  This set is
// determined by the span alone, so a relabeling carrying one span to another
// must carry one set to the other — the basis of the pruning below.
std::vector<InputMap> span_valency_maps(const SpanForm& f, int n) {
  std::vector<InputMap> out;
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  for (;;) {
    InputMap sigma(n, t);
    if (f.contains(vectorize(sigma.matrix()))) out.push_back(sigma);
    int p = 0;
    while (p < n && t[static_cast<std::size_t>(p)] == n)
      t[static_cast<std::size_t>(p++)] = 1;
    if (p == n) break;
    ++t[static_cast<std::size_t>(p)];
  }
  return out;
}

// Per-cell signature over a set of maps: for each map, a relabeling-invariant
// description of the map paired with the cell's position in it.  A candidate
// bijection may only send cell i of network a to cells of network b with an
// identical signature.
std::vector<std::vector<std::string>> cell_signatures(
    const std::vector<InputMap>& maps, int n) {
  std::vector<std::vector<std::string>> sig(static_cast<std::size_t>(n));
  for (const InputMap& sigma : maps) {
    FunctionalGraph fg(sigma);
    std::vector<std::pair<int, int>> shape;  // (cycle length, component size)
    for (std::size_t c = 0; c < fg.cycles.size(); ++c)
      shape.emplace_back(static_cast<int>(fg.cycles[c].size()),
                         fg.comp_size[c]);
    std::sort(shape.begin(), shape.end());
    std::string inv;
    for (auto [cl, cs] : shape)
      inv += std::to_string(cl) + "." + std::to_string(cs) + ";";
    for (int i = 1; i <= n; ++i) {
      std::size_t ix = static_cast<std::size_t>(i - 1);
      int c = fg.comp[ix];
      std::string fact = inv + "#" + (sigma(i) == i ? "L" : "-") +
                         (fg.on_cycle[ix] ? "C" : "-") +
                         std::to_string(fg.cycles[static_cast<std::size_t>(c)]
                                            .size()) +
                         "," + std::to_string(fg.depth[ix]) + "," +
                         std::to_string(fg.indeg[ix]) + "," +
                         std::to_string(fg.comp_size[static_cast<std::size_t>(c)]);
      sig[ix].push_back(std::move(fact));
    }
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

}  // namespace

bool ode_equivalent(const Network& a, const Network& b) {
  if (a.n() != b.n()) return false;
  const int n = a.n();
  Network ra = reduce_to_minimal(a);
  Network rb = reduce_to_minimal(b);
  SpanForm fa = identity_augmented_span(ra);
  SpanForm fb = identity_augmented_span(rb);
  if (fa.rank() != fb.rank()) return false;
  if (fa == fb) return true;  // identity relabeling already works

  // Span-derived pruning: worthwhile while n^n stays tiny.
  std::optional<std::vector<std::vector<bool>>> compat;
  if (n <= 4) {
    std::vector<InputMap> wa = span_valency_maps(fa, n);
    std::vector<InputMap> wb = span_valency_maps(fb, n);
    if (wa.size() != wb.size()) return false;
    auto siga = cell_signatures(wa, n);
    auto sigb = cell_signatures(wb, n);
    compat.emplace(static_cast<std::size_t>(n),
                   std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
      bool any = false;
      for (int j = 0; j < n; ++j) {
        bool ok = siga[static_cast<std::size_t>(i)] ==
                  sigb[static_cast<std::size_t>(j)];
        (*compat)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ok;
        any = any || ok;
      }
      if (!any) return false;
    }
  }

  for (const Permutation& pi : all_permutations(n)) {
    if (compat) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        ok = (*compat)[static_cast<std::size_t>(i - 1)]
                      [static_cast<std::size_t>(pi(i) - 1)];
      if (!ok) continue;
    }
    if (identity_augmented_span(relabel(ra, pi)) == fb) return true;
  }
  return false;
}

OdeClassKey class_key(const Network& net) {
  const int n = net.n();
  std::optional<std::vector<std::vector<int>>> best;
  for (const Permutation& pi : all_permutations(n)) {
    Network red = reduce_to_minimal(relabel(net, pi));
    std::vector<std::vector<int>> maps;
    maps.reserve(red.inputs().size());
    for (const InputMap& sigma : red.inputs()) maps.push_back(sigma.targets());
    std::sort(maps.begin(), maps.end());
    if (!best || maps < *best) best = std::move(maps);
  }
  std::vector<InputMap> inputs;
  for (const std::vector<int>& t : *best) inputs.emplace_back(n, t);
  Network rep(n, std::move(inputs), net.label());
  SpanForm span = identity_augmented_span(rep);
  return OdeClassKey(std::move(rep), std::move(span));
}

}  // namespace cellnet
