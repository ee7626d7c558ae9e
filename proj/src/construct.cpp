#include "cellnet/construct.hpp"

#include <algorithm>
#include <string>

#include "cellnet/functional_graph.hpp"
#include "cellnet/guards.hpp"
#include "cellnet/span.hpp"

namespace cellnet {

namespace {

void require_at_least(int n, int min, const char* what) {
  if (n < min)
    throw SizeTooSmall(std::string(what) + " needs n >= " +
                       std::to_string(min) + ", got " + std::to_string(n));
}

Network one_input(int n, std::vector<int> targets) {
  std::vector<InputMap> in;
  in.emplace_back(n, std::move(targets));
  return Network(n, std::move(in));
}

}  // namespace

std::vector<Network> valency_one_basis(int n) {
  require_at_least(n, 2, "valency_one_basis");
  std::vector<Network> out;
  for (int c = 1; c <= n; ++c) {
    std::vector<int> t(static_cast<std::size_t>(n), n);
    t[0] = c;
    out.push_back(one_input(n, std::move(t)));
  }
  for (int i = 2; i <= n; ++i)
    for (int c = 1; c <= n - 1; ++c) {
      std::vector<int> t(static_cast<std::size_t>(n), n);
      t[static_cast<std::size_t>(i - 1)] = c;
      out.push_back(one_input(n, std::move(t)));
    }
  return out;
}

int full_span_dimension(int n) {
  require_at_least(n, 1, "full_span_dimension");
  require_cells_at_most(n, 5, "full_span_dimension");
  std::size_t nn = static_cast<std::size_t>(n);
  SpanForm f(nn * nn);
  std::vector<int> t(nn, 1);
  for (;;) {
    ExactMatrix m(nn, nn);
    for (std::size_t i = 0; i < nn; ++i)
      m.at(i, static_cast<std::size_t>(t[i] - 1)) = 1;
    f.add(vectorize(m));
    std::size_t p = 0;
    while (p < nn && t[p] == n) t[p++] = 1;
    if (p == nn) break;
    ++t[p];
  }
  return static_cast<int>(f.rank());
}

std::vector<Network> feed_forward_family(int n) {
  require_at_least(n, 2, "feed_forward_family");
  std::vector<Network> out;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      t[static_cast<std::size_t>(j - 1)] = (j <= n - i + 1) ? 1 : j - 1;
    out.push_back(one_input(n, std::move(t)));
  }
  return out;
}

Network universal_representative(int n) {
  require_at_least(n, 2, "universal_representative");
  Permutation rot = Permutation::cycle(n);
  std::vector<Network> pieces;
  for (const Network& f : feed_forward_family(n)) {
    Network g = f;
    for (int j = 0; j < n; ++j) {
      pieces.push_back(g);
      g = relabel(g, rot);
    }
  }
  return union_nets(pieces);
}

Network algorithm1(const Network& net) {
  if (net.k() != 1)
    throw NotOneInput("cycle extension consumes one-input networks; got k = " +
                      std::to_string(net.k()));
  const InputMap& sigma = net.input(1);
  const int n = net.n();
  FunctionalGraph fg(sigma);

  // Pick the largest cycle; break a length tie toward the biggest weak
  // component (the choice that keeps trees attached to the growing cycle).
  int best = -1;
  bool tie = false;
  for (std::size_t c = 0; c < fg.cycles.size(); ++c) {
    if (best < 0) {
      best = static_cast<int>(c);
      continue;
    }
    auto len = [&](int x) { return fg.cycles[static_cast<std::size_t>(x)].size(); };
    auto size = [&](int x) { return fg.comp_size[static_cast<std::size_t>(x)]; };
    int cc = static_cast<int>(c);
    if (len(cc) > len(best) ||
        (len(cc) == len(best) && size(cc) > size(best))) {
      best = cc;
      tie = false;
    } else if (len(cc) == len(best) && size(cc) == size(best)) {
      tie = true;
    }
  }
  if (tie)
    throw AmbiguousLargestCycle(
        "two cycles tie on both length and component size; no canonical "
        "extension");

  const std::vector<int>& cyc = fg.cycles[static_cast<std::size_t>(best)];
  const int k = static_cast<int>(cyc.size());

  // Renumber: cycle cells become 1..k in edge order (already starts at the
  // smallest label); remaining cells keep relative order as k+1..n.
  std::vector<int> to_new(static_cast<std::size_t>(n) + 1, 0);
  int next = 0;
  for (int c : cyc) to_new[static_cast<std::size_t>(c)] = ++next;
  for (int c = 1; c <= n; ++c)
    if (to_new[static_cast<std::size_t>(c)] == 0)
      to_new[static_cast<std::size_t>(c)] = ++next;
  std::vector<int> to_old(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 1; c <= n; ++c)
    to_old[static_cast<std::size_t>(to_new[static_cast<std::size_t>(c)])] = c;

  // Output on n+1 cells: new cell k+1 joins the cycle; a renumbered old cell
  // d > k becomes d+1, and its target shifts the same way unless it pointed
  // into the cycle.
  std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
  t[0] = k + 1;
  for (int j = 2; j <= k + 1; ++j) t[static_cast<std::size_t>(j - 1)] = j - 1;
  for (int d = k + 1; d <= n; ++d) {
    int old_target = sigma(to_old[static_cast<std::size_t>(d)]);
    int s = to_new[static_cast<std::size_t>(old_target)];
    t[static_cast<std::size_t>(d)] = (s <= k) ? s : s + 1;
  }
  return one_input(n + 1, std::move(t));
}

std::vector<Network> algorithm2(int n) {
  require_at_least(n, 4, "algorithm2");
  auto chain = [](int m) {
    // Full feed-forward chain on m cells: loop at 1, then 1->2->...->m.
    std::vector<int> t(static_cast<std::size_t>(m));
    t[0] = 1;
    for (int j = 2; j <= m; ++j) t[static_cast<std::size_t>(j - 1)] = j - 1;
    return t;
  };

  std::vector<Network> out;
  // (i) chain on n-1 cells plus one cell: attached to n-1, ..., 1, then
  // isolated with a self-loop.
  for (int c = n - 1; c >= 1; --c) {
    std::vector<int> t = chain(n - 1);
    t.push_back(c);
    out.push_back(one_input(n, std::move(t)));
  }
  {
    std::vector<int> t = chain(n - 1);
    t.push_back(n);
    out.push_back(one_input(n, std::move(t)));
  }
  // (ii) chain on n-2 cells plus two cells: both attached to a common cell
  // other than the chain's last, then both isolated.
  for (int c = n - 3; c >= 1; --c) {
    std::vector<int> t = chain(n - 2);
    t.push_back(c);
    t.push_back(c);
    out.push_back(one_input(n, std::move(t)));
  }
  {
    std::vector<int> t = chain(n - 2);
    t.push_back(n - 1);
    t.push_back(n);
    out.push_back(one_input(n, std::move(t)));
  }
  return out;
}

std::vector<Network> lower_bound_family(int n) {
  require_at_least(n, 2, "lower_bound_family");
  if (n == 2) return {one_input(2, {1, 1}), one_input(2, {2, 1})};
  if (n == 3)
    return {one_input(3, {3, 1, 2}), one_input(3, {1, 3, 2}),
            one_input(3, {1, 1, 1}), one_input(3, {1, 1, 2}),
            one_input(3, {1, 2, 1}), one_input(3, {2, 1, 1})};
  std::vector<Network> out;
  for (const Network& g : lower_bound_family(n - 1))
    out.push_back(algorithm1(g));
  for (Network& g : algorithm2(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace cellnet
