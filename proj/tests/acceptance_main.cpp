// Acceptance harness: one check per headline claim of the library, one
// PASS/FAIL line per criterion, nonzero exit when anything fails.  Each
// criterion is self-contained and uses the independent oracles where the
// claim is about agreement of two computation routes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellnet/construct.hpp"
#include "cellnet/enumeration.hpp"
#include "cellnet/equivalence.hpp"
#include "cellnet/monoid.hpp"
#include "cellnet/network.hpp"
#include "cellnet/span.hpp"
#include "cellnet/synchrony.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using cellnet::CellPartition;
using cellnet::ExactMatrix;
using cellnet::InputMap;
using cellnet::MatrixFamily;
using cellnet::Network;
using cellnet::Permutation;
using testutil::net1;
using testutil::netk;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void fail(const std::string& reason) {
    if (ok) why = reason;  // keep the first reason
    ok = false;
  }
  void expect(bool cond, const std::string& reason) {
    if (!cond) fail(reason);
  }
};

std::vector<std::vector<int>> all_nonidentity_maps(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  for (;;) {
    bool ident = true;
    for (int i = 0; i < n && ident; ++i)
      ident = t[static_cast<std::size_t>(i)] == i + 1;
    if (!ident) out.push_back(t);
    int p = n - 1;
    while (p >= 0 && t[static_cast<std::size_t>(p)] == n)
      t[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) break;
    ++t[static_cast<std::size_t>(p)];
  }
  return out;
}

// ---------------------------------------------------------------- criteria

void dimension_theorem(Check& c) {
  const int expect[] = {3, 7, 13, 21};
  for (int n = 2; n <= 5; ++n) {
    int got = cellnet::full_span_dimension(n);
    c.expect(got == expect[n - 2],
             "dimension at n=" + std::to_string(n) + " gave " +
                 std::to_string(got));
  }
}

void one_input_classes(Check& c) {
  const std::size_t expect[] = {2, 6, 18};
  for (int n = 2; n <= 4; ++n) {
    std::size_t got = cellnet::one_input_classes(n).size();
    c.expect(got == expect[n - 2],
             "class count at n=" + std::to_string(n) + " gave " +
                 std::to_string(got));
  }
  // The six 3-cell classes biject with the frozen representatives.
  auto classes = cellnet::one_input_classes(3);
  auto reps = testutil::class_reps_3();
  std::vector<bool> used(reps.size(), false);
  for (const Network& cls : classes) {
    int hits = 0;
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (cellnet::ode_equivalent(cls, net1(reps[r]))) {
        ++hits;
        used[r] = true;
      }
    c.expect(hits == 1, "a 3-cell class matched " + std::to_string(hits) +
                            " frozen representatives");
  }
  c.expect(std::all_of(used.begin(), used.end(), [](bool b) { return b; }),
           "some frozen representative matched no computed class");
}

void catalog_48(Check& c) {
  auto maps = all_nonidentity_maps(3);
  long ordered = 0;
  for (const auto& a : maps)
    for (const auto& b : maps) {
      if (a == b) continue;
      if (cellnet::is_minimal(netk({a, b}))) ++ordered;
    }
  c.expect(ordered == 650,
           "ordered minimal pairs gave " + std::to_string(ordered));

  long iso = cellnet::intermediate_isomorphism_count(3, 2);
  c.expect(iso == 64, "isomorphism tally gave " + std::to_string(iso));

  auto reps = cellnet::minimal_class_catalog(3, 2, /*connected_only=*/true);
  c.expect(reps.size() == 48,
           "catalog size gave " + std::to_string(reps.size()));
  for (std::size_t i = 0; i < reps.size() && c.ok; ++i)
    for (std::size_t j = i + 1; j < reps.size() && c.ok; ++j)
      c.expect(!cellnet::ode_equivalent(reps[i], reps[j]),
               "catalog entries " + std::to_string(i) + " and " +
                   std::to_string(j) + " are equivalent");
}

void synchrony_split(Check& c) {
  auto reps = cellnet::minimal_class_catalog(3, 2, true);
  std::map<int, int> hist;
  for (const Network& r : reps) ++hist[cellnet::count_2d_synchrony(r)];
  const int expect[] = {19, 21, 7, 1};
  for (int b = 0; b <= 3; ++b)
    c.expect(hist[b] == expect[b],
             "classes with " + std::to_string(b) + " two-block partitions: " +
                 std::to_string(hist[b]));
}

void monoid_census(Check& c) {
  auto reps = cellnet::minimal_class_catalog(3, 2, true);
  std::vector<Network> closed;
  for (const Network& r : reps)
    if (cellnet::has_three_element_monoid(r)) closed.push_back(r);
  c.expect(closed.size() == 8,
           "networks with a 3-element monoid: " + std::to_string(closed.size()));
  if (!c.ok) return;

  // The eight realize all seven 3-element monoid tables.
  std::map<std::vector<std::vector<int>>, std::vector<const Network*>> by_table;
  for (const Network& g : closed)
    by_table[cellnet::canonical_table(cellnet::closure(g.inputs()))]
        .push_back(&g);
  c.expect(by_table.size() == 7,
           "distinct monoid tables: " + std::to_string(by_table.size()));
  std::set<std::vector<std::vector<int>>> expected_tables;
  for (const auto& t : testutil::monoid_tables_3()) {
    std::vector<InputMap> el(3, InputMap{1});
    expected_tables.insert(
        cellnet::canonical_table(cellnet::MonoidTable(el, t, {})));
  }
  for (const auto& [table, nets] : by_table)
    c.expect(expected_tables.count(table) == 1,
             "a realized table is not one of the seven");

  // The duplicated table belongs to the two constant-plus-two-loop classes,
  // and only the one fixing its tail cell fails to be fundamental.
  Network dup_a = netk({{1, 1, 1}, {1, 2, 2}});
  Network dup_b = netk({{1, 1, 1}, {1, 1, 3}});
  int fundamental = 0;
  for (const auto& [table, nets] : by_table) {
    if (nets.size() == 1) continue;
    c.expect(nets.size() == 2, "a table is realized by " +
                                   std::to_string(nets.size()) + " classes");
    bool hit_a = false, hit_b = false;
    for (const Network* g : nets) {
      hit_a = hit_a || cellnet::ode_equivalent(*g, dup_a);
      hit_b = hit_b || cellnet::ode_equivalent(*g, dup_b);
    }
    c.expect(hit_a && hit_b,
             "the repeated table is not the constant-plus-two-loop pair");
  }
  for (const Network& g : closed) {
    bool fund = cellnet::is_fundamental(g);
    fundamental += fund ? 1 : 0;
    bool is_b = cellnet::ode_equivalent(g, dup_b);
    c.expect(fund == !is_b, "fundamentality disagrees on " + cellnet::digest(g));
  }
  c.expect(fundamental == 7,
           "fundamental count gave " + std::to_string(fundamental));
}

void universal_representative(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    Network u = cellnet::universal_representative(n);
    std::size_t rank = cellnet::identity_augmented_span(u).rank();
    c.expect(cellnet::is_minimal(u) &&
                 rank == static_cast<std::size_t>(n * (n - 1) + 1),
             "universal representative at n=" + std::to_string(n) +
                 " has rank " + std::to_string(rank));
  }
  // n = 2: every 2-input minimal network, by full enumeration, is
  // equivalent to every other.
  Network u2 = cellnet::universal_representative(2);
  std::vector<Network> all_min;
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int a2 = 1; a2 <= 2; ++a2)
      for (int b1 = 1; b1 <= 2; ++b1)
        for (int b2 = 1; b2 <= 2; ++b2) {
          Network net = netk({{a1, a2}, {b1, b2}});
          if (cellnet::is_minimal(net)) all_min.push_back(net);
        }
  c.expect(all_min.size() == 6, "2-cell 2-input minimal networks: " +
                                    std::to_string(all_min.size()));
  for (const Network& m : all_min)
    c.expect(cellnet::ode_equivalent(m, u2),
             "a 2-cell minimal network is not equivalent to the universal one");
  for (std::size_t i = 0; i < all_min.size(); ++i)
    for (std::size_t j = i + 1; j < all_min.size(); ++j)
      c.expect(cellnet::ode_equivalent(all_min[i], all_min[j]),
               "two 2-cell minimal networks are not equivalent");

  // n = 3: 200 random minimal 6-input networks, all equivalent to it.
  Network u3 = cellnet::universal_representative(3);
  std::mt19937 rng(646464);
  auto maps = all_nonidentity_maps(3);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  int found = 0;
  while (found < 200) {
    std::vector<std::vector<int>> lists;
    for (int t = 0; t < 6; ++t) lists.push_back(maps[pick(rng)]);
    Network net = netk(lists);
    if (!cellnet::is_minimal(net)) continue;
    ++found;
    if (!cellnet::ode_equivalent(net, u3)) {
      c.fail("random minimal 6-input network not equivalent to the universal "
             "representative: " +
             cellnet::digest(net));
      return;
    }
  }
}

void growth_algorithms(Check& c) {
  // Chain extensions at four cells: six networks, pairwise distinct,
  // matching the frozen classes one to one.
  auto ff = cellnet::algorithm2(4);
  auto ff_expect = testutil::feed_forward_4cell_reps();
  c.expect(ff.size() == 6, "chain extension count: " +
                               std::to_string(ff.size()));
  std::vector<bool> ff_used(ff_expect.size(), false);
  for (const Network& g : ff) {
    int hits = 0;
    for (std::size_t r = 0; r < ff_expect.size(); ++r)
      if (cellnet::ode_equivalent(g, net1(ff_expect[r]))) {
        ++hits;
        ff_used[r] = true;
      }
    c.expect(hits == 1, "a chain extension matched " + std::to_string(hits) +
                            " frozen classes");
  }
  c.expect(std::all_of(ff_used.begin(), ff_used.end(),
                       [](bool b) { return b; }),
           "a frozen feed-forward class was missed");

  // Cycle extensions of the six 3-cell representatives.
  auto grown_expect = testutil::grown_4cell_reps();
  std::vector<Network> grown;
  for (const auto& rep : testutil::class_reps_3())
    grown.push_back(cellnet::algorithm1(net1(rep)));
  std::vector<bool> g_used(grown_expect.size(), false);
  for (const Network& g : grown) {
    int hits = 0;
    for (std::size_t r = 0; r < grown_expect.size(); ++r)
      if (cellnet::ode_equivalent(g, net1(grown_expect[r]))) {
        ++hits;
        g_used[r] = true;
      }
    c.expect(hits == 1, "a cycle extension matched " + std::to_string(hits) +
                            " frozen classes");
  }
  c.expect(std::all_of(g_used.begin(), g_used.end(), [](bool b) { return b; }),
           "a frozen grown class was missed");
  for (std::size_t i = 0; i < grown.size(); ++i)
    for (std::size_t j = i + 1; j < grown.size(); ++j)
      c.expect(!cellnet::ode_equivalent(grown[i], grown[j]),
               "two cycle extensions are equivalent");

  // Lower-bound families: n(n-1) pairwise distinct one-input networks.
  for (int n : {4, 5}) {
    auto fam = cellnet::lower_bound_family(n);
    c.expect(static_cast<int>(fam.size()) == n * (n - 1),
             "family size at n=" + std::to_string(n) + ": " +
                 std::to_string(fam.size()));
    for (std::size_t i = 0; i < fam.size() && c.ok; ++i)
      for (std::size_t j = i + 1; j < fam.size() && c.ok; ++j)
        c.expect(!cellnet::ode_equivalent(fam[i], fam[j]),
                 "family members " + std::to_string(i) + " and " +
                     std::to_string(j) + " at n=" + std::to_string(n) +
                     " are equivalent");
  }
}

void oracle_agreement(Check& c) {
  // (a) Pruned equivalence versus unpruned brute force over every pair of
  // the 64 tally representatives.
  auto maps = all_nonidentity_maps(3);
  std::vector<std::vector<int>> perms;
  for (const Permutation& pi : cellnet::all_permutations(3))
    perms.push_back(pi.images());
  auto map_canon = [&](const std::vector<int>& s) {
    std::vector<int> best = s;
    for (const auto& pi : perms)
      best = std::min(best, testutil::conj_targets(s, pi));
    return best;
  };
  using Pair = std::vector<std::vector<int>>;
  auto pair_canon = [&](const std::vector<int>& a, const std::vector<int>& b) {
    Pair best{testutil::conj_targets(a, perms[0]),
              testutil::conj_targets(b, perms[0])};
    for (const auto& pi : perms) {
      Pair cand{testutil::conj_targets(a, pi), testutil::conj_targets(b, pi)};
      if (cand < best) best = cand;
    }
    return best;
  };
  std::set<Pair> canon;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      Pair ab = pair_canon(maps[i], maps[j]);
      Pair ba = pair_canon(maps[j], maps[i]);
      if (map_canon(maps[i]) == map_canon(maps[j])) {
        canon.insert(ab);
        canon.insert(ba);
      } else {
        canon.insert(std::min(ab, ba));
      }
    }
  c.expect(canon.size() == 64,
           "tally representatives: " + std::to_string(canon.size()));
  std::vector<Network> nets;
  for (const Pair& p : canon) nets.push_back(netk({p[0], p[1]}));
  for (std::size_t i = 0; i < nets.size(); ++i)
    for (std::size_t j = i; j < nets.size(); ++j) {
      bool fast = cellnet::ode_equivalent(nets[i], nets[j]);
      bool slow = testutil::brute_force_ode_equivalent(nets[i], nets[j]);
      if (fast != slow) {
        c.fail("pruned and brute-force equivalence disagree on " +
               cellnet::digest(nets[i]) + " vs " + cellnet::digest(nets[j]));
        return;
      }
    }

  // (b) Balance criterion versus matrix invariance: exhaustive over all
  // one-input networks up to 4 cells, plus random multi-input networks.
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n), 1);
    for (;;) {
      Network net = net1(t);
      for (const CellPartition& p : cellnet::all_partitions(n))
        if (cellnet::is_balanced(net, p) !=
            cellnet::is_balanced_matrix_oracle(net, p)) {
          c.fail("balance oracles disagree on " + cellnet::digest(net) +
                 " at " + p.to_string());
          return;
        }
      int pos = n - 1;
      while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n)
        t[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++t[static_cast<std::size_t>(pos)];
    }
  }
  std::mt19937 rng(8881);
  for (int trial = 0; trial < 500; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    int k = std::uniform_int_distribution<int>(2, 3)(rng);
    std::uniform_int_distribution<int> cell(1, n);
    std::vector<std::vector<int>> lists;
    for (int t = 0; t < k; ++t) {
      std::vector<int> targets(static_cast<std::size_t>(n));
      for (auto& x : targets) x = cell(rng);
      lists.push_back(std::move(targets));
    }
    Network net = netk(lists);
    for (const CellPartition& p : cellnet::all_partitions(n))
      if (cellnet::is_balanced(net, p) !=
          cellnet::is_balanced_matrix_oracle(net, p)) {
        c.fail("balance oracles disagree on " + cellnet::digest(net));
        return;
      }
  }

  // (c) Rational row reduction versus fraction-free integer elimination on
  // 1000 random valency-one families.
  std::mt19937 rng2(773377);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng2);
    int k = std::uniform_int_distribution<int>(1, n * (n - 1) + 2)(rng2);
    std::uniform_int_distribution<int> cell(1, n);
    MatrixFamily fam;
    std::vector<std::vector<cellnet::Int>> rows;
    for (int t = 0; t < k; ++t) {
      std::vector<int> targets(static_cast<std::size_t>(n));
      for (auto& x : targets) x = cell(rng2);
      ExactMatrix m = cellnet::adjacency(net1(targets), 1);
      fam.push_back(m);
      std::vector<cellnet::Int> row;
      for (const cellnet::Rational& x : m.flat())
        row.push_back(cellnet::Int(boost::multiprecision::numerator(x)));
      rows.push_back(std::move(row));
    }
    if (cellnet::span_form(fam).rank() != testutil::bareiss_rank(rows)) {
      c.fail("rank oracles disagree on a random family (trial " +
             std::to_string(trial) + ")");
      return;
    }
  }
}

void minimality_edge_laws(Check& c) {
  // Every one-input non-identity network is minimal (n = 2, 3, 4).
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : all_nonidentity_maps(n))
      if (!cellnet::is_minimal(net1(t))) {
        c.fail("non-identity one-input network is not minimal: " +
               cellnet::digest(net1(t)));
        return;
      }
  // Every pair of distinct non-identity maps is minimal (n = 2, 3).
  for (int n = 2; n <= 3; ++n) {
    auto maps = all_nonidentity_maps(n);
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j)
        if (!cellnet::is_minimal(netk({maps[i], maps[j]}))) {
          c.fail("pair of distinct maps is not minimal: " +
                 cellnet::digest(netk({maps[i], maps[j]})));
          return;
        }
  }
  // Beyond k = n(n-1) inputs no network is minimal.
  std::mt19937 rng(424242);
  for (int n = 2; n <= 3; ++n) {
    std::uniform_int_distribution<int> cell(1, n);
    std::uniform_int_distribution<int> extra(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
      int k = n * (n - 1) + extra(rng);
      std::vector<std::vector<int>> lists;
      for (int t = 0; t < k; ++t) {
        std::vector<int> targets(static_cast<std::size_t>(n));
        for (auto& x : targets) x = cell(rng);
        lists.push_back(std::move(targets));
      }
      if (cellnet::is_minimal(netk(lists))) {
        c.fail("a network with " + std::to_string(k) + " inputs on " +
               std::to_string(n) + " cells claims minimality");
        return;
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "valency-one span dimension is 3/7/13/21 for 2..5 cells",
       dimension_theorem},
      {2, "one-input class counts 2/6/18 with the six 3-cell representatives",
       one_input_classes},
      {3, "650 minimal pairs, tally of 64, catalog of 48 connected classes",
       catalog_48},
      {4, "two-block synchrony splits 19/21/7/1 over the 48 classes",
       synchrony_split},
      {5, "eight 3-element monoids realizing all seven tables, seven "
          "fundamental",
       monoid_census},
      {6, "universal representative is minimal and absorbs its input class",
       universal_representative},
      {7, "growth algorithms produce pairwise distinct families of size "
          "n(n-1)",
       growth_algorithms},
      {8, "pruned/brute equivalence, balance, and rank oracles agree",
       oracle_agreement},
      {9, "minimality edge laws at one input, two inputs, and past n(n-1)",
       minimality_edge_laws},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    cr.run(check);
    auto stop = std::chrono::steady_clock::now();
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count() /
        1000.0;
    if (check.ok) {
      std::printf("[PASS] criterion %d: %s (%.2f s)\n", cr.number, cr.title,
                  secs);
    } else {
      std::printf("[FAIL] criterion %d: %s — %s (%.2f s)\n", cr.number,
                  cr.title, check.why.c_str(), secs);
      ++failures;
    }
  }
  if (failures > 0)
    std::printf("%d of 9 criteria failed\n", failures);
  else
    std::printf("all 9 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
