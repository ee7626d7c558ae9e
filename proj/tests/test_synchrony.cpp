#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "cellnet/equivalence.hpp"
#include "cellnet/network.hpp"
#include "cellnet/synchrony.hpp"

#include "helpers.hpp"

using cellnet::CellPartition;
using cellnet::Network;
using cellnet::Permutation;
using testutil::net1;
using testutil::netk;

namespace {

std::vector<int> random_targets(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> cell(1, n);
  std::vector<int> t(static_cast<std::size_t>(n));
  for (auto& x : t) x = cell(rng);
  return t;
}

std::vector<std::string> partition_strings(const std::vector<CellPartition>& ps) {
  std::vector<std::string> out;
  for (const CellPartition& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("partition construction enforces restricted growth") {
  CellPartition p(3, {1, 1, 2});
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(1) == 1);
  CHECK(p.block_of(3) == 2);
  CHECK(p.to_string() == "{1,2|3}");
  CHECK(CellPartition(4, {1, 2, 1, 3}).to_string() == "{1,3|2|4}");
  CHECK(CellPartition::total(3).block_count() == 1);
  CHECK(CellPartition::singletons(3).block_count() == 3);

  CHECK_THROWS_AS(CellPartition(3, {2, 1, 1}), cellnet::SizeMismatch);
  CHECK_THROWS_AS(CellPartition(3, {1, 3, 2}), cellnet::SizeMismatch);
  CHECK_THROWS_AS(CellPartition(3, {1, 1}), cellnet::SizeMismatch);
  CHECK_THROWS_AS(CellPartition(3, {0, 1, 2}), cellnet::SizeMismatch);
}

TEST_CASE("partition enumeration yields the Bell numbers") {
  CHECK(cellnet::all_partitions(1).size() == 1);
  CHECK(cellnet::all_partitions(2).size() == 2);
  CHECK(cellnet::all_partitions(3).size() == 5);
  CHECK(cellnet::all_partitions(4).size() == 15);
  CHECK(cellnet::all_partitions(5).size() == 52);
  auto ps = cellnet::all_partitions(4);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    seen.insert(ps[i].assignment());
    if (i > 0) CHECK(ps[i - 1] < ps[i]);  // strictly increasing, so sorted
  }
  CHECK(seen.size() == ps.size());
}

TEST_CASE("relabeled partitions move blocks with the cells") {
  CellPartition p(3, {1, 1, 2});  // {1,2|3}
  Permutation swap13(3, {3, 2, 1});
  CHECK(p.relabeled(swap13).to_string() == "{1|2,3}");
  Permutation id = Permutation::identity(3);
  CHECK(p.relabeled(id) == p);
  // Round trip through a permutation and its inverse.
  std::mt19937 rng(311);
  for (const Permutation& pi : cellnet::all_permutations(4)) {
    CellPartition q(4, {1, 2, 2, 1});
    CHECK(q.relabeled(pi).relabeled(pi.inverse()) == q);
  }
}

TEST_CASE("balance on hand-checked examples") {
  Network chain = net1({1, 1, 2});
  CHECK(cellnet::is_balanced(chain, CellPartition(3, {1, 1, 2})));
  CHECK_FALSE(cellnet::is_balanced(chain, CellPartition(3, {1, 2, 1})));
  CHECK_FALSE(cellnet::is_balanced(chain, CellPartition(3, {1, 2, 2})));
  CHECK(cellnet::is_balanced(chain, CellPartition::total(3)));
  CHECK(cellnet::is_balanced(chain, CellPartition::singletons(3)));
  // A constant map is balanced for every partition.
  Network constant = net1({2, 2, 2});
  for (const CellPartition& p : cellnet::all_partitions(3))
    CHECK(cellnet::is_balanced(constant, p));
}

TEST_CASE("map criterion equals matrix invariance on all small networks") {
  // Exhaustive for every one-input 3-cell network and every partition.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        Network net = net1({a, b, c});
        for (const CellPartition& p : cellnet::all_partitions(3))
          REQUIRE(cellnet::is_balanced(net, p) ==
                  cellnet::is_balanced_matrix_oracle(net, p));
      }
  // Random multi-input networks up to 4 cells.
  std::mt19937 rng(313);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::vector<int>> lists;
    for (int t = 0; t < k; ++t) lists.push_back(random_targets(rng, n));
    Network net = netk(lists);
    for (const CellPartition& p : cellnet::all_partitions(n))
      REQUIRE(cellnet::is_balanced(net, p) ==
              cellnet::is_balanced_matrix_oracle(net, p));
  }
}

TEST_CASE("a union is balanced exactly when every component is") {
  std::mt19937 rng(317);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    Network a = net1(random_targets(rng, n));
    Network b = net1(random_targets(rng, n));
    Network u = cellnet::union_nets({a, b});
    for (const CellPartition& p : cellnet::all_partitions(n))
      REQUIRE(cellnet::is_balanced(u, p) ==
              (cellnet::is_balanced(a, p) && cellnet::is_balanced(b, p)));
  }
}

TEST_CASE("balance is equivariant under relabeling") {
  std::mt19937 rng(331);
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    Network net = netk({random_targets(rng, n), random_targets(rng, n)});
    auto perms = cellnet::all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    const Permutation& pi = perms[pick(rng)];
    Network moved = cellnet::relabel(net, pi);
    for (const CellPartition& p : cellnet::all_partitions(n))
      REQUIRE(cellnet::is_balanced(net, p) ==
              cellnet::is_balanced(moved, p.relabeled(pi)));
  }
}

TEST_CASE("synchrony lattice of each one-input class representative") {
  using V = std::vector<std::string>;
  // 3-cycle: only the total polydiagonal.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({3, 1, 2}))) ==
        V{"{1,2,3}"});
  // Transposition with fixed cell 1: cells 2,3 may synchronize.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({1, 3, 2}))) ==
        V{"{1,2,3}", "{1|2,3}"});
  // Constant map: every merge is balanced.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({1, 1, 1}))) ==
        V{"{1,2,3}", "{1,2|3}", "{1,3|2}", "{1|2,3}"});
  // Chain: the two source cells may synchronize.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({1, 1, 2}))) ==
        V{"{1,2,3}", "{1,2|3}"});
  // Two loops plus tail.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({1, 2, 1}))) ==
        V{"{1,2,3}", "{1,2|3}", "{1,3|2}"});
  // 2-cycle plus tail.
  CHECK(partition_strings(cellnet::synchrony_partitions(net1({2, 1, 1}))) ==
        V{"{1,2,3}", "{1,2|3}", "{1|2,3}"});
}

TEST_CASE("synchrony_partitions agrees with filtering all partitions") {
  std::mt19937 rng(337);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    Network net = netk({random_targets(rng, n), random_targets(rng, n)});
    std::vector<CellPartition> expect;
    for (const CellPartition& p : cellnet::all_partitions(n))
      if (p.block_count() != n && cellnet::is_balanced(net, p))
        expect.push_back(p);
    std::sort(expect.begin(), expect.end());
    CHECK(cellnet::synchrony_partitions(net) == expect);
  }
}

TEST_CASE("two-block census over the class representatives") {
  std::vector<int> expect{0, 1, 3, 1, 2, 2};
  auto reps = testutil::class_reps_3();
  for (std::size_t i = 0; i < reps.size(); ++i)
    CHECK(cellnet::count_2d_synchrony(net1(reps[i])) ==
          expect[i]);
  CHECK_THROWS_AS(cellnet::count_2d_synchrony(net1({1, 1})),
                  cellnet::WrongSize);
}

TEST_CASE("synchrony guards") {
  CHECK_THROWS_AS(cellnet::is_balanced(net1({1, 1}), CellPartition::total(3)),
                  cellnet::SizeMismatch);
  std::vector<int> big(13, 1);
  std::vector<int> loop(13);
  for (int i = 0; i < 13; ++i) loop[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(cellnet::synchrony_partitions(net1(loop)),
                  cellnet::SizeLimitExceeded);
}
