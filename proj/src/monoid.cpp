#include "cellnet/monoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cellnet/errors.hpp"

namespace cellnet {

MonoidTable::MonoidTable(std::vector<InputMap> elements,
                         std::vector<std::vector<int>> table,
                         std::vector<int> generator_indices)
    : elements_(std::move(elements)),
      table_(std::move(table)),
      generator_indices_(std::move(generator_indices)) {}

const InputMap& MonoidTable::element(int i) const {
  if (i < 1 || i > size())
    throw IndexOutOfRange("element " + std::to_string(i) + " outside 1.." +
                          std::to_string(size()));
  return elements_[static_cast<std::size_t>(i - 1)];
}

int MonoidTable::product(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > size())
    throw IndexOutOfRange("table index outside 1.." + std::to_string(size()));
  return table_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

MonoidTable closure(const std::vector<InputMap>& maps) {
  int n = maps.empty() ? 1 : maps.front().n();
  for (const InputMap& m : maps)
    if (m.n() != n)
      throw MismatchedCellCount("closure generators need equal cell counts");

  std::vector<InputMap> elements;
  std::vector<int> id_targets(static_cast<std::size_t>(n));
  std::iota(id_targets.begin(), id_targets.end(), 1);
  elements.emplace_back(n, std::move(id_targets));

  auto index_of = [&elements](const InputMap& m) -> int {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == m) return static_cast<int>(i) + 1;
    return 0;
  };

  std::vector<int> gens;
  for (const InputMap& m : maps) {
    int ix = index_of(m);
    if (ix == 0) {
      elements.push_back(m);
      ix = static_cast<int>(elements.size());
    }
    gens.push_back(ix);
  }

  // Saturate under composition; scanning in index order keeps discovery
  // order deterministic.
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t m = elements.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        InputMap prod = elements[i].compose(elements[j]);
        if (index_of(prod) == 0) {
          elements.push_back(std::move(prod));
          grew = true;
        }
      }
  }

  std::size_t m = elements.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = index_of(elements[i].compose(elements[j]));

  return MonoidTable(std::move(elements), std::move(table), std::move(gens));
}

bool has_three_element_monoid(const Network& net) {
  return closure(net.inputs()).size() == 3;
}

namespace {

// Identity-preserving bijections as images of elements 2..m (1 is fixed).
// Calls fn with the full image vector (1-based, image[0] == 1); stops early
// when fn returns true.
bool for_each_identity_bijection(
    int m, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> image(static_cast<std::size_t>(m));
  image[0] = 1;
  std::vector<int> rest(static_cast<std::size_t>(m - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i)
      image[i + 1] = rest[i];
    if (fn(image)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

void require_table_small(const MonoidTable& t, const char* what) {
  if (t.size() > 8)
    throw SizeLimitExceeded(std::string(what) +
                            " brute-forces element bijections; table size " +
                            std::to_string(t.size()) + " exceeds 8");
}

}  // namespace

bool monoid_isomorphic(const MonoidTable& a, const MonoidTable& b) {
  if (a.size() != b.size()) return false;
  require_table_small(a, "monoid_isomorphic");
  int m = a.size();
  if (m == 1) return true;
  return for_each_identity_bijection(m, [&](const std::vector<int>& phi) {
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        if (b.product(phi[static_cast<std::size_t>(i - 1)],
                      phi[static_cast<std::size_t>(j - 1)]) !=
            phi[static_cast<std::size_t>(a.product(i, j) - 1)])
          return false;
    return true;
  });
}

std::vector<std::vector<int>> canonical_table(const MonoidTable& t) {
  require_table_small(t, "canonical_table");
  int m = t.size();
  std::vector<std::vector<int>> best;
  auto consider = [&](const std::vector<int>& phi) {
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
      inv[static_cast<std::size_t>(phi[static_cast<std::size_t>(i - 1)] - 1)] =
          i;
    std::vector<std::vector<int>> relab(
        static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        relab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
            phi[static_cast<std::size_t>(
                t.product(inv[static_cast<std::size_t>(i - 1)],
                          inv[static_cast<std::size_t>(j - 1)]) -
                1)];
    if (best.empty() || relab < best) best = std::move(relab);
    return false;  // visit every bijection
  };
  if (m == 1) {
    consider({1});
  } else {
    for_each_identity_bijection(m, consider);
  }
  return best;
}

Network fundamental_network(const MonoidTable& t,
                            const std::vector<int>& generators) {
  int m = t.size();
  std::vector<InputMap> inputs;
  for (int g : generators) {
    if (g < 1 || g > m)
      throw IndexOutOfRange("generator index " + std::to_string(g) +
                            " outside 1.." + std::to_string(m));
    std::vector<int> targets(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
      targets[static_cast<std::size_t>(i - 1)] = t.product(g, i);
    inputs.emplace_back(m, std::move(targets));
  }
  return Network(m, std::move(inputs));
}

bool is_fundamental(const Network& net) {
  MonoidTable t = closure(net.inputs());
  if (t.size() != net.n()) return false;
  Network fund = fundamental_network(t, t.generator_indices());
  // Need a cell bijection sending fund to net with input types matched in
  // order (type j of fund is generator j's left action).
  for (const Permutation& pi : all_permutations(net.n()))
    if (relabel(fund, pi) == net) return true;
  return false;
}

std::string print_table(const MonoidTable& t) {
  int m = t.size();
  auto name = [](int i) { return "s" + std::to_string(i - 1); };
  std::string out = "    |";
  for (int j = 1; j <= m; ++j) out += " " + name(j);
  out += "\n----+" + std::string(static_cast<std::size_t>(m) * 3, '-') + "\n";
  for (int i = 1; i <= m; ++i) {
    out += " " + name(i) + " |";
    for (int j = 1; j <= m; ++j) out += " " + name(t.product(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace cellnet
