#include "cellnet/network.hpp"

#include <algorithm>
#include <numeric>

namespace cellnet {

// ---------------------------------------------------------------- InputMap

InputMap::InputMap(int n, std::vector<int> targets)
    : n_(n), targets_(std::move(targets)) {
  if (n_ <= 0) throw CellOutOfRange("cell count must be positive");
  if (static_cast<int>(targets_.size()) != n_)
    throw SizeMismatch("input map needs one target per cell: expected " +
                       std::to_string(n_) + ", got " +
                       std::to_string(targets_.size()));
  for (int t : targets_)
    if (t < 1 || t > n_)
      throw CellOutOfRange("target cell " + std::to_string(t) +
                           " outside 1.." + std::to_string(n_));
}

bool InputMap::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

ExactMatrix InputMap::matrix() const {
  ExactMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    m.at(static_cast<std::size_t>(i - 1),
         static_cast<std::size_t>((*this)(i) - 1)) = 1;
  return m;
}

InputMap InputMap::compose(const InputMap& other) const {
  if (n_ != other.n_)
    throw SizeMismatch("composition needs equal cell counts");
  std::vector<int> t(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    t[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return InputMap(n_, std::move(t));
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(int n, std::vector<int> images)
    : n_(n), images_(std::move(images)) {
  if (n_ <= 0) throw CellOutOfRange("cell count must be positive");
  if (static_cast<int>(images_.size()) != n_)
    throw WrongSize("permutation needs exactly n images");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int v : images_) {
    if (v < 1 || v > n_)
      throw CellOutOfRange("permutation image " + std::to_string(v) +
                           " outside 1.." + std::to_string(n_));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw WrongSize("permutation images must be distinct");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(n, std::move(im));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    im[static_cast<std::size_t>(i - 1)] = (i % n) + 1;
  return Permutation(n, std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    im[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(n_, std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n_ != other.n_)
    throw SizeMismatch("composition needs equal cell counts");
  std::vector<int> im(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    im[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(n_, std::move(im));
}

ExactMatrix Permutation::matrix() const {
  ExactMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    m.at(static_cast<std::size_t>(i - 1),
         static_cast<std::size_t>((*this)(i)-1)) = 1;
  return m;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(n, im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// ----------------------------------------------------------------- Network

Network::Network(int n, std::vector<InputMap> inputs, std::string label)
    : n_(n), inputs_(std::move(inputs)), label_(std::move(label)) {
  if (n_ <= 0) throw CellOutOfRange("cell count must be positive");
  for (const InputMap& m : inputs_)
    if (m.n() != n_)
      throw MismatchedCellCount("input map on " + std::to_string(m.n()) +
                                " cells in a " + std::to_string(n_) +
                                "-cell network");
}

const InputMap& Network::input(int type_index) const {
  if (type_index < 1 || type_index > k())
    throw TypeIndexOutOfRange("type " + std::to_string(type_index) +
                              " outside 1.." + std::to_string(k()));
  return inputs_[static_cast<std::size_t>(type_index - 1)];
}

Network Network::with_label(std::string label) const {
  return Network(n_, inputs_, std::move(label));
}

Network network_from_edges(
    int n, const std::vector<std::vector<std::pair<int, int>>>& edge_lists) {
  if (n <= 0) throw CellOutOfRange("cell count must be positive");
  std::vector<InputMap> inputs;
  for (std::size_t l = 0; l < edge_lists.size(); ++l) {
    std::vector<int> targets(static_cast<std::size_t>(n), 0);
    for (const auto& [head, tail] : edge_lists[l]) {
      if (head < 1 || head > n || tail < 1 || tail > n)
        throw CellOutOfRange("edge (" + std::to_string(head) + "," +
                             std::to_string(tail) + ") outside 1.." +
                             std::to_string(n));
      int& slot = targets[static_cast<std::size_t>(head - 1)];
      if (slot != 0)
        throw DuplicateInput("cell " + std::to_string(head) +
                             " has two type-" + std::to_string(l + 1) +
                             " edges");
      slot = tail;
    }
    for (int i = 1; i <= n; ++i)
      if (targets[static_cast<std::size_t>(i - 1)] == 0)
        throw MissingInput("cell " + std::to_string(i) + " lacks a type-" +
                           std::to_string(l + 1) + " edge");
    inputs.emplace_back(n, std::move(targets));
  }
  return Network(n, std::move(inputs));
}

ExactMatrix adjacency(const Network& net, int type_index) {
  return net.input(type_index).matrix();
}

MatrixFamily adjacency_family(const Network& net) {
  MatrixFamily fam;
  fam.reserve(static_cast<std::size_t>(net.k()));
  for (const InputMap& m : net.inputs()) fam.push_back(m.matrix());
  return fam;
}

Network union_nets(const std::vector<Network>& nets) {
  if (nets.empty()) throw MismatchedCellCount("union of no networks");
  int n = nets.front().n();
  std::vector<InputMap> inputs;
  for (const Network& g : nets) {
    if (g.n() != n)
      throw MismatchedCellCount("union needs equal cell counts: " +
                                std::to_string(n) + " vs " +
                                std::to_string(g.n()));
    inputs.insert(inputs.end(), g.inputs().begin(), g.inputs().end());
  }
  return Network(n, std::move(inputs));
}

Network relabel(const Network& net, const Permutation& pi) {
  if (pi.n() != net.n())
    throw SizeMismatch("permutation size != cell count");
  Permutation inv = pi.inverse();
  std::vector<InputMap> inputs;
  inputs.reserve(static_cast<std::size_t>(net.k()));
  for (const InputMap& sigma : net.inputs()) {
    std::vector<int> t(static_cast<std::size_t>(net.n()));
    for (int j = 1; j <= net.n(); ++j)
      t[static_cast<std::size_t>(j - 1)] = pi(sigma(inv(j)));
    inputs.emplace_back(net.n(), std::move(t));
  }
  return Network(net.n(), std::move(inputs), net.label());
}

namespace {

// Reachable set from `start` (0-based) over out-neighbour lists.
std::vector<bool> reach(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

std::vector<std::vector<int>> directed_adj(const Network& net) {
  // Edge tail -> head for every input type (0-based vertices).
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(net.n()));
  for (const InputMap& sigma : net.inputs())
    for (int i = 1; i <= net.n(); ++i)
      adj[static_cast<std::size_t>(sigma(i) - 1)].push_back(i - 1);
  return adj;
}

}  // namespace

bool is_connected(const Network& net) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(net.n()));
  for (const InputMap& sigma : net.inputs())
    for (int i = 1; i <= net.n(); ++i) {
      adj[static_cast<std::size_t>(i - 1)].push_back(sigma(i) - 1);
      adj[static_cast<std::size_t>(sigma(i) - 1)].push_back(i - 1);
    }
  std::vector<bool> seen = reach(adj, 0);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_strongly_connected(const Network& net) {
  std::vector<std::vector<int>> fwd = directed_adj(net);
  std::vector<bool> seen = reach(fwd, 0);
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    return false;
  // Reverse reachability: in a valency-one network the reversed edges are
  // exactly the input maps themselves (i -> sigma(i)).
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(net.n()));
  for (const InputMap& sigma : net.inputs())
    for (int i = 1; i <= net.n(); ++i)
      rev[static_cast<std::size_t>(i - 1)].push_back(sigma(i) - 1);
  seen = reach(rev, 0);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_backward_connected(const Network& net) {
  // Paths *to* a fixed cell follow reversed edges, i.e. the maps themselves.
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(net.n()));
  for (const InputMap& sigma : net.inputs())
    for (int i = 1; i <= net.n(); ++i)
      rev[static_cast<std::size_t>(i - 1)].push_back(sigma(i) - 1);
  for (int c = 0; c < net.n(); ++c) {
    bool all = true;
    for (int s = 0; s < net.n() && all; ++s) {
      std::vector<bool> seen = reach(rev, s);
      all = seen[static_cast<std::size_t>(c)];
    }
    if (all) return true;
  }
  return false;
}

std::string digest(const Network& net) {
  std::string s = std::to_string(net.n());
  for (const InputMap& sigma : net.inputs()) {
    s += '|';
    for (int i = 1; i <= net.n(); ++i) {
      if (i > 1) s += ',';
      s += std::to_string(sigma(i));
    }
  }
  return s;
}

}  // namespace cellnet
