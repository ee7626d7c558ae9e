#include "cellnet/synchrony.hpp"

#include <algorithm>

#include "cellnet/guards.hpp"

namespace cellnet {

CellPartition::CellPartition(int n, std::vector<int> assignment)
    : n_(n), blocks_(0), assignment_(std::move(assignment)) {
  if (n_ <= 0) throw CellOutOfRange("cell count must be positive");
  if (static_cast<int>(assignment_.size()) != n_)
    throw SizeMismatch("partition needs one block index per cell");
  int max_seen = 0;
  for (int b : assignment_) {
    if (b < 1 || b > max_seen + 1)
      throw SizeMismatch(
          "not a restricted-growth string: block indices must start at 1 and "
          "grow by at most one");
    max_seen = std::max(max_seen, b);
  }
  blocks_ = max_seen;
}

CellPartition CellPartition::total(int n) {
  return CellPartition(n, std::vector<int>(static_cast<std::size_t>(n), 1));
}

CellPartition CellPartition::singletons(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
  return CellPartition(n, std::move(a));
}

CellPartition CellPartition::relabeled(const Permutation& pi) const {
  if (pi.n() != n_) throw SizeMismatch("permutation size != cell count");
  // Raw block labels, then renormalize to first-occurrence order.
  std::vector<int> raw(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    raw[static_cast<std::size_t>(pi(i) - 1)] = block_of(i);
  std::vector<int> remap(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> a(static_cast<std::size_t>(n_));
  int next = 0;
  for (int i = 0; i < n_; ++i) {
    int& m = remap[static_cast<std::size_t>(raw[static_cast<std::size_t>(i)])];
    if (m == 0) m = ++next;
    a[static_cast<std::size_t>(i)] = m;
  }
  return CellPartition(n_, std::move(a));
}

std::string CellPartition::to_string() const {
  std::string s = "{";
  for (int b = 1; b <= blocks_; ++b) {
    if (b > 1) s += '|';
    bool first = true;
    for (int i = 1; i <= n_; ++i)
      if (block_of(i) == b) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
      }
  }
  s += '}';
  return s;
}

std::vector<CellPartition> all_partitions(int n) {
  std::vector<CellPartition> out;
  std::vector<int> a(static_cast<std::size_t>(n), 1);
  for (;;) {
    out.emplace_back(n, a);
    // Next restricted-growth string in lexicographic order.
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j)
        max_prefix = std::max(max_prefix, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= max_prefix) break;
    }
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

bool is_balanced(const Network& net, const CellPartition& p) {
  if (p.n() != net.n()) throw SizeMismatch("partition size != cell count");
  for (const InputMap& sigma : net.inputs())
    for (int b = 1; b <= p.block_count(); ++b) {
      int image_block = 0;
      for (int i = 1; i <= net.n(); ++i) {
        if (p.block_of(i) != b) continue;
        int t = p.block_of(sigma(i));
        if (image_block == 0)
          image_block = t;
        else if (t != image_block)
          return false;
      }
    }
  return true;
}

bool is_balanced_matrix_oracle(const Network& net, const CellPartition& p) {
  if (p.n() != net.n()) throw SizeMismatch("partition size != cell count");
  std::size_t n = static_cast<std::size_t>(net.n());
  for (int type = 1; type <= net.k(); ++type) {
    ExactMatrix a = adjacency(net, type);
    for (int b = 1; b <= p.block_count(); ++b) {
      // Indicator column of block b.
      ExactMatrix v(n, 1);
      for (int i = 1; i <= net.n(); ++i)
        if (p.block_of(i) == b) v.at(static_cast<std::size_t>(i - 1), 0) = 1;
      ExactMatrix av = a.mul(v);
      // A * v must be constant on every block of p.
      for (int c = 1; c <= p.block_count(); ++c) {
        bool have = false;
        Rational val;
        for (int i = 1; i <= net.n(); ++i) {
          if (p.block_of(i) != c) continue;
          const Rational& x = av.at(static_cast<std::size_t>(i - 1), 0);
          if (!have) {
            val = x;
            have = true;
          } else if (x != val) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<CellPartition> synchrony_partitions(const Network& net) {
  require_cells_at_most(net.n(), 12, "synchrony_partitions");
  const int n = net.n();
  std::vector<CellPartition> out;
  // Stream the restricted-growth strings instead of materializing Bell(n)
  // partitions at once.
  std::vector<int> a(static_cast<std::size_t>(n), 1);
  for (;;) {
    CellPartition p(n, a);
    if (p.block_count() != n && is_balanced(net, p))
      out.push_back(std::move(p));  // skip all-singletons
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j)
        max_prefix = std::max(max_prefix, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= max_prefix) break;
    }
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_2d_synchrony(const Network& net) {
  if (net.n() != 3)
    throw WrongSize("2-block census is defined for 3-cell networks");
  int count = 0;
  for (const CellPartition& p : all_partitions(3))
    if (p.block_count() == 2 && is_balanced(net, p)) ++count;
  return count;
}

}  // namespace cellnet
