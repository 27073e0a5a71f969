#include "ramsey/laflamme.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ramsey {

std::size_t TkApprox::leaf_count() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return total;
}

TkApprox build_tree(int k, int m) {
  if (k < 1) fail(Errc::unsupported_space, "level must be >= 1");
  if (m < 1) fail(Errc::degenerate_input, "need at least one block");
  TkApprox out;
  out.level = k;
  out.blocks.resize(m);
  if (k == 1) {
    for (int n = 0; n < m; ++n)
      for (int i = 0; i <= n; ++i) out.blocks[n].push_back({n, i});
    return out;
  }
  for (int n = 0; n < m; ++n) {
    TkApprox inner = build_tree(k - 1, n + 1);
    for (const auto& block : inner.blocks)
      for (const auto& path : block) {
        TreePath extended;
        extended.reserve(path.size() + 1);
        extended.push_back(n);
        extended.insert(extended.end(), path.begin(), path.end());
        out.blocks[n].push_back(std::move(extended));
      }
  }
  return out;
}

namespace {

// Shape of one block's selection; suffixes have length == level.
void block_shape(int level, const std::vector<const int*>& suffixes,
                 std::string& out) {
  if (level == 1) {
    out += std::to_string(suffixes.size());
    return;
  }
  out += '[';
  std::size_t i = 0;
  bool first = true;
  while (i < suffixes.size()) {
    std::size_t j = i;
    while (j < suffixes.size() && suffixes[j][0] == suffixes[i][0]) ++j;
    std::vector<const int*> stripped;
    stripped.reserve(j - i);
    for (std::size_t t = i; t < j; ++t) stripped.push_back(suffixes[t] + 1);
    if (!first) out += ',';
    first = false;
    block_shape(level - 1, stripped, out);
    i = j;
  }
  out += ']';
}

// nodes must be lex-sorted; runs sharing path[0] form the occupied blocks.
std::string shape_of_sorted(int level, const std::vector<TreePath>& nodes) {
  std::string out;
  out.reserve(32);
  out += '{';
  std::size_t i = 0;
  bool first = true;
  while (i < nodes.size()) {
    std::size_t j = i;
    while (j < nodes.size() && nodes[j][0] == nodes[i][0]) ++j;
    std::vector<const int*> suffixes;
    suffixes.reserve(j - i);
    for (std::size_t t = i; t < j; ++t) suffixes.push_back(nodes[t].data() + 1);
    if (!first) out += ',';
    first = false;
    block_shape(level, suffixes, out);
    i = j;
  }
  out += '}';
  return out;
}

}  // namespace

SubsetShape subset_shape(const TkApprox& a, const std::vector<TreePath>& nodes) {
  if (nodes.empty()) fail(Errc::degenerate_input, "subset must be nonempty");
  std::set<TreePath> maximal;
  for (const auto& block : a.blocks)
    for (const auto& path : block) maximal.insert(path);
  std::vector<TreePath> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != nodes.size())
    fail(Errc::degenerate_input, "subset members must be distinct");
  for (const auto& path : sorted)
    if (!maximal.count(path))
      fail(Errc::not_maximal, "node is not a maximal node of the approximation");
  return shape_of_sorted(a.level, sorted);
}

namespace {

struct Counter {
  const std::vector<TreePath>* leaves = nullptr;  // block-major, lex within block
  int level = 1;
  std::unordered_set<std::string> keys;

  void classify(const std::vector<int>& idx) {
    std::vector<TreePath> nodes;
    nodes.reserve(idx.size());
    for (int i : idx) nodes.push_back((*leaves)[i]);
    keys.insert(shape_of_sorted(level, nodes));
  }

  // n-subsets of [0, hi) with at least one index >= lo.
  void enumerate(int n, int lo, int hi) {
    std::vector<int> idx(n);
    combine(idx, 0, 0, n, lo, hi);
  }

  void combine(std::vector<int>& idx, int pos, int start, int n, int lo, int hi) {
    if (pos == n) {
      if (idx.back() >= lo) classify(idx);
      return;
    }
    // Remaining picks must fit and still be able to reach lo.
    for (int i = start; i <= hi - (n - pos); ++i) {
      if (pos == n - 1 && i < lo) {
        i = lo - 1;  // jump: the last pick must land in the new region
        continue;
      }
      idx[pos] = i;
      combine(idx, pos + 1, i + 1, n, lo, hi);
    }
  }
};

}  // namespace

std::vector<SubsetShape> subset_class_inventory(int k, int n,
                                                const SubsetClassBudget& budget) {
  if (k < 1) fail(Errc::unsupported_space, "level must be >= 1");
  if (n < 1) fail(Errc::degenerate_input, "subset size must be >= 1");

  Counter counter;
  counter.level = k;
  std::vector<TreePath> leaves;
  int quiet = 0;
  for (int m = 1; m <= budget.max_blocks; ++m) {
    const int lo = static_cast<int>(leaves.size());
    TkApprox tree = build_tree(k, m);
    for (const auto& path : tree.blocks[m - 1]) leaves.push_back(path);
    counter.leaves = &leaves;
    const std::size_t before = counter.keys.size();
    if (static_cast<int>(leaves.size()) >= n)
      counter.enumerate(n, lo, static_cast<int>(leaves.size()));
    const bool enough = static_cast<int>(leaves.size()) >= n;
    quiet = (enough && counter.keys.size() == before) ? quiet + 1 : 0;
    if (quiet >= 2) {
      std::vector<SubsetShape> out(counter.keys.begin(), counter.keys.end());
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  fail(Errc::budget_exceeded,
       "subset classes did not stabilize within " +
           std::to_string(budget.max_blocks) + " blocks");
}

long long count_subset_classes(int k, int n, const SubsetClassBudget& budget) {
  return static_cast<long long>(subset_class_inventory(k, n, budget).size());
}

namespace {

std::string whole_block_shape(int level, const std::vector<TreePath>& block) {
  std::vector<TreePath> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  return shape_of_sorted(level, sorted);
}

}  // namespace

std::vector<std::pair<TreePath, TreePath>> iso_map(const TkApprox& a,
                                                   const TkApprox& b) {
  if (a.level != b.level)
    fail(Errc::shape_mismatch, "approximations are of different levels");
  if (a.blocks.size() != b.blocks.size())
    fail(Errc::shape_mismatch, "approximations are of different lengths");
  std::vector<std::pair<TreePath, TreePath>> out;
  for (std::size_t j = 0; j < a.blocks.size(); ++j) {
    if (whole_block_shape(a.level, a.blocks[j]) !=
        whole_block_shape(b.level, b.blocks[j]))
      fail(Errc::shape_mismatch,
           "block " + std::to_string(j) + " structures differ");
    std::vector<TreePath> left = a.blocks[j];
    std::vector<TreePath> right = b.blocks[j];
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    for (std::size_t i = 0; i < left.size(); ++i)
      out.emplace_back(left[i], right[i]);
  }
  return out;
}

}  // namespace ramsey
