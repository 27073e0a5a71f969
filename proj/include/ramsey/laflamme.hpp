#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// A maximal node of a level-k block tree: its label path from the root,
/// length k+1 (block stem label first).
using TreePath = std::vector<int>;

/// Finite approximation of a level-k block tree: an ordered list of blocks,
/// each given by the lex-sorted label paths of its maximal nodes. Block i of
/// the canonical tree carries the shape of the i-th canonical block.
struct TkApprox {
  int level = 1;
  std::vector<std::vector<TreePath>> blocks;

  std::size_t leaf_count() const;
};

/// First m blocks of the canonical level-k tree. Level 1 block n has leaves
/// (n,0)..(n,n); at level k+1, block n is the label n prepended to the first
/// n+1 blocks of the canonical level-k tree.
TkApprox build_tree(int k, int m);

/// Canonical key of a subset of maximal nodes: per occupied block, in block
/// order, a nested composition (level 1 contributes plain counts, each higher
/// level one bracket of sub-block shapes). Two subsets get equal keys exactly
/// when a blockwise position-preserving isomorphism matches them.
using SubsetShape = std::string;

SubsetShape subset_shape(const TkApprox& a, const std::vector<TreePath>& nodes);

struct SubsetClassBudget {
  int max_blocks = 12;
};

/// Number of shape classes of n-subsets of maximal nodes, stabilized over a
/// growing number of blocks (two quiet increments stop the growth).
long long count_subset_classes(int k, int n, const SubsetClassBudget& budget = {});

/// Full inventory behind count_subset_classes, for the invariant checks.
std::vector<SubsetShape> subset_class_inventory(int k, int n,
                                                const SubsetClassBudget& budget = {});

/// The unique position-preserving bijection between the maximal nodes of two
/// same-shape approximations, as parallel (from, to) rows in lex order per
/// block. ShapeMismatch when the per-block structures differ.
std::vector<std::pair<TreePath, TreePath>> iso_map(const TkApprox& a,
                                                   const TkApprox& b);

}  // namespace ramsey
