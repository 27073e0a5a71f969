#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// Finite approximation of a member of the dimension-k space: the images of
/// the first `leaves.size()` length-k sequences, listed in well-order.
struct EkApprox {
  int arity = 2;
  std::vector<std::vector<int>> leaves;
};

enum class Rel : std::uint8_t { lt, eq, gt };

char rel_char(Rel r);

/// Full {<,=,>} relation matrix between two strictly increasing length-k
/// sequences, normalized so the well-order-smaller one is the column side.
struct PairPattern {
  int arity = 2;
  std::vector<Rel> rel;  // row-major k*k; rel[i*k+j] compares s[i] with t[j]

  /// Rows joined with '|' using the characters <, =, >.
  std::string key() const;

  friend bool operator==(const PairPattern&, const PairPattern&) = default;
};

/// A finite approximation of a canonical member of the dense set where equal
/// i-th entries force equal (i-1)-th entries: labels are assigned to the
/// truncated sequence tree in well-order, each strictly above everything
/// assigned before, and each leaf maps to its label path.
EkApprox canonical_dk_member(int k, int num_leaves);

PairPattern pair_pattern(const std::vector<int>& s, const std::vector<int>& t);

/// Classification by recursive cases on the last two coordinates: either the
/// level-(k-1) prefixes coincide, or the pair reduces (possibly with its
/// orientation flipped) to a level-(k-1) pair; level 2 bottoms out in the
/// four two-dimensional configurations. Strictly coarser than matrix equality
/// from k = 3 on: matrices that differ only in where the smaller sequence's
/// tail falls against the larger one's low entries share a chain.
std::string pair_case_chain(const std::vector<int>& s, const std::vector<int>& t);

struct PairClassCount {
  int count = 0;
  std::vector<PairPattern> classes;  // one representative per class, by key
};

struct PairClassBudget {
  int initial_leaves = 20;
  int growth_step = 20;
  int max_leaves = 400;
};

/// Number of case-chain classes realized in the canonical witness, grown
/// until a dimension-scaled run of growth steps adds no new class. This is
/// the count the level recursion 3c+1 produces.
PairClassCount count_pair_classes(int k, const PairClassBudget& budget = {});

/// Refinement of count_pair_classes that separates full relation matrices.
/// Equals it at k = 2 and exceeds it from k = 3 on.
PairClassCount count_matrix_classes(int k, const PairClassBudget& budget = {});

/// Length-l prefixes of the leaves, deduplicated and sorted in well-order.
EkApprox project(const EkApprox& a, int l);

}  // namespace ramsey
