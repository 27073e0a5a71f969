#pragma once

#include <utility>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// Finitely supported map into {0..k} that attains k, stored as sorted
/// (position, value) entries with values in 1..k.
class FinFunc {
 public:
  FinFunc(int ceiling, std::vector<std::pair<int, int>> entries);

  int ceiling() const { return ceiling_; }
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  int min_support() const { return entries_.front().first; }
  int max_support() const { return entries_.back().first; }
  int value_at(int pos) const;  // 0 off the support

  friend bool operator==(const FinFunc&, const FinFunc&) = default;
  friend bool operator<(const FinFunc& a, const FinFunc& b) {
    return a.entries_ < b.entries_;
  }

 private:
  int ceiling_;
  std::vector<std::pair<int, int>> entries_;
};

/// Ordered list of FinFuncs with strictly separated supports.
class BlockSeq {
 public:
  BlockSeq(int ceiling, std::vector<FinFunc> funcs);

  int ceiling() const { return ceiling_; }
  const std::vector<FinFunc>& funcs() const { return funcs_; }
  std::size_t length() const { return funcs_.size(); }

  friend bool operator==(const BlockSeq&, const BlockSeq&) = default;

 private:
  int ceiling_;
  std::vector<FinFunc> funcs_;
};

/// i-fold pointwise decrement with floor zero; zero entries are dropped.
FinFunc tee(const FinFunc& f, int i);

/// Entrywise union of two disjointly supported functions.
FinFunc sum_disjoint(const FinFunc& f, const FinFunc& g);

/// The level-j partial subsemigroup generated by F: every sum of decremented
/// blocks over a subsequence whose maximum value is exactly j. Canonically
/// sorted, duplicates removed.
std::vector<FinFunc> gen_semigroup(const BlockSeq& F, int j);

/// True iff every block of F decomposes over G: its support splits along the
/// supports of members of G and agrees with a single decrement of each used
/// member.
bool is_block_subseq(const BlockSeq& F, const BlockSeq& G);

/// The interval block sequence of an increasing point set: block n is
/// constantly k on [A[n], A[n+1]).
BlockSeq from_set(const std::vector<int>& A, int k);

/// (min supports, max supports), each sorted.
std::pair<std::vector<int>, std::vector<int>> projections(const BlockSeq& F);

}  // namespace ramsey
