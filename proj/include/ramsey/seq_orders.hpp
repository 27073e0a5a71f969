#pragma once

#include <cstddef>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// A non-decreasing finite sequence of naturals of length <= arity.
/// The arity bound travels with the value; comparing sequences of different
/// arity is rejected rather than silently coerced.
class NondecSeq {
 public:
  NondecSeq(int arity, std::vector<int> entries);

  int arity() const { return arity_; }
  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int last() const { return entries_.back(); }

  friend bool operator==(const NondecSeq& a, const NondecSeq& b) {
    return a.arity_ == b.arity_ && a.entries_ == b.entries_;
  }

 private:
  int arity_;
  std::vector<int> entries_;
};

/// Strict lexicographic order: first divergence decides, a proper initial
/// segment comes first. Inputs must be distinct.
bool lex_less(const NondecSeq& s, const NondecSeq& t);

/// The order-type-omega well-order: () first, then by last entry, ties by lex.
bool prec_less(const NondecSeq& s, const NondecSeq& t);

/// n-th length-k sequence in the well-order (0-based).
NondecSeq unrank_full(int k, std::size_t n);

/// Inverse of unrank_full; input must have length exactly k.
std::size_t rank_full(int k, const NondecSeq& s);

/// First `count` members of the full mixed-length well-order on sequences of
/// length <= k.
std::vector<NondecSeq> enumerate_upto(int k, std::size_t count);

/// First `count` members under the lexicographic order.
std::vector<NondecSeq> enumerate_lex(int k, std::size_t count);

namespace detail {
// Raw-vector comparisons used by the space modules on entry sequences that
// are not wrapped in NondecSeq (tree labels, witness images).
bool lex_less_raw(const std::vector<int>& s, const std::vector<int>& t);
bool prec_less_raw(const std::vector<int>& s, const std::vector<int>& t);
}  // namespace detail

}  // namespace ramsey
