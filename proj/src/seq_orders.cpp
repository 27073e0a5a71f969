#include "ramsey/seq_orders.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace ramsey {

namespace {

std::string show(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

NondecSeq::NondecSeq(int arity, std::vector<int> entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity_ < 1) fail(Errc::arity_mismatch, "arity must be >= 1");
  if (entries_.size() > static_cast<std::size_t>(arity_))
    fail(Errc::arity_mismatch,
         "sequence " + show(entries_) + " longer than arity " +
             std::to_string(arity_));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      fail(Errc::degenerate_input, "negative entry in " + show(entries_));
    if (i > 0 && entries_[i - 1] > entries_[i])
      fail(Errc::degenerate_input, "entries not non-decreasing in " + show(entries_));
  }
}

namespace detail {

bool lex_less_raw(const std::vector<int>& s, const std::vector<int>& t) {
  std::size_t m = 0;
  while (m < s.size() && m < t.size() && s[m] == t[m]) ++m;
  if (m == s.size()) return s.size() < t.size();  // proper initial segment
  if (m == t.size()) return false;
  return s[m] < t[m];
}

bool prec_less_raw(const std::vector<int>& s, const std::vector<int>& t) {
  if (s.empty()) return !t.empty();
  if (t.empty()) return false;
  if (s.back() != t.back()) return s.back() < t.back();
  return lex_less_raw(s, t);
}

}  // namespace detail

bool lex_less(const NondecSeq& s, const NondecSeq& t) {
  if (s.arity() != t.arity())
    fail(Errc::arity_mismatch, "comparing sequences of arity " +
                                   std::to_string(s.arity()) + " and " +
                                   std::to_string(t.arity()));
  if (s == t) fail(Errc::equal_inputs, "lex order is strict: " + show(s.entries()));
  return detail::lex_less_raw(s.entries(), t.entries());
}

bool prec_less(const NondecSeq& s, const NondecSeq& t) {
  if (s.arity() != t.arity())
    fail(Errc::arity_mismatch, "comparing sequences of arity " +
                                   std::to_string(s.arity()) + " and " +
                                   std::to_string(t.arity()));
  if (s == t) fail(Errc::equal_inputs, "well-order is strict: " + show(s.entries()));
  return detail::prec_less_raw(s.entries(), t.entries());
}

namespace {

// Successor within the fixed-length stream: lex-advance the prefix under the
// current last entry, else bump the last entry and zero the prefix.
void full_successor(std::vector<int>& v) {
  const int len = static_cast<int>(v.size());
  const int last = v[len - 1];
  for (int p = len - 2; p >= 0; --p) {
    if (v[p] < last) {
      ++v[p];
      for (int q = p + 1; q <= len - 2; ++q) v[q] = v[p];
      return;
    }
  }
  for (int q = 0; q <= len - 2; ++q) v[q] = 0;
  v[len - 1] = last + 1;
}

constexpr std::size_t kRankScanCap = 5'000'000;

// All access happens under the lock; callers get copies, so concurrent
// growth behaves exactly like no cache at all.
class FullChainCache {
 public:
  std::vector<int> at(int k, std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& chain = chains_[k];
    grow(chain, k, n + 1);
    return chain[n];
  }

  std::size_t rank_of(int k, const std::vector<int>& s) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& chain = chains_[k];
    for (std::size_t i = 0;; ) {
      grow(chain, k, i + 1024);
      for (const std::size_t end = chain.size(); i < end; ++i) {
        if (chain[i] == s) return i;
        if (detail::prec_less_raw(s, chain[i]))
          fail(Errc::degenerate_input,
               "sequence not in the enumeration: " + show(s));
      }
      if (i > kRankScanCap)
        fail(Errc::budget_exceeded, "rank scan exceeded cap");
    }
  }

 private:
  static void grow(std::vector<std::vector<int>>& chain, int k,
                   std::size_t upto) {
    if (chain.empty()) chain.push_back(std::vector<int>(k, 0));
    while (chain.size() < upto) {
      std::vector<int> next = chain.back();
      full_successor(next);
      chain.push_back(std::move(next));
    }
  }

  std::mutex mu_;
  std::map<int, std::vector<std::vector<int>>> chains_;
};

FullChainCache& full_chain_cache() {
  static FullChainCache cache;
  return cache;
}

}  // namespace

NondecSeq unrank_full(int k, std::size_t n) {
  if (k < 1) fail(Errc::arity_mismatch, "arity must be >= 1");
  return NondecSeq(k, full_chain_cache().at(k, n));
}

std::size_t rank_full(int k, const NondecSeq& s) {
  if (k < 1) fail(Errc::arity_mismatch, "arity must be >= 1");
  if (s.length() != static_cast<std::size_t>(k))
    fail(Errc::arity_mismatch, "rank_full needs a length-" + std::to_string(k) +
                                   " sequence, got " + show(s.entries()));
  return full_chain_cache().rank_of(k, s.entries());
}

std::vector<NondecSeq> enumerate_upto(int k, std::size_t count) {
  if (k < 1) fail(Errc::arity_mismatch, "arity must be >= 1");
  std::vector<NondecSeq> out;
  if (count == 0) return out;
  out.emplace_back(k, std::vector<int>{});
  // One stream per positive length, each already in well-order; merge.
  std::vector<std::vector<int>> head(k + 1);
  for (int len = 1; len <= k; ++len) head[len] = std::vector<int>(len, 0);
  while (out.size() < count) {
    int best = 1;
    for (int len = 2; len <= k; ++len)
      if (detail::prec_less_raw(head[len], head[best])) best = len;
    out.emplace_back(k, head[best]);
    full_successor(head[best]);
  }
  return out;
}

std::vector<NondecSeq> enumerate_lex(int k, std::size_t count) {
  if (k < 1) fail(Errc::arity_mismatch, "arity must be >= 1");
  std::vector<NondecSeq> out;
  std::vector<int> cur;
  while (out.size() < count) {
    out.emplace_back(k, cur);
    if (static_cast<int>(cur.size()) < k) {
      cur.push_back(cur.empty() ? 0 : cur.back());
    } else {
      ++cur.back();
    }
  }
  return out;
}

}  // namespace ramsey
