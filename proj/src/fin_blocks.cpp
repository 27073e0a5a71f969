#include "ramsey/fin_blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ramsey {

FinFunc::FinFunc(int ceiling, std::vector<std::pair<int, int>> entries)
    : ceiling_(ceiling), entries_(std::move(entries)) {
  if (ceiling_ < 1) fail(Errc::ceiling_underflow, "ceiling must be >= 1");
  if (entries_.empty()) fail(Errc::degenerate_input, "support must be nonempty");
  int max_value = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& [pos, value] = entries_[i];
    if (pos < 0) fail(Errc::degenerate_input, "negative position");
    if (i > 0 && entries_[i - 1].first >= pos)
      fail(Errc::degenerate_input, "positions must be strictly increasing");
    if (value < 1 || value > ceiling_)
      fail(Errc::degenerate_input, "value " + std::to_string(value) +
                                       " outside 1.." + std::to_string(ceiling_));
    max_value = std::max(max_value, value);
  }
  if (max_value != ceiling_)
    fail(Errc::degenerate_input,
         "ceiling " + std::to_string(ceiling_) + " is not attained");
}

int FinFunc::value_at(int pos) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::make_pair(pos, 0));
  if (it != entries_.end() && it->first == pos) return it->second;
  return 0;
}

BlockSeq::BlockSeq(int ceiling, std::vector<FinFunc> funcs)
    : ceiling_(ceiling), funcs_(std::move(funcs)) {
  if (ceiling_ < 1) fail(Errc::ceiling_underflow, "ceiling must be >= 1");
  for (std::size_t i = 0; i < funcs_.size(); ++i) {
    if (funcs_[i].ceiling() != ceiling_)
      fail(Errc::arity_mismatch, "member ceiling differs from sequence ceiling");
    if (i > 0 && funcs_[i - 1].max_support() >= funcs_[i].min_support())
      fail(Errc::overlapping_support, "supports must be strictly separated");
  }
}

FinFunc tee(const FinFunc& f, int i) {
  if (i < 0) fail(Errc::degenerate_input, "decrement count must be >= 0");
  if (i >= f.ceiling())
    fail(Errc::ceiling_underflow, "decrementing " + std::to_string(i) +
                                      " times empties a ceiling-" +
                                      std::to_string(f.ceiling()) + " function");
  std::vector<std::pair<int, int>> entries;
  for (const auto& [pos, value] : f.entries())
    if (value - i > 0) entries.emplace_back(pos, value - i);
  return FinFunc(f.ceiling() - i, std::move(entries));
}

FinFunc sum_disjoint(const FinFunc& f, const FinFunc& g) {
  std::vector<std::pair<int, int>> entries;
  entries.reserve(f.entries().size() + g.entries().size());
  auto it_f = f.entries().begin();
  auto it_g = g.entries().begin();
  while (it_f != f.entries().end() && it_g != g.entries().end()) {
    if (it_f->first == it_g->first)
      fail(Errc::overlapping_support,
           "supports share position " + std::to_string(it_f->first));
    if (it_f->first < it_g->first)
      entries.push_back(*it_f++);
    else
      entries.push_back(*it_g++);
  }
  entries.insert(entries.end(), it_f, f.entries().end());
  entries.insert(entries.end(), it_g, g.entries().end());
  return FinFunc(std::max(f.ceiling(), g.ceiling()), std::move(entries));
}

std::vector<FinFunc> gen_semigroup(const BlockSeq& F, int j) {
  const int k = F.ceiling();
  if (j < 1 || j > k) fail(Errc::degenerate_input, "level must be in 1..ceiling");

  std::set<std::vector<std::pair<int, int>>> seen;
  const std::size_t count = F.length();
  std::vector<int> exponents(count, 0);

  // Walk every exponent vector over {0..k} per block; k means "leave out".
  for (;;) {
    std::map<int, int> values;
    for (std::size_t b = 0; b < count; ++b) {
      const int e = exponents[b];
      if (e >= F.funcs()[b].ceiling()) continue;  // decremented to nothing
      for (const auto& [pos, value] : F.funcs()[b].entries())
        if (value - e > 0) values[pos] += value - e;
    }
    int max_value = 0;
    for (const auto& [pos, value] : values) max_value = std::max(max_value, value);
    if (max_value == j)
      seen.insert(std::vector<std::pair<int, int>>(values.begin(), values.end()));

    std::size_t carry = 0;
    while (carry < count && exponents[carry] == k) exponents[carry++] = 0;
    if (carry == count) break;
    ++exponents[carry];
  }

  std::vector<FinFunc> out;
  out.reserve(seen.size());
  for (const auto& entries : seen) out.emplace_back(j, entries);
  return out;
}

namespace {

// Decomposition of one function over the blocks of G: on each touched block
// the function must equal a single decrement of that block.
bool decomposes_over(const FinFunc& f, const BlockSeq& G) {
  std::size_t covered = 0;
  for (const FinFunc& g : G.funcs()) {
    // Entries of f inside g's support range.
    bool touches = false;
    for (const auto& [pos, value] : f.entries())
      if (pos >= g.min_support() && pos <= g.max_support() && value > 0)
        touches = true;
    if (!touches) continue;

    // Single decrement: fix it from any shared support point.
    int decrement = -1;
    for (const auto& [pos, g_value] : g.entries()) {
      const int f_value = f.value_at(pos);
      if (f_value > 0) {
        decrement = g_value - f_value;
        break;
      }
    }
    if (decrement < 0 || decrement >= g.ceiling()) return false;
    for (const auto& [pos, g_value] : g.entries()) {
      if (f.value_at(pos) != std::max(g_value - decrement, 0)) return false;
    }
    for (const auto& [pos, value] : f.entries())
      if (pos >= g.min_support() && pos <= g.max_support() &&
          g.value_at(pos) == 0)
        return false;  // support sticks out between g's entries
    for (const auto& [pos, g_value] : g.entries())
      if (g_value - decrement > 0) ++covered;
  }
  return covered == f.entries().size();
}

}  // namespace

bool is_block_subseq(const BlockSeq& F, const BlockSeq& G) {
  if (F.ceiling() != G.ceiling())
    fail(Errc::arity_mismatch, "sequences live at different levels");
  for (const FinFunc& f : F.funcs())
    if (!decomposes_over(f, G)) return false;
  return true;
}

BlockSeq from_set(const std::vector<int>& A, int k) {
  if (A.size() < 2) fail(Errc::too_few_points, "need at least two points");
  for (std::size_t i = 1; i < A.size(); ++i)
    if (A[i - 1] >= A[i])
      fail(Errc::degenerate_input, "points must be strictly increasing");
  std::vector<FinFunc> funcs;
  funcs.reserve(A.size() - 1);
  for (std::size_t n = 0; n + 1 < A.size(); ++n) {
    std::vector<std::pair<int, int>> entries;
    for (int pos = A[n]; pos < A[n + 1]; ++pos) entries.emplace_back(pos, k);
    funcs.emplace_back(k, std::move(entries));
  }
  return BlockSeq(k, std::move(funcs));
}

std::pair<std::vector<int>, std::vector<int>> projections(const BlockSeq& F) {
  if (F.length() == 0) fail(Errc::degenerate_input, "sequence must be nonempty");
  std::vector<int> mins;
  std::vector<int> maxs;
  for (const FinFunc& f : F.funcs()) {
    mins.push_back(f.min_support());
    maxs.push_back(f.max_support());
  }
  return {mins, maxs};
}

}  // namespace ramsey
