#include "ramsey/ellentuck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ramsey/seq_orders.hpp"

namespace ramsey {

char rel_char(Rel r) {
  switch (r) {
    case Rel::lt: return '<';
    case Rel::eq: return '=';
    case Rel::gt: return '>';
  }
  return '?';
}

std::string PairPattern::key() const {
  std::string out;
  for (int i = 0; i < arity; ++i) {
    if (i) out += '|';
    for (int j = 0; j < arity; ++j) out += rel_char(rel[i * arity + j]);
  }
  return out;
}

EkApprox canonical_dk_member(int k, int num_leaves) {
  if (k < 2) fail(Errc::unsupported_space, "dimension must be >= 2");
  if (num_leaves < 0) fail(Errc::degenerate_input, "negative leaf count");

  // All proper-prefix nodes of the first num_leaves full sequences, in
  // well-order; label position in that order is the assigned integer.
  std::vector<std::vector<int>> domain_leaves;
  domain_leaves.reserve(num_leaves);
  for (int i = 0; i < num_leaves; ++i)
    domain_leaves.push_back(unrank_full(k, i).entries());

  std::set<std::vector<int>> node_set;
  for (const auto& leaf : domain_leaves)
    for (std::size_t len = 1; len <= leaf.size(); ++len)
      node_set.insert(std::vector<int>(leaf.begin(), leaf.begin() + len));

  std::vector<std::vector<int>> nodes(node_set.begin(), node_set.end());
  std::sort(nodes.begin(), nodes.end(), detail::prec_less_raw);
  std::map<std::vector<int>, int> label;
  for (std::size_t i = 0; i < nodes.size(); ++i) label[nodes[i]] = static_cast<int>(i);

  EkApprox out;
  out.arity = k;
  out.leaves.reserve(domain_leaves.size());
  for (const auto& leaf : domain_leaves) {
    std::vector<int> image(leaf.size());
    std::vector<int> prefix;
    for (std::size_t len = 0; len < leaf.size(); ++len) {
      prefix.push_back(leaf[len]);
      image[len] = label.at(prefix);
    }
    out.leaves.push_back(std::move(image));
  }
  return out;
}

namespace {

void require_strictly_increasing(const std::vector<int>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i])
      fail(Errc::degenerate_input, "sequence entries not strictly increasing");
}

}  // namespace

PairPattern pair_pattern(const std::vector<int>& s_in, const std::vector<int>& t_in) {
  if (s_in.size() != t_in.size() || s_in.empty())
    fail(Errc::arity_mismatch, "pair must be two sequences of one length");
  if (s_in == t_in) fail(Errc::equal_inputs, "pair members must differ");
  require_strictly_increasing(s_in);
  require_strictly_increasing(t_in);

  const std::vector<int>* s = &s_in;
  const std::vector<int>* t = &t_in;
  if (detail::prec_less_raw(s_in, t_in)) std::swap(s, t);  // want t before s

  const int k = static_cast<int>(s->size());
  PairPattern p;
  p.arity = k;
  p.rel.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int a = (*s)[i];
      const int b = (*t)[j];
      p.rel[i * k + j] = a < b ? Rel::lt : a == b ? Rel::eq : Rel::gt;
    }
  return p;
}

std::string pair_case_chain(const std::vector<int>& s_in,
                            const std::vector<int>& t_in) {
  if (s_in.size() != t_in.size() || s_in.size() < 2)
    fail(Errc::arity_mismatch, "pair must be two sequences of one length >= 2");
  if (s_in == t_in) fail(Errc::equal_inputs, "pair members must differ");
  require_strictly_increasing(s_in);
  require_strictly_increasing(t_in);

  std::vector<int> s = s_in;
  std::vector<int> t = t_in;
  if (detail::prec_less_raw(s, t)) std::swap(s, t);  // want t before s

  std::string chain;
  while (s.size() > 2) {
    const std::size_t m = s.size();
    if (t[m - 2] == s[m - 2]) return chain + "P";  // shared level prefix
    if (t[m - 1] < s[m - 2]) {
      chain += "i.";
    } else if (t[m - 2] < s[m - 2]) {
      chain += "ii.";
    } else {
      chain += "iii.";
      std::swap(s, t);  // the truncations reverse their order
    }
    s.pop_back();
    t.pop_back();
  }
  if (t[0] == s[0]) return chain + "E";
  if (t[1] < s[0]) return chain + "B";
  if (t[0] < s[0]) return chain + "C";
  return chain + "D";
}

namespace {

PairClassCount stabilized_classes(
    int k, const PairClassBudget& budget,
    const std::function<std::string(const std::vector<int>&,
                                    const std::vector<int>&)>& classify) {
  if (k < 2) fail(Errc::unsupported_space, "dimension must be >= 2");

  // Fresh classes need node spreads that widen with the dimension, so the
  // growth can pause longer before the inventory completes; the quiet window
  // scales accordingly while the leaf cap keeps failure loud.
  const int quiet_needed = std::max(2, k - 2);
  std::map<std::string, PairPattern> seen;  // class -> least representative
  int quiet_steps = 0;
  for (int n = budget.initial_leaves; n <= budget.max_leaves;
       n += budget.growth_step) {
    const EkApprox witness = canonical_dk_member(k, n);
    const std::size_t before = seen.size();
    for (std::size_t i = 0; i < witness.leaves.size(); ++i)
      for (std::size_t j = i + 1; j < witness.leaves.size(); ++j) {
        PairPattern p = pair_pattern(witness.leaves[i], witness.leaves[j]);
        auto [it, fresh] = seen.emplace(
            classify(witness.leaves[i], witness.leaves[j]), p);
        if (!fresh && p.key() < it->second.key()) it->second = std::move(p);
      }
    quiet_steps = seen.size() == before ? quiet_steps + 1 : 0;
    if (quiet_steps >= quiet_needed) {
      PairClassCount out;
      out.count = static_cast<int>(seen.size());
      for (auto& [key, pattern] : seen) out.classes.push_back(pattern);
      std::sort(out.classes.begin(), out.classes.end(),
                [](const PairPattern& a, const PairPattern& b) {
                  return a.key() < b.key();
                });
      return out;
    }
  }
  fail(Errc::budget_exceeded,
       "pair classes did not stabilize within " +
           std::to_string(budget.max_leaves) + " leaves");
}

}  // namespace

PairClassCount count_pair_classes(int k, const PairClassBudget& budget) {
  return stabilized_classes(k, budget, pair_case_chain);
}

PairClassCount count_matrix_classes(int k, const PairClassBudget& budget) {
  return stabilized_classes(
      k, budget,
      [](const std::vector<int>& s, const std::vector<int>& t) {
        return pair_pattern(s, t).key();
      });
}

EkApprox project(const EkApprox& a, int l) {
  if (l < 1 || l >= a.arity)
    fail(Errc::arity_error, "projection length must be in [1, arity)");
  std::set<std::vector<int>> prefixes;
  for (const auto& leaf : a.leaves)
    prefixes.insert(std::vector<int>(leaf.begin(), leaf.begin() + l));
  EkApprox out;
  out.arity = l;
  out.leaves.assign(prefixes.begin(), prefixes.end());
  std::sort(out.leaves.begin(), out.leaves.end(), detail::prec_less_raw);
  return out;
}

}  // namespace ramsey
