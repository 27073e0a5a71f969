#include "ramsey/carlson_simpson.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ramsey {

namespace {

int check_growth(const std::vector<int>& digits, Errc on_failure) {
  if (digits.empty()) fail(Errc::degenerate_input, "domain must be nonempty");
  int max_seen = -1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] > max_seen + 1)
      fail(on_failure, "digit " + std::to_string(digits[i]) + " at position " +
                           std::to_string(i) + " breaks the growth order");
    max_seen = std::max(max_seen, digits[i]);
  }
  return max_seen + 1;
}

}  // namespace

FinPartition::FinPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  num_classes_ = check_growth(rgs_, Errc::degenerate_input);
}

FinPartition FinPartition::from_labels(const std::vector<int>& labels) {
  if (labels.empty()) fail(Errc::degenerate_input, "domain must be nonempty");
  std::vector<int> rgs(labels.size());
  std::map<int, int> canon;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = canon.find(labels[i]);
    if (it != canon.end()) {
      rgs[i] = it->second;
    } else {
      rgs[i] = static_cast<int>(canon.size());
      canon.emplace(labels[i], rgs[i]);
    }
  }
  return FinPartition(std::move(rgs));
}

std::vector<int> FinPartition::minima() const {
  std::vector<int> out(num_classes_, -1);
  for (int i = 0; i < domain_size(); ++i)
    if (out[rgs_[i]] < 0) out[rgs_[i]] = i;
  return out;
}

std::vector<std::vector<int>> FinPartition::classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int i = 0; i < domain_size(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

RigidSurjection::RigidSurjection(std::vector<int> digits)
    : digits_(std::move(digits)) {
  num_classes_ = check_growth(digits_, Errc::not_rigid);
}

RigidSurjection to_surjection(const FinPartition& E) {
  return RigidSurjection(E.rgs());
}

FinPartition from_surjection(const RigidSurjection& h) {
  return FinPartition(h.digits());
}

bool is_coarser(const RigidSurjection& g, const RigidSurjection& h) {
  if (g.domain_size() != h.domain_size())
    fail(Errc::domain_mismatch, "surjections live on different domains");
  // g(n) must be a function of h(n); record the image per h-class.
  std::vector<int> image(h.num_classes(), -1);
  for (int n = 0; n < h.domain_size(); ++n) {
    const int hc = h.digits()[n];
    if (image[hc] < 0)
      image[hc] = g.digits()[n];
    else if (image[hc] != g.digits()[n])
      return false;
  }
  return true;
}

FinPartition approx(const FinPartition& E, int n) {
  if (n < 1) fail(Errc::degenerate_input, "approximation length must be >= 1");
  if (E.num_classes() < n + 1)
    fail(Errc::too_few_classes,
         "need at least " + std::to_string(n + 1) + " classes, have " +
             std::to_string(E.num_classes()));
  const int cut = E.minima()[n];
  return FinPartition(
      std::vector<int>(E.rgs().begin(), E.rgs().begin() + cut));
}

PairColoring::PairColoring(int size, std::vector<std::uint8_t> upper_bits)
    : size_(size), bits_(std::move(upper_bits)) {
  if (size_ < 1) fail(Errc::degenerate_input, "coloring needs a nonempty base");
  const int pairs = size_ * (size_ - 1) / 2;
  const int bytes = (pairs + 7) / 8;
  if (static_cast<int>(bits_.size()) < bytes)
    fail(Errc::degenerate_input, "bit matrix shorter than the pair count");
}

PairColoring PairColoring::constant(int size, int color) {
  const int pairs = size * (size - 1) / 2;
  std::vector<std::uint8_t> bits((pairs + 7) / 8,
                                 color ? std::uint8_t{0xff} : std::uint8_t{0});
  return PairColoring(size, std::move(bits));
}

int PairColoring::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

int PairColoring::color(int i, int j) const {
  if (i == j) fail(Errc::equal_inputs, "pair members must differ");
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    fail(Errc::element_out_of_range, "pair member outside the base");
  const int idx = pair_index(i, j);
  return (bits_[idx / 8] >> (idx % 8)) & 1;
}

namespace {

bool monochromatic(const PairColoring& c, const std::vector<int>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (c.color(subset[i], subset[j]) != c.color(subset[0], subset[1]))
        return false;
  return true;
}

// Lexicographically ordered q-subsets of {0..m-1}; returns false when done.
bool next_subset(std::vector<int>& subset, int m) {
  const int q = static_cast<int>(subset.size());
  for (int p = q - 1; p >= 0; --p) {
    if (subset[p] < m - (q - p)) {
      ++subset[p];
      for (int t = p + 1; t < q; ++t) subset[t] = subset[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

MonoCoarsening mono_coarsening(const FinPartition& E, const PairColoring& c,
                               int target) {
  if (target < 2) fail(Errc::degenerate_input, "target must be >= 2");
  const std::vector<int> minima = E.minima();
  const int m = static_cast<int>(minima.size());
  if (c.size() != m)
    fail(Errc::domain_mismatch, "coloring base differs from the minima count");

  std::vector<int> chosen;
  for (int q = m; q >= target && chosen.empty(); --q) {
    std::vector<int> subset(q);
    for (int i = 0; i < q; ++i) subset[i] = i;
    do {
      if (monochromatic(c, subset)) {
        chosen = subset;
        break;
      }
    } while (next_subset(subset, m));
  }
  if (chosen.empty())
    fail(Errc::no_monochromatic_set,
         "no monochromatic minima set of size >= " + std::to_string(target));

  std::vector<bool> selected_class(m, false);
  for (int idx : chosen) selected_class[idx] = true;

  // Fresh points open a class when selected, fall into class 0 otherwise;
  // non-fresh points follow their class leader.
  const std::vector<int>& rgs = E.rgs();
  std::vector<int> h(rgs.size());
  std::vector<int> class_image(E.num_classes(), -1);
  int next_class = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const int cls = rgs[i];
    if (class_image[cls] < 0) {
      if (i == 0)
        class_image[cls] = next_class++;  // position 0 always opens class 0
      else if (selected_class[cls])
        class_image[cls] = next_class++;
      else
        class_image[cls] = 0;
    }
    h[i] = class_image[cls];
  }

  MonoCoarsening out{FinPartition(h), {}};
  for (int idx : chosen) out.mono_minima.push_back(minima[idx]);
  return out;
}

}  // namespace ramsey
