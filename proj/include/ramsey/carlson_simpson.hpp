#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// Equivalence relation on {0..N-1}, canonically encoded as a restricted
/// growth string: g(0)=0 and g(i) <= max(g(0..i-1)) + 1.
class FinPartition {
 public:
  explicit FinPartition(std::vector<int> rgs);  // validates the growth property

  /// Canonicalizes an arbitrary class labeling via the first-occurrence
  /// recursion (same class as an earlier point, else a fresh index).
  static FinPartition from_labels(const std::vector<int>& labels);

  const std::vector<int>& rgs() const { return rgs_; }
  int domain_size() const { return static_cast<int>(rgs_.size()); }
  int num_classes() const { return num_classes_; }
  std::vector<int> minima() const;          // first occurrence of each class
  std::vector<std::vector<int>> classes() const;

  friend bool operator==(const FinPartition&, const FinPartition&) = default;

 private:
  std::vector<int> rgs_;
  int num_classes_ = 0;
};

/// Onto map whose fiber minima increase with the class index. For finite
/// domains this is exactly the restricted growth property of the digits.
class RigidSurjection {
 public:
  explicit RigidSurjection(std::vector<int> digits);  // NotRigid otherwise

  const std::vector<int>& digits() const { return digits_; }
  int domain_size() const { return static_cast<int>(digits_.size()); }
  int num_classes() const { return num_classes_; }

  friend bool operator==(const RigidSurjection&, const RigidSurjection&) = default;

 private:
  std::vector<int> digits_;
  int num_classes_ = 0;
};

RigidSurjection to_surjection(const FinPartition& E);
FinPartition from_surjection(const RigidSurjection& h);

/// True iff the partition of g is coarser than that of h: agreeing h-digits
/// force agreeing g-digits.
bool is_coarser(const RigidSurjection& g, const RigidSurjection& h);

/// Restriction to the first n classes: cut the string at the first occurrence
/// of class n. Requires at least n+1 classes.
FinPartition approx(const FinPartition& E, int n);

/// Symmetric 2-coloring of pairs of minima indices {0..size-1}.
class PairColoring {
 public:
  PairColoring(int size, std::vector<std::uint8_t> upper_bits);

  static PairColoring constant(int size, int color);

  int size() const { return size_; }
  int color(int i, int j) const;  // i != j, both < size

  /// Bit index of the pair {i<j}: j(j-1)/2 + i (colex by the larger element).
  static int pair_index(int i, int j);

 private:
  int size_;
  std::vector<std::uint8_t> bits_;
};

struct MonoCoarsening {
  FinPartition partition;
  std::vector<int> mono_minima;  // the selected monochromatic minima of E
};

/// Coarsens E so that at least `target` fresh classes open at a monochromatic
/// subset M of E's minima: non-selected fresh points fall into class 0,
/// selected points open new classes. Search order: largest M first, then
/// lexicographic. NoMonochromaticSet when no qualifying M exists.
MonoCoarsening mono_coarsening(const FinPartition& E, const PairColoring& c,
                               int target);

}  // namespace ramsey
