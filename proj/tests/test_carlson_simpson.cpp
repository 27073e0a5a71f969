#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "ramsey/carlson_simpson.hpp"

using namespace ramsey;

namespace {

void for_each_partition(int domain,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> digits;
  std::function<void(int)> step = [&](int max_used) {
    if (static_cast<int>(digits.size()) == domain) {
      visit(digits);
      return;
    }
    for (int d = 0; d <= max_used + 1; ++d) {
      digits.push_back(d);
      step(std::max(max_used, d));
      digits.pop_back();
    }
  };
  step(-1);
}

}  // namespace

TEST_CASE("canonical surjection of a partition") {
  // {{0,2},{1,3},{4}} presented through arbitrary labels.
  const FinPartition E = FinPartition::from_labels({7, 5, 7, 5, 9});
  CHECK(E.rgs() == std::vector<int>{0, 1, 0, 1, 2});
  CHECK(to_surjection(E).digits() == std::vector<int>{0, 1, 0, 1, 2});

  CHECK(FinPartition::from_labels({3, 4, 5}).rgs() == std::vector<int>{0, 1, 2});
  CHECK(FinPartition::from_labels({8, 8, 8}).rgs() == std::vector<int>{0, 0, 0});
}

TEST_CASE("rigid surjections decode to partitions") {
  const FinPartition E = from_surjection(RigidSurjection({0, 1, 0, 2}));
  CHECK(E.classes() ==
        std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
  CHECK(from_surjection(to_surjection(FinPartition({0, 1, 2, 1}))) ==
        FinPartition({0, 1, 2, 1}));
  CHECK_THROWS_AS(RigidSurjection({1, 0}), Error);
  CHECK_THROWS_AS(RigidSurjection({0, 2}), Error);
}

TEST_CASE("round trip over every partition of a medium domain") {
  long long count = 0;
  for_each_partition(7, [&](const std::vector<int>& rgs) {
    ++count;
    const FinPartition E(rgs);
    CHECK(from_surjection(to_surjection(E)) == E);
  });
  CHECK(count == 877);  // Bell number of 7
}

TEST_CASE("coarsening order") {
  CHECK(is_coarser(RigidSurjection({0, 0, 0, 1}), RigidSurjection({0, 1, 0, 2})));
  CHECK_FALSE(
      is_coarser(RigidSurjection({0, 1, 0, 2}), RigidSurjection({0, 0, 0, 1})));
  const RigidSurjection g({0, 1, 2});
  CHECK(is_coarser(g, g));
  CHECK_THROWS_AS(is_coarser(g, RigidSurjection({0, 1})), Error);
}

TEST_CASE("coarsening is a partial order on a small domain") {
  std::vector<std::vector<int>> all;
  for_each_partition(5, [&](const std::vector<int>& rgs) { all.push_back(rgs); });
  CHECK(all.size() == 52);
  for (const auto& a : all)
    for (const auto& b : all) {
      const RigidSurjection sa(a);
      const RigidSurjection sb(b);
      if (is_coarser(sa, sb) && is_coarser(sb, sa)) CHECK(a == b);
      for (const auto& c : all)
        if (is_coarser(sa, sb) && is_coarser(sb, RigidSurjection(c)))
          CHECK(is_coarser(sa, RigidSurjection(c)));
    }
}

TEST_CASE("restriction to the first classes") {
  CHECK(approx(FinPartition({0, 1, 0, 1, 2}), 2) == FinPartition({0, 1, 0, 1}));
  const FinPartition E({0, 0, 0, 1, 2});
  CHECK(approx(E, 1) == FinPartition({0, 0, 0}));
  CHECK_THROWS_AS(approx(FinPartition({0, 1, 2}), 3), Error);

  for_each_partition(7, [&](const std::vector<int>& rgs) {
    const FinPartition F(rgs);
    for (int n = 2; n < F.num_classes(); ++n) {
      const FinPartition cut = approx(F, n);
      CHECK(cut.num_classes() == n);
      for (int m = 1; m < n; ++m) CHECK(approx(cut, m) == approx(F, m));
    }
  });
}

TEST_CASE("pair colorings index the upper triangle") {
  CHECK(PairColoring::pair_index(0, 1) == 0);
  CHECK(PairColoring::pair_index(0, 2) == 1);
  CHECK(PairColoring::pair_index(1, 2) == 2);
  CHECK(PairColoring::pair_index(2, 1) == 2);
  const PairColoring c(4, {0b101001});
  CHECK(c.color(0, 1) == 1);
  CHECK(c.color(0, 2) == 0);
  CHECK(c.color(1, 2) == 0);
  CHECK(c.color(0, 3) == 1);
  CHECK_THROWS_AS(c.color(1, 1), Error);
  CHECK_THROWS_AS(c.color(0, 9), Error);
}

TEST_CASE("a constant coloring reproduces the partition") {
  const FinPartition E({0, 1, 0, 2, 1, 3});
  for (int color : {0, 1}) {
    const auto result = mono_coarsening(
        E, PairColoring::constant(E.num_classes(), color), E.num_classes());
    CHECK(result.partition == E);
    CHECK(result.mono_minima == E.minima());
  }
}

TEST_CASE("coarsening toward a monochromatic minima set") {
  // Classes {0,3},{1},{2,4},{5} with a coloring forcing a selection.
  const FinPartition E({0, 1, 2, 0, 2, 3});
  std::vector<std::uint8_t> bits(1, 0);
  bits[0] |= 1 << PairColoring::pair_index(0, 1);
  bits[0] |= 1 << PairColoring::pair_index(0, 2);
  bits[0] |= 1 << PairColoring::pair_index(1, 2);
  const PairColoring c(4, bits);  // {0,1,2} all ones, pairs with 3 zero
  const auto result = mono_coarsening(E, c, 3);
  CHECK(result.mono_minima == std::vector<int>{0, 1, 2});
  CHECK(is_coarser(to_surjection(result.partition), to_surjection(E)));
  CHECK(result.partition.num_classes() == 3);
  // Class 3's opener (position 5) falls into class 0.
  CHECK(result.partition.rgs() == std::vector<int>{0, 1, 2, 0, 2, 0});
}

TEST_CASE("selection failure below the partition threshold") {
  const FinPartition E({0, 1, 2, 3, 4});
  std::uint32_t pentagon = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (j - i == 1 || j - i == 4)
        pentagon |= std::uint32_t{1} << PairColoring::pair_index(i, j);
  const PairColoring c(5, {static_cast<std::uint8_t>(pentagon & 0xff),
                           static_cast<std::uint8_t>(pentagon >> 8)});
  CHECK_THROWS_AS(mono_coarsening(E, c, 3), Error);
  // Size-2 targets still succeed.
  const auto pair_only = mono_coarsening(E, c, 2);
  CHECK(pair_only.mono_minima.size() == 2);
}
