#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "ramsey/ellentuck.hpp"
#include "ramsey/seq_orders.hpp"

using namespace ramsey;

namespace {

int lcp(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  while (n < static_cast<int>(a.size()) && n < static_cast<int>(b.size()) &&
         a[n] == b[n])
    ++n;
  return n;
}

}  // namespace

TEST_CASE("canonical witness structure") {
  const EkApprox w3 = canonical_dk_member(2, 3);
  REQUIRE(w3.leaves.size() == 3);
  // Images of (0,0),(0,1),(1,1): the first two share their first entry.
  CHECK(w3.leaves[0][0] == w3.leaves[1][0]);
  CHECK(w3.leaves[0][0] != w3.leaves[2][0]);
  CHECK(w3.leaves[0][1] != w3.leaves[1][1]);

  const EkApprox w1 = canonical_dk_member(2, 1);
  REQUIRE(w1.leaves.size() == 1);
  CHECK(w1.leaves[0][0] < w1.leaves[0][1]);

  // Sharing pattern of (0,0,0),(0,0,1),(0,1,1),(1,1,1).
  const EkApprox v = canonical_dk_member(3, 4);
  REQUIRE(v.leaves.size() == 4);
  const int expected_lcp[4][4] = {{3, 2, 1, 0},
                                  {2, 3, 1, 0},
                                  {1, 1, 3, 0},
                                  {0, 0, 0, 3}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(lcp(v.leaves[i], v.leaves[j]) == expected_lcp[i][j]);
}

TEST_CASE("witness satisfies the density property and stays coherent") {
  for (int k : {2, 3, 4}) {
    const EkApprox w = canonical_dk_member(k, 60);
    for (const auto& leaf : w.leaves)
      for (std::size_t i = 1; i < leaf.size(); ++i) CHECK(leaf[i - 1] < leaf[i]);
    for (std::size_t a = 0; a < w.leaves.size(); ++a)
      for (std::size_t b = a + 1; b < w.leaves.size(); ++b) {
        CHECK(detail::prec_less_raw(w.leaves[a], w.leaves[b]));
        for (int i = 1; i < k; ++i)
          if (w.leaves[a][i] == w.leaves[b][i])
            CHECK(w.leaves[a][i - 1] == w.leaves[b][i - 1]);
      }
  }
}

TEST_CASE("pair patterns reproduce the four two-dimensional cases") {
  CHECK(pair_pattern({1, 3}, {0, 2}).key() == "><|>>");  // interleaved
  CHECK(pair_pattern({0, 3}, {0, 2}).key() == "=<|>>");  // shared first entry
  CHECK(pair_pattern({2, 3}, {0, 1}).key() == ">>|>>");  // fully separated
  CHECK(pair_pattern({0, 3}, {1, 2}).key() == "<<|>>");  // nested
}

TEST_CASE("pair pattern normalization and validation") {
  CHECK(pair_pattern({1, 3}, {0, 2}) == pair_pattern({0, 2}, {1, 3}));
  CHECK_THROWS_AS(pair_pattern({1, 1}, {0, 2}), Error);
  CHECK_THROWS_AS(pair_pattern({0, 2}, {0, 2}), Error);
  CHECK_THROWS_AS(pair_pattern({0, 2}, {0, 1, 2}), Error);
}

TEST_CASE("stabilized case-chain counts match the geometric sums") {
  CHECK(count_pair_classes(2).count == 4);
  CHECK(count_pair_classes(3).count == 13);
  CHECK(count_pair_classes(4).count == 40);
  CHECK(count_pair_classes(5).count == 121);  // 3c+1 keeps holding

  // Cross-position equalities never arise in the canonical member.
  for (const PairPattern& p : count_matrix_classes(3).classes)
    for (int i = 0; i < p.arity; ++i)
      for (int j = 0; j < p.arity; ++j)
        if (i != j) CHECK(p.rel[i * p.arity + j] != Rel::eq);
}

TEST_CASE("matrix classes refine the case chains") {
  // At dimension 2 the classifications coincide; from dimension 3 on the
  // matrices split chains: the smaller sequence's tail can fall on either
  // side of the larger one's low entries without changing any case tag.
  // General position admits sum-of-ballot-numbers many matrices: the class
  // count is the partial sum of C(2m-1, m-1) over m <= k.
  CHECK(count_matrix_classes(2).count == 4);
  CHECK(count_matrix_classes(3).count == 14);
  CHECK(count_matrix_classes(4).count == 49);
  CHECK(count_matrix_classes(5).count == 175);

  CHECK(pair_case_chain({1, 2, 3}, {17, 18, 19}) ==
        pair_case_chain({1, 2, 10}, {7, 15, 16}));
  CHECK(pair_pattern({1, 2, 3}, {17, 18, 19}) !=
        pair_pattern({1, 2, 10}, {7, 15, 16}));

  // The chain is a function of the matrix: equal matrices, equal chains.
  const EkApprox w = canonical_dk_member(3, 40);
  std::map<std::string, std::string> chain_of_matrix;
  for (std::size_t i = 0; i < w.leaves.size(); ++i)
    for (std::size_t j = i + 1; j < w.leaves.size(); ++j) {
      const std::string matrix = pair_pattern(w.leaves[i], w.leaves[j]).key();
      const std::string chain = pair_case_chain(w.leaves[i], w.leaves[j]);
      auto [it, fresh] = chain_of_matrix.emplace(matrix, chain);
      if (!fresh) CHECK(it->second == chain);
    }
}

TEST_CASE("two-dimensional case chains name the four configurations") {
  CHECK(pair_case_chain({0, 3}, {0, 2}) == "E");
  CHECK(pair_case_chain({2, 3}, {0, 1}) == "B");
  CHECK(pair_case_chain({1, 3}, {0, 2}) == "C");
  CHECK(pair_case_chain({0, 3}, {1, 2}) == "D");
  CHECK(pair_case_chain({0, 2}, {1, 3}) == "C");  // normalization swaps
}

TEST_CASE("pair-class growth failure is loud") {
  PairClassBudget tiny;
  tiny.initial_leaves = 2;
  tiny.growth_step = 1;
  tiny.max_leaves = 3;
  CHECK_THROWS_AS(count_pair_classes(2, tiny), Error);
}

TEST_CASE("projection") {
  const EkApprox w3 = canonical_dk_member(2, 3);
  const EkApprox p1 = project(w3, 1);
  CHECK(p1.arity == 1);
  CHECK(p1.leaves.size() == 2);  // shared first entry collapses

  const EkApprox w6 = canonical_dk_member(2, 6);
  CHECK(project(w6, 1).leaves.size() == 3);

  // All leaves distinct in the first coordinate: count preserved.
  EkApprox spread;
  spread.arity = 2;
  spread.leaves = {{0, 1}, {2, 3}, {4, 5}};
  CHECK(project(spread, 1).leaves.size() == 3);

  const EkApprox q = project(canonical_dk_member(3, 10), 2);
  CHECK(q.arity == 2);
  for (std::size_t i = 1; i < q.leaves.size(); ++i)
    CHECK(detail::prec_less_raw(q.leaves[i - 1], q.leaves[i]));

  CHECK_THROWS_AS(project(w3, 2), Error);
  CHECK_THROWS_AS(project(w3, 0), Error);
}

TEST_CASE("patterns depend only on order structure as the witness grows") {
  const EkApprox small = canonical_dk_member(2, 10);
  const EkApprox large = canonical_dk_member(2, 40);
  for (std::size_t i = 0; i < small.leaves.size(); ++i)
    for (std::size_t j = i + 1; j < small.leaves.size(); ++j)
      CHECK(pair_pattern(small.leaves[i], small.leaves[j]) ==
            pair_pattern(large.leaves[i], large.leaves[j]));
}
