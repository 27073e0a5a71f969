#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ramsey/seq_orders.hpp"

using namespace ramsey;

namespace {

NondecSeq seq(int k, std::vector<int> entries) {
  return NondecSeq(k, std::move(entries));
}

}  // namespace

TEST_CASE("lexicographic order") {
  CHECK(lex_less(seq(2, {0, 1}), seq(2, {0, 2})));
  CHECK(lex_less(seq(2, {0}), seq(2, {0, 0})));  // proper initial segment
  CHECK_FALSE(lex_less(seq(2, {1, 1}), seq(2, {0, 2})));
  CHECK(lex_less(seq(2, {}), seq(2, {0})));
  CHECK_FALSE(lex_less(seq(2, {0, 0}), seq(2, {0})));
  CHECK_THROWS_AS(lex_less(seq(2, {0, 1}), seq(2, {0, 1})), Error);
  CHECK_THROWS_AS(lex_less(seq(2, {0}), seq(3, {0, 0})), Error);
}

TEST_CASE("well-order") {
  CHECK(prec_less(seq(2, {0, 2}), seq(2, {1, 2})));
  CHECK(prec_less(seq(2, {1, 1}), seq(2, {0, 2})));
  CHECK(prec_less(seq(2, {}), seq(2, {0})));
  CHECK_FALSE(prec_less(seq(2, {0}), seq(2, {})));
  CHECK_THROWS_AS(prec_less(seq(2, {1}), seq(2, {1})), Error);
}

TEST_CASE("full-length unrank") {
  const std::vector<std::vector<int>> expected = {
      {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(unrank_full(2, n) == seq(2, expected[n]));
  for (int n = 0; n < 20; ++n) CHECK(unrank_full(1, n) == seq(1, {n}));
  CHECK(unrank_full(3, 3) == seq(3, {1, 1, 1}));
  CHECK(unrank_full(3, 4) == seq(3, {0, 0, 2}));
}

TEST_CASE("rank inverts unrank") {
  CHECK(rank_full(2, seq(2, {1, 1})) == 2);
  CHECK(rank_full(1, seq(1, {7})) == 7);
  CHECK(rank_full(2, seq(2, {2, 2})) == 5);
  CHECK_THROWS_AS(rank_full(2, seq(2, {1})), Error);
  for (int k = 1; k <= 5; ++k) {
    // The enumeration is strictly increasing, hence injective; with the
    // first-match rank this pins the inversion on the whole range.
    NondecSeq prev = unrank_full(k, 0);
    for (std::size_t n = 1; n < 10'000; ++n) {
      NondecSeq cur = unrank_full(k, n);
      CHECK(prec_less(prev, cur));
      prev = std::move(cur);
    }
    for (std::size_t n = 0; n < 10'000; n += 97)
      CHECK(rank_full(k, unrank_full(k, n)) == n);
  }
}

TEST_CASE("mixed-length enumeration matches the documented chains") {
  const std::vector<std::vector<int>> expected2 = {
      {}, {0}, {0, 0}, {0, 1}, {1}, {1, 1}, {0, 2}, {1, 2}, {2}, {2, 2}};
  const auto got2 = enumerate_upto(2, 10);
  REQUIRE(got2.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(got2[i] == seq(2, expected2[i]));

  const std::vector<std::vector<int>> expected3 = {
      {}, {0}, {0, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1}, {0, 1, 1}, {1}};
  const auto got3 = enumerate_upto(3, 8);
  REQUIRE(got3.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(got3[i] == seq(3, expected3[i]));

  CHECK(enumerate_upto(4, 1) == std::vector<NondecSeq>{seq(4, {})});
}

TEST_CASE("both orders are strict total orders on enumerated sequences") {
  for (int k : {2, 3}) {
    const auto family = enumerate_upto(k, 200);
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        CHECK(prec_less(family[i], family[j]));
        CHECK_FALSE(prec_less(family[j], family[i]));
        const bool forward = lex_less(family[i], family[j]);
        const bool backward = lex_less(family[j], family[i]);
        CHECK(forward != backward);
      }
    // Transitivity on a prefix of the family.
    const std::size_t cut = 60;
    for (std::size_t a = 0; a < cut; ++a)
      for (std::size_t b = 0; b < cut; ++b)
        for (std::size_t c = 0; c < cut; ++c) {
          if (a == b || b == c || a == c) continue;
          if (lex_less(family[a], family[b]) && lex_less(family[b], family[c]))
            CHECK(lex_less(family[a], family[c]));
        }
  }
}

TEST_CASE("the well-order extends the prefix tree") {
  for (int k : {2, 3}) {
    const auto family = enumerate_upto(k, 200);
    std::vector<std::vector<int>> seen;
    for (const NondecSeq& s : family) {
      for (std::size_t len = 0; len < s.length(); ++len) {
        const std::vector<int> prefix(s.entries().begin(),
                                      s.entries().begin() + len);
        bool found = false;
        for (const auto& earlier : seen)
          if (earlier == prefix) found = true;
        CHECK(found);
      }
      seen.push_back(s.entries());
    }
  }
}

TEST_CASE("lexicographic enumeration") {
  const auto got = enumerate_lex(2, 5);
  const std::vector<std::vector<int>> expected = {{}, {0}, {0, 0}, {0, 1}, {0, 2}};
  REQUIRE(got.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(got[i] == seq(2, expected[i]));
  for (std::size_t i = 1; i < got.size(); ++i)
    CHECK(lex_less(got[i - 1], got[i]));
}

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(seq(2, {1, 0}), Error);      // decreasing
  CHECK_THROWS_AS(seq(1, {0, 0}), Error);      // too long
  CHECK_THROWS_AS(seq(2, {-1}), Error);        // negative
  CHECK_THROWS_AS(NondecSeq(0, {}), Error);    // arity
}
