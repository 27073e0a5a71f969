#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ramsey/degree_calc.hpp"

using namespace ramsey;

TEST_CASE("composition enumeration") {
  const auto s3 = compositions(3);
  REQUIRE(s3.size() == 4);
  CHECK(s3[0].parts == std::vector<int>{3});
  CHECK(s3[1].parts == std::vector<int>{1, 2});
  CHECK(s3[2].parts == std::vector<int>{2, 1});
  CHECK(s3[3].parts == std::vector<int>{1, 1, 1});

  CHECK(compositions(1).size() == 1);
  CHECK(compositions(4).size() == 8);
  for (int n = 1; n <= 16; ++n)
    CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("partial-sum bijection") {
  CHECK(psi(Composition{{1, 2, 1}}) == std::vector<int>{0, 2});
  CHECK(psi(Composition{{5}}) == std::vector<int>{});
  CHECK(psi(Composition{{1, 1, 1}}) == std::vector<int>{0, 1});

  CHECK(psi_inv(4, {0, 2}).parts == std::vector<int>{1, 2, 1});
  CHECK(psi_inv(6, {}).parts == std::vector<int>{6});
  CHECK(psi_inv(4, {0, 1, 2}).parts == std::vector<int>{1, 1, 1, 1});

  for (int n = 1; n <= 12; ++n)
    for (const Composition& x : compositions(n))
      CHECK(psi_inv(n, psi(x)) == x);

  CHECK_THROWS_AS(psi_inv(4, {3}), Error);
  CHECK_THROWS_AS(psi(Composition{{0, 2}}), Error);
}

TEST_CASE("degree combinator") {
  CHECK(degree_from_k(KFunction::constant_one(3), 3) == 4);
  CHECK(degree_from_k(KFunction({BigInt(1), BigInt(2)}), 2) == 3);
  CHECK(degree_from_k(KFunction::constant_one(1), 1) == 1);
  for (int n = 1; n <= 16; ++n) {
    BigInt expected = 1;
    for (int i = 1; i < n; ++i) expected *= 2;
    CHECK(degree_from_k(KFunction::constant_one(n), n) == expected);
  }
  CHECK_THROWS_AS(degree_from_k(KFunction::constant_one(2), 3), Error);
}

TEST_CASE("combinator is pointwise monotone in the class counts") {
  const KFunction base({BigInt(1), BigInt(2), BigInt(3)});
  for (int bump = 0; bump < 3; ++bump) {
    std::vector<BigInt> raised = {BigInt(1), BigInt(2), BigInt(3)};
    raised[bump] += 1;
    const KFunction higher(raised);
    for (int n = 1; n <= 3; ++n)
      CHECK(degree_from_k(base, n) <= degree_from_k(higher, n));
  }
}

TEST_CASE("level recursion agrees with the closed form") {
  CHECK(laflamme_recursion(2, 2) == 3);
  CHECK(laflamme_recursion(2, 3) == 9);
  CHECK(laflamme_recursion(1, 4) == 8);
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n) {
      BigInt expected = 1;
      for (int i = 1; i < n; ++i) expected *= k + 1;
      CHECK(laflamme_recursion(k, n) == expected);
    }
}

TEST_CASE("closed forms") {
  CHECK(*closed_form(make_space(Family::laflamme, 3), 3) == 16);
  CHECK(*closed_form(make_space(Family::hypercube, 2), 2) == 5);
  CHECK(*closed_form(make_space(Family::ellentuck_hd, 3), 2) == 13);
  CHECK(*closed_form(make_space(Family::cliquefree, 3), 2) == 3);
  CHECK_FALSE(closed_form(make_space(Family::ellentuck_hd, 2), 3).has_value());
  CHECK_FALSE(closed_form(make_space(Family::hypercube, 2), 3).has_value());
  CHECK_FALSE(closed_form(make_space(Family::fin, 2), 2).has_value());
}

TEST_CASE("cross verification tables") {
  const DegreeTable laf = cross_verify(make_space(Family::laflamme, 1), 4);
  CHECK(laf.pass);
  const BigInt expected[] = {BigInt(1), BigInt(2), BigInt(4), BigInt(8)};
  for (int n = 1; n <= 4; ++n) {
    int methods = 0;
    for (const DegreeRow& row : laf.rows)
      if (row.n == n) {
        ++methods;
        CHECK(row.value == expected[n - 1]);
      }
    CHECK(methods == 3);
  }

  const DegreeTable e2 = cross_verify(make_space(Family::ellentuck_hd, 2), 2);
  CHECK(e2.pass);
  int e2_methods = 0;
  for (const DegreeRow& row : e2.rows)
    if (row.n == 2) {
      ++e2_methods;
      CHECK(row.value == 4);
    }
  CHECK(e2_methods == 2);

  const DegreeTable h3 = cross_verify(make_space(Family::hypercube, 3), 2);
  CHECK(h3.pass);
  for (const DegreeRow& row : h3.rows)
    if (row.n == 2) CHECK(row.value == 14);
}

TEST_CASE("agreement detection rejects a perturbed table") {
  DegreeTable table = cross_verify(make_space(Family::laflamme, 2), 3);
  REQUIRE(table.pass);
  REQUIRE(!table.rows.empty());
  table.rows.front().value += 1;
  CHECK_FALSE(rows_agree(table.rows));
}

TEST_CASE("method dispatch errors") {
  CHECK_THROWS_AS(degree_by_method(make_space(Family::hypercube, 2), 3,
                                   Method::closed),
                  Error);
  CHECK(degree_by_method(make_space(Family::laflamme, 2), 3,
                         Method::combinator) == 9);
}
