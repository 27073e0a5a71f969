#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ramsey/space_core.hpp"

using namespace ramsey;

TEST_CASE("every registered space passes the depth-3 audit") {
  const struct {
    Family family;
    int param;
  } spaces[] = {
      {Family::ellentuck_hd, 2}, {Family::laflamme, 1},
      {Family::laflamme, 2},     {Family::hypercube, 2},
      {Family::cliquefree, 3},   {Family::fin, 1},
      {Family::fin, 2},          {Family::carlson_simpson, 1},
  };
  for (const auto& s : spaces) {
    const AuditReport report = audit_axioms(make_space(s.family, s.param), 3);
    REQUIRE(report.checks.size() == 3);
    CHECK(report.checks[0].axiom == "A.1(a)");
    CHECK(report.checks[1].axiom == "A.1(c)");
    CHECK(report.checks[2].axiom == "A.2(a)");
    for (const AuditCheck& check : report.checks) {
      INFO(family_name(s.family), "/", s.param, " ", check.axiom, ": ",
           check.witness);
      CHECK(check.pass);
      CHECK(check.witness.empty());
    }
    CHECK(report.pass());
  }
}

TEST_CASE("spot audit at the default depth") {
  CHECK(audit_axioms(make_space(Family::ellentuck_hd, 2), 4).pass());
  CHECK(audit_axioms(make_space(Family::laflamme, 1), 4).pass());
}

TEST_CASE("the corrupted fixture fails prefix coherence with a witness") {
  const AuditBudget budget;
  auto corrupt = make_corrupt_fragment(4, budget);
  const AuditReport report =
      audit_axioms(*corrupt, make_space(Family::laflamme, 1), 4, budget);
  bool found = false;
  for (const AuditCheck& check : report.checks) {
    if (check.axiom == "A.1(a)") CHECK(check.pass);  // empty prefix survives
    if (check.axiom == "A.1(c)") {
      CHECK_FALSE(check.pass);
      CHECK_FALSE(check.witness.empty());
      found = true;
    }
  }
  CHECK(found);
  CHECK_FALSE(report.pass());
}

TEST_CASE("fragment finitization is reflexive and transitive") {
  for (Family family :
       {Family::laflamme, Family::fin, Family::carlson_simpson,
        Family::ellentuck_hd, Family::hypercube, Family::cliquefree}) {
    int param = 1;
    if (family == Family::fin) param = 2;
    if (family == Family::ellentuck_hd || family == Family::hypercube) param = 2;
    if (family == Family::cliquefree) param = 3;
    const SpaceId space = make_space(family, param);
    AuditBudget budget;
    budget.per_length = 40;
    auto fragment = make_fragment(space, 3, budget);
    const std::size_t n = std::min<std::size_t>(fragment->count(), 60);
    for (std::size_t a = 0; a < n; ++a) CHECK(fragment->leq_fin(a, a));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!fragment->leq_fin(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (fragment->leq_fin(b, c)) CHECK(fragment->leq_fin(a, c));
      }
  }
}

TEST_CASE("down-sets are finite and contain their base") {
  auto fragment = make_fragment(make_space(Family::ellentuck_hd, 2), 3, {});
  REQUIRE(fragment->count() > 0);
  for (std::size_t b = 0; b < fragment->count(); ++b) {
    const auto keys = fragment->leq_fin_keys(b);
    CHECK(!keys.empty());
    CHECK(std::binary_search(keys.begin(), keys.end(), fragment->key(b)));
  }
}

TEST_CASE("invalid depth and space parameters are rejected") {
  CHECK_THROWS_AS(audit_axioms(make_space(Family::laflamme, 1), 0), Error);
  CHECK_THROWS_AS(make_space(Family::ellentuck_hd, 1), Error);
  CHECK_THROWS_AS(make_space(Family::cliquefree, 2), Error);
}

TEST_CASE("restriction length is bounds-checked") {
  auto fragment = make_fragment(make_space(Family::laflamme, 1), 2, {});
  std::size_t longest = 0;
  for (std::size_t a = 0; a < fragment->count(); ++a)
    if (fragment->length(a) > fragment->length(longest)) longest = a;
  REQUIRE(fragment->length(longest) == 2);
  CHECK(fragment->restrict_key(longest, 2) == fragment->key(longest));
  CHECK(fragment->restrict_key(longest, 0) == fragment->empty_key());
  CHECK_THROWS_AS(fragment->restrict_key(longest, 3), Error);
  CHECK_THROWS_AS(fragment->restrict_key(longest, -1), Error);
}
