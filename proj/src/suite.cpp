#include "ramsey/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>

#include "ramsey/carlson_simpson.hpp"
#include "ramsey/degree_calc.hpp"
#include "ramsey/ellentuck.hpp"
#include "ramsey/fin_blocks.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/laflamme.hpp"
#include "ramsey/space_core.hpp"

namespace ramsey {

namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;
  long long checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string plural(long long n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

// --- criterion 1: block-tree degrees against the closed form ---------------

void criterion_laflamme(Checker& c) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) {
      long long expected = 1;
      for (int i = 1; i < n; ++i) expected *= k + 1;
      const long long got = count_subset_classes(k, n);
      c.expect(got == expected, "count_subset_classes(" + std::to_string(k) +
                                    "," + std::to_string(n) + ") = " +
                                    std::to_string(got) + ", want " +
                                    std::to_string(expected));
    }
}

// --- criterion 2: sequence-space pair classes -------------------------------

void criterion_e_pairs(Checker& c) {
  const long long expected[] = {4, 13, 40};
  for (int k = 2; k <= 4; ++k) {
    const long long got = count_pair_classes(k).count;
    c.expect(got == expected[k - 2],
             "pair classes at k=" + std::to_string(k) + " = " +
                 std::to_string(got) + ", want " +
                 std::to_string(expected[k - 2]));
  }
}

// --- criterion 3: grid and graph spaces -------------------------------------

void criterion_fraisse(Checker& c) {
  const long long class_expected[] = {4, 13, 40};
  const long long degree_expected[] = {5, 14, 41};
  for (int dim = 2; dim <= 4; ++dim) {
    const SpaceId space = make_space(Family::hypercube, dim);
    const long long classes = count_pair_classes(space);
    c.expect(classes == class_expected[dim - 2],
             "grid pair classes dim=" + std::to_string(dim) + " = " +
                 std::to_string(classes));
    for (Method m : {Method::bruteforce, Method::combinator, Method::closed}) {
      const BigInt degree = degree_by_method(space, 2, m);
      c.expect(degree == degree_expected[dim - 2],
               std::string("grid degree dim=") + std::to_string(dim) + " via " +
                   method_name(m) + " = " + degree.str());
    }
  }
  const SpaceId arrow = make_space(Family::cliquefree, 3);
  c.expect(count_pair_classes(arrow) == 2, "clique-free pair classes != 2");
  for (Method m : {Method::bruteforce, Method::combinator, Method::closed}) {
    const BigInt degree = degree_by_method(arrow, 2, m);
    c.expect(degree == 3, std::string("clique-free degree via ") +
                              method_name(m) + " = " + degree.str());
  }
}

// --- criterion 4: compositions and the subset bijection ---------------------

void criterion_compositions(Checker& c) {
  for (int n = 1; n <= 16; ++n) {
    const std::size_t expected = std::size_t{1} << (n - 1);
    c.expect(compositions(n).size() == expected,
             "|S_" + std::to_string(n) + "| wrong");
  }
  for (int n = 1; n <= 12; ++n) {
    for (const Composition& x : compositions(n))
      c.expect(psi_inv(n, psi(x)) == x,
               "psi round trip failed at n=" + std::to_string(n));
    const std::uint32_t masks = std::uint32_t{1} << (n - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      std::vector<int> subset;
      for (int b = 0; b < n - 1; ++b)
        if (mask & (std::uint32_t{1} << b)) subset.push_back(b);
      c.expect(psi(psi_inv(n, subset)) == subset,
               "inverse round trip failed at n=" + std::to_string(n));
    }
  }
}

// --- criterion 5: three-way agreement ---------------------------------------

void criterion_three_way(Checker& c) {
  const struct {
    Family family;
    int param;
    int n_max;
  } jobs[] = {
      {Family::laflamme, 1, 4},  {Family::laflamme, 2, 4},
      {Family::laflamme, 3, 4},  {Family::ellentuck_hd, 2, 2},
      {Family::ellentuck_hd, 3, 2}, {Family::ellentuck_hd, 4, 2},
      {Family::hypercube, 2, 2}, {Family::hypercube, 3, 2},
      {Family::hypercube, 4, 2}, {Family::cliquefree, 3, 2},
  };
  for (const auto& job : jobs) {
    const SpaceId space = make_space(job.family, job.param);
    const DegreeTable table = cross_verify(space, job.n_max);
    c.expect(table.pass, std::string("method disagreement for ") +
                             family_name(job.family) + "/" +
                             std::to_string(job.param));
    // The headline n of each job must be covered by at least two routes.
    int routes = 0;
    for (const DegreeRow& row : table.rows)
      if (row.n == job.n_max) ++routes;
    c.expect(routes >= 2, std::string("fewer than two routes for ") +
                              family_name(job.family) + " at n=" +
                              std::to_string(job.n_max));
  }
}

// --- criterion 6: block-sequence order vs the generated semigroup -----------

std::vector<std::vector<int>> subsets_of_range(int lo, int hi, int min_size,
                                               int max_size) {
  std::vector<std::vector<int>> out;
  const int width = hi - lo + 1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << width); ++mask) {
    std::vector<int> chosen;
    for (int b = 0; b < width; ++b)
      if (mask & (std::uint32_t{1} << b)) chosen.push_back(lo + b);
    if (static_cast<int>(chosen.size()) >= min_size &&
        static_cast<int>(chosen.size()) <= max_size)
      out.push_back(std::move(chosen));
  }
  return out;
}

// Entry-list perturbations that still form a level-k function; used as
// negative candidates against the semigroup membership oracle.
std::vector<FinFunc> perturbations(const FinFunc& f, int k) {
  std::vector<FinFunc> out;
  auto try_add = [&](std::vector<std::pair<int, int>> entries) {
    int max_value = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first < 0) return;
      if (entries[i].second < 1 || entries[i].second > k) return;
      if (i > 0 && entries[i - 1].first >= entries[i].first) return;
      max_value = std::max(max_value, entries[i].second);
    }
    if (max_value != k || entries.empty()) return;
    out.emplace_back(k, std::move(entries));
  };
  const auto& base = f.entries();
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (int delta : {-1, 1}) {
      auto entries = base;
      entries[i].second += delta;
      try_add(entries);
    }
    {
      auto entries = base;
      entries.erase(entries.begin() + i);
      try_add(entries);
    }
    for (int shift : {-1, 1}) {
      auto entries = base;
      entries[i].first += shift;
      std::sort(entries.begin(), entries.end());
      bool dup = false;
      for (std::size_t t = 1; t < entries.size(); ++t)
        if (entries[t - 1].first == entries[t].first) dup = true;
      if (!dup) try_add(entries);
    }
  }
  return out;
}

void check_agreement(Checker& c, const BlockSeq& G) {
  const int k = G.ceiling();
  const std::vector<FinFunc> members = gen_semigroup(G, k);
  std::set<std::vector<std::pair<int, int>>> member_set;
  for (const FinFunc& f : members) member_set.insert(f.entries());

  for (const FinFunc& f : members) {
    c.expect(is_block_subseq(BlockSeq(k, {f}), G),
             "semigroup member rejected by the decomposition test");
    for (const FinFunc& p : perturbations(f, k)) {
      const bool in_set = member_set.count(p.entries()) > 0;
      const bool accepted = is_block_subseq(BlockSeq(k, {p}), G);
      c.expect(in_set == accepted,
               "decomposition test disagrees with membership on a perturbed "
               "candidate");
    }
  }
  // Two-member sequences assembled from the semigroup.
  int budget = 60;
  for (std::size_t i = 0; i < members.size() && budget > 0; ++i)
    for (std::size_t j = i + 1; j < members.size() && budget > 0; ++j) {
      const FinFunc* lo = &members[i];
      const FinFunc* hi = &members[j];
      if (lo->min_support() > hi->min_support()) std::swap(lo, hi);
      if (lo->max_support() >= hi->min_support()) continue;
      --budget;
      c.expect(is_block_subseq(BlockSeq(k, {*lo, *hi}), G),
               "two-member subsequence rejected");
    }
}

void criterion_fin(Checker& c) {
  // Interval-block sequences over a window, every shape of cut points.
  for (int k = 1; k <= 3; ++k) {
    for (const auto& A : subsets_of_range(0, 10, 2, 6)) {
      const BlockSeq G = from_set(A, k);
      if (G.length() > 5) continue;
      check_agreement(c, G);
    }
    // Deterministically seeded non-interval sequences within {0..14}.
    std::uint64_t state = 0x9e3779b97f4a7c15ull + k;
    auto next = [&state]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<FinFunc> funcs;
      int pos = 0;
      const int blocks = 1 + static_cast<int>(next() % 5);
      for (int b = 0; b < blocks && pos <= 14; ++b) {
        std::vector<std::pair<int, int>> entries;
        const int len = 1 + static_cast<int>(next() % 3);
        bool attained = false;
        for (int t = 0; t < len && pos <= 14; ++t, ++pos) {
          if (next() % 3 == 0 && t + 1 < len) continue;  // gap in the support
          int value = 1 + static_cast<int>(next() % k);
          if (t + 1 >= len && !attained) value = k;
          if (value == k) attained = true;
          entries.emplace_back(pos, value);
        }
        if (entries.empty() || !attained) continue;
        funcs.emplace_back(k, std::move(entries));
        ++pos;
      }
      if (funcs.empty()) continue;
      check_agreement(c, BlockSeq(k, funcs));
    }

    // Monotonicity of the interval construction under point-set nesting.
    for (const auto& B : subsets_of_range(0, 10, 2, 11)) {
      const std::uint32_t width = static_cast<std::uint32_t>(B.size());
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << width); ++mask) {
        std::vector<int> A;
        for (std::uint32_t b = 0; b < width; ++b)
          if (mask & (std::uint32_t{1} << b)) A.push_back(B[b]);
        if (A.size() < 2) continue;
        c.expect(is_block_subseq(from_set(A, k), from_set(B, k)),
                 "nested point sets broke the interval containment");
        if (!c.ok) return;
      }
    }
  }
}

// --- criterion 7: partitions, coarsening, monochromatic construction --------

void enumerate_growth_strings(int length, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> digits;
  std::function<void(int)> step = [&](int max_used) {
    if (static_cast<int>(digits.size()) == length) {
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

void criterion_carlson(Checker& c) {
  // Round trip over every partition of domain 8.
  long long seen = 0;
  enumerate_growth_strings(8, [&](const std::vector<int>& rgs) {
    ++seen;
    const FinPartition E(rgs);
    c.expect(from_surjection(to_surjection(E)) == E, "round trip changed a partition");
  });
  c.expect(seen == 4140, "domain-8 partition count is " + std::to_string(seen));

  // Coarsening versus exhaustive rigid factorization on domains up to 6.
  for (int d = 1; d <= 6; ++d) {
    std::vector<std::vector<int>> all;
    enumerate_growth_strings(d, [&](const std::vector<int>& rgs) { all.push_back(rgs); });
    std::vector<std::vector<std::vector<int>>> factors(d + 1);
    for (int classes = 1; classes <= d; ++classes)
      enumerate_growth_strings(classes, [&](const std::vector<int>& rgs) {
        factors[classes].push_back(rgs);
      });
    for (const auto& g : all)
      for (const auto& h : all) {
        const RigidSurjection sg{g};
        const RigidSurjection sh{h};
        bool witnessed = false;
        for (const auto& f : factors[sh.num_classes()]) {
          bool composes = true;
          for (int x = 0; x < d && composes; ++x)
            composes = f[h[x]] == g[x];
          if (composes) {
            witnessed = true;
            break;
          }
        }
        c.expect(is_coarser(sg, sh) == witnessed,
                 "coarsening disagrees with rigid factorization");
        if (!c.ok) return;
      }
  }

  // Every pair coloring of six minima admits a coarsening with three
  // monochromatic fresh classes.
  const FinPartition base6({0, 1, 2, 3, 4, 5});
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << 15); ++bits) {
    const PairColoring coloring(
        6, {static_cast<std::uint8_t>(bits & 0xff),
            static_cast<std::uint8_t>((bits >> 8) & 0x7f)});
    MonoCoarsening result = mono_coarsening(base6, coloring, 3);
    c.expect(static_cast<int>(result.mono_minima.size()) >= 3,
             "selected set smaller than the target");
    c.expect(is_coarser(to_surjection(result.partition), to_surjection(base6)),
             "result is not coarser than the input");
    for (std::size_t i = 0; i < result.mono_minima.size() && c.ok; ++i)
      for (std::size_t j = i + 1; j < result.mono_minima.size(); ++j)
        c.expect(coloring.color(result.mono_minima[i], result.mono_minima[j]) ==
                     coloring.color(result.mono_minima[0], result.mono_minima[1]),
                 "selected minima are not monochromatic");
    if (!c.ok) return;
  }

  // The pentagon coloring of five minima has no monochromatic triple; find it
  // by brute force, then watch the construction fail on it.
  const FinPartition base5({0, 1, 2, 3, 4});
  std::vector<std::uint32_t> triangle_free;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << 10); ++bits) {
    const PairColoring coloring(5, {static_cast<std::uint8_t>(bits & 0xff),
                                    static_cast<std::uint8_t>(bits >> 8)});
    bool mono_triple = false;
    for (int a = 0; a < 5 && !mono_triple; ++a)
      for (int b = a + 1; b < 5 && !mono_triple; ++b)
        for (int t = b + 1; t < 5 && !mono_triple; ++t)
          mono_triple = coloring.color(a, b) == coloring.color(a, t) &&
                        coloring.color(a, t) == coloring.color(b, t);
    if (!mono_triple) triangle_free.push_back(bits);
  }
  c.expect(!triangle_free.empty(), "no triangle-free coloring of five points");
  std::uint32_t pentagon = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const int gap = j - i;
      if (gap == 1 || gap == 4)
        pentagon |= std::uint32_t{1} << PairColoring::pair_index(i, j);
    }
  bool pentagon_found = false;
  for (std::uint32_t bits : triangle_free)
    if (bits == pentagon) pentagon_found = true;
  c.expect(pentagon_found, "the cycle coloring is not triangle-free");
  bool failed = false;
  try {
    mono_coarsening(base5,
                    PairColoring(5, {static_cast<std::uint8_t>(pentagon & 0xff),
                                     static_cast<std::uint8_t>(pentagon >> 8)}),
                    3);
  } catch (const Error& e) {
    failed = e.code() == Errc::no_monochromatic_set;
  }
  c.expect(failed, "construction did not fail below the partition threshold");
}

// --- criterion 8: the axiom audit --------------------------------------------

void criterion_audit(Checker& c) {
  const struct {
    Family family;
    int param;
  } spaces[] = {
      {Family::ellentuck_hd, 2}, {Family::ellentuck_hd, 3},
      {Family::laflamme, 1},     {Family::laflamme, 2},
      {Family::hypercube, 2},    {Family::cliquefree, 3},
      {Family::fin, 1},          {Family::fin, 2},
      {Family::carlson_simpson, 1},
  };
  for (const auto& s : spaces) {
    const SpaceId space = make_space(s.family, s.param);
    const AuditReport report = audit_axioms(space, 4);
    for (const AuditCheck& check : report.checks)
      c.expect(check.pass, std::string(family_name(s.family)) + "/" +
                               std::to_string(s.param) + " failed " +
                               check.axiom + ": " + check.witness);
  }
  const SpaceId tag = make_space(Family::laflamme, 1);
  const AuditBudget budget;
  auto corrupt = make_corrupt_fragment(4, budget);
  const AuditReport report = audit_axioms(*corrupt, tag, 4, budget);
  bool a1c_failed_with_witness = false;
  for (const AuditCheck& check : report.checks)
    if (check.axiom == "A.1(c)" && !check.pass && !check.witness.empty())
      a1c_failed_with_witness = true;
  c.expect(a1c_failed_with_witness,
           "corrupted fixture did not fail A.1(c) with a witness");
}

CriterionResult run_one(int index, const std::string& name, long long budget_ms,
                        const std::function<void(Checker&)>& body) {
  CriterionResult result;
  result.index = index;
  result.name = name;
  result.budget_ms = budget_ms;
  Checker checker;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.expect(false, std::string("exception: ") + e.what());
  }
  const auto end = std::chrono::steady_clock::now();
  result.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  result.pass = checker.ok && result.elapsed_ms < budget_ms;
  if (!checker.ok)
    result.detail = checker.first_failure;
  else if (result.elapsed_ms >= budget_ms)
    result.detail = "over budget";
  else
    result.detail = plural(checker.checks, "check") + " passed";
  return result;
}

}  // namespace

std::vector<CriterionResult> run_suite(bool full) {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "laflamme_degrees", 10'000, criterion_laflamme));
  results.push_back(run_one(2, "e_pair_classes", 30'000, criterion_e_pairs));
  results.push_back(run_one(3, "hypercube_and_arrow", 5'000, criterion_fraisse));
  results.push_back(run_one(4, "compositions", 5'000, criterion_compositions));
  results.push_back(run_one(5, "three_way_agreement", 60'000, criterion_three_way));
  if (full) {
    results.push_back(run_one(6, "fin_equivalence", 60'000, criterion_fin));
    results.push_back(run_one(7, "carlson_simpson", 120'000, criterion_carlson));
    results.push_back(run_one(8, "axiom_audit", 10'000, criterion_audit));
  }
  return results;
}

bool suite_passes(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace ramsey
