#include "ramsey/degree_calc.hpp"

#include <algorithm>

#include "ramsey/ellentuck.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/laflamme.hpp"

namespace ramsey {

std::vector<Composition> compositions(int n) {
  if (n < 1) fail(Errc::degenerate_input, "n must be >= 1");
  if (n > 62) fail(Errc::budget_exceeded, "composition family too large");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (std::uint64_t{1} << b)) subset.push_back(b);
    out.push_back(psi_inv(n, subset));
  }
  return out;
}

std::vector<int> psi(const Composition& x) {
  if (x.parts.empty()) fail(Errc::degenerate_input, "composition must be nonempty");
  for (int part : x.parts)
    if (part < 1) fail(Errc::degenerate_input, "parts must be positive");
  std::vector<int> out;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < x.parts.size(); ++i) {
    partial += x.parts[i];
    out.push_back(partial - 1);
  }
  return out;
}

Composition psi_inv(int n, const std::vector<int>& subset) {
  if (n < 1) fail(Errc::degenerate_input, "n must be >= 1");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != subset.size())
    fail(Errc::degenerate_input, "subset members must be distinct");
  for (int m : sorted)
    if (m < 0 || m > n - 2)
      fail(Errc::element_out_of_range,
           "element " + std::to_string(m) + " outside 0.." + std::to_string(n - 2));
  Composition x;
  int prev = -1;
  for (int m : sorted) {
    x.parts.push_back(m - prev);
    prev = m;
  }
  x.parts.push_back(n - 1 - prev);
  return x;
}

KFunction::KFunction(std::vector<BigInt> values) : values_(std::move(values)) {
  for (const BigInt& v : values_)
    if (v < 1) fail(Errc::degenerate_input, "class counts must be >= 1");
}

KFunction KFunction::constant_one(int n_max) {
  return KFunction(std::vector<BigInt>(n_max, BigInt(1)));
}

const BigInt& KFunction::at(int j) const {
  if (j < 1 || j > max_n())
    fail(Errc::missing_k, "no class count tabulated for size " + std::to_string(j));
  return values_[j - 1];
}

BigInt degree_from_k(const KFunction& kf, int n) {
  BigInt total = 0;
  for (const Composition& x : compositions(n)) {
    BigInt product = 1;
    for (int part : x.parts) product *= kf.at(part);
    total += product;
  }
  return total;
}

BigInt laflamme_recursion(int k, int n) {
  if (k < 1 || n < 1) fail(Errc::degenerate_input, "level and size must be >= 1");
  // Level 1 has one class per block size; climb one level per pass.
  KFunction table = KFunction::constant_one(n);
  for (int level = 1; level < k; ++level) {
    std::vector<BigInt> next(n);
    for (int j = 1; j <= n; ++j) next[j - 1] = degree_from_k(table, j);
    table = KFunction(std::move(next));
  }
  return degree_from_k(table, n);
}

namespace {

BigInt pow_int(int base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigInt geometric_3(int terms) {  // 3^0 + ... + 3^(terms-1)
  BigInt out = 0;
  BigInt power = 1;
  for (int i = 0; i < terms; ++i) {
    out += power;
    power *= 3;
  }
  return out;
}

}  // namespace

std::optional<BigInt> closed_form(const SpaceId& space, int n) {
  if (n < 1) return std::nullopt;
  switch (space.family) {
    case Family::laflamme:
      return pow_int(space.param + 1, n - 1);
    case Family::hypercube:
      if (n == 1) return BigInt(1);
      if (n == 2) return BigInt(1) + geometric_3(space.param);
      return std::nullopt;
    case Family::cliquefree:
      if (n == 1) return BigInt(1);
      if (n == 2) return BigInt(3);
      return std::nullopt;
    case Family::ellentuck_hd:
      if (n == 2) return geometric_3(space.param);
      return std::nullopt;
    case Family::fin:
    case Family::carlson_simpson:
      return std::nullopt;
  }
  return std::nullopt;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::combinator: return "combinator";
    case Method::closed: return "closed";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "bruteforce") return Method::bruteforce;
  if (name == "combinator" || name == "formula") return Method::combinator;
  if (name == "closed") return Method::closed;
  return std::nullopt;
}

namespace {

std::optional<BigInt> try_method(const SpaceId& space, int n, Method method) {
  switch (space.family) {
    case Family::laflamme:
      switch (method) {
        case Method::bruteforce: return BigInt(count_subset_classes(space.param, n));
        case Method::combinator: return laflamme_recursion(space.param, n);
        case Method::closed: return closed_form(space, n);
      }
      break;
    case Family::hypercube:
    case Family::cliquefree:
      if (n == 1) {
        if (method == Method::closed) return closed_form(space, n);
        if (method == Method::combinator)
          return degree_from_k(KFunction::constant_one(1), 1);
        return std::nullopt;
      }
      if (n == 2) {
        switch (method) {
          case Method::bruteforce:
            return BigInt(degree_bruteforce_pairs(space));
          case Method::combinator: {
            KFunction kf({BigInt(1), BigInt(count_pair_classes(space))});
            return degree_from_k(kf, 2);
          }
          case Method::closed:
            return closed_form(space, n);
        }
      }
      return std::nullopt;
    case Family::ellentuck_hd:
      if (n != 2) return std::nullopt;
      if (method == Method::bruteforce)
        return BigInt(ramsey::count_pair_classes(space.param).count);
      if (method == Method::closed) return closed_form(space, n);
      return std::nullopt;
    case Family::fin:
    case Family::carlson_simpson:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

BigInt degree_by_method(const SpaceId& space, int n, Method method) {
  auto value = try_method(space, n, method);
  if (!value)
    fail(Errc::method_unavailable,
         std::string(method_name(method)) + " has no route for space " +
             family_name(space.family) + " at n=" + std::to_string(n));
  return *value;
}

bool rows_agree(const std::vector<DegreeRow>& rows) {
  for (const DegreeRow& a : rows)
    for (const DegreeRow& b : rows)
      if (a.n == b.n && a.value != b.value) return false;
  return true;
}

DegreeTable cross_verify(const SpaceId& space, int n_max) {
  if (n_max < 1) fail(Errc::degenerate_input, "n_max must be >= 1");
  DegreeTable table;
  table.space = space;
  for (int n = 1; n <= n_max; ++n)
    for (Method method : {Method::bruteforce, Method::combinator, Method::closed})
      if (auto value = try_method(space, n, method))
        table.rows.push_back({n, method, *value});
  std::sort(table.rows.begin(), table.rows.end(),
            [](const DegreeRow& a, const DegreeRow& b) {
              if (a.n != b.n) return a.n < b.n;
              return static_cast<int>(a.method) < static_cast<int>(b.method);
            });
  if (table.rows.empty())
    fail(Errc::method_unavailable,
         std::string("no degree route exists for space ") +
             family_name(space.family));
  table.pass = rows_agree(table.rows);
  return table;
}

}  // namespace ramsey
