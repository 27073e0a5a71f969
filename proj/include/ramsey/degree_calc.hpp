#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/error.hpp"
#include "ramsey/space_id.hpp"

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;

/// Ordered tuple of positive parts summing to n.
struct Composition {
  std::vector<int> parts;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// All compositions of n, ordered by colex of their psi images (i.e. the
/// subset bitmask read as a binary counter). |result| = 2^(n-1).
std::vector<Composition> compositions(int n);

/// The partial-sum bijection onto subsets of {0..n-2}.
std::vector<int> psi(const Composition& x);
Composition psi_inv(int n, const std::vector<int>& subset);

/// Tabulated per-block class counts k(R, j), 1-based on j.
class KFunction {
 public:
  explicit KFunction(std::vector<BigInt> values);  // values[j-1] = k(R, j)

  static KFunction constant_one(int n_max);

  const BigInt& at(int j) const;  // throws MissingK past the table
  int max_n() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<BigInt> values_;
};

/// The composition-sum combinator:
/// sum over q, over compositions (j_1..j_q) of n, of prod k(R, j_i).
BigInt degree_from_k(const KFunction& kf, int n);

/// Degree by iterating the combinator up the level hierarchy, starting from
/// the constant-one table of level 1.
BigInt laflamme_recursion(int k, int n);

/// The known closed forms per space; nullopt where none exists.
std::optional<BigInt> closed_form(const SpaceId& space, int n);

enum class Method { bruteforce, combinator, closed };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct DegreeRow {
  int n;
  Method method;
  BigInt value;
};

struct DegreeTable {
  SpaceId space;
  std::vector<DegreeRow> rows;  // sorted by (n, method)
  bool pass = false;
};

/// True iff for every n all rows present agree.
bool rows_agree(const std::vector<DegreeRow>& rows);

/// Runs every available method for each n <= n_max and records agreement.
DegreeTable cross_verify(const SpaceId& space, int n_max);

/// Single degree by a specific method (used by the CLI); MethodUnavailable
/// when the space/arity combination has no such route.
BigInt degree_by_method(const SpaceId& space, int n, Method method);

}  // namespace ramsey
