#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ramsey/space_id.hpp"

namespace ramsey {

struct AuditCheck {
  std::string axiom;    // "A.1(a)", "A.1(c)", "A.2(a)"
  bool pass = false;
  std::string witness;  // concrete counterexample when failing, else empty
};

struct AuditReport {
  SpaceId space;
  int depth = 0;
  std::vector<AuditCheck> checks;  // sorted by axiom tag

  bool pass() const;
};

struct AuditBudget {
  int per_length = 250;      // enumerated family cap per approximation length
  int leq_fin_bases = 300;   // family members given the full A.2(a) treatment
};

/// Depth-bounded fragment of one space's approximation structure, seen
/// through canonical serializations. Family members are addressed by index;
/// restriction results and the down-sets are exposed as keys so the harness
/// never depends on a space's native value type.
class SpaceFragment {
 public:
  virtual ~SpaceFragment() = default;

  virtual std::string name() const = 0;
  /// Whether restriction is literal block-prefix (false for partitions,
  /// whose classes shrink when the domain is cut).
  virtual bool immutable_blocks() const = 0;

  virtual std::size_t count() const = 0;
  virtual int length(std::size_t a) const = 0;
  virtual std::string key(std::size_t a) const = 0;
  virtual std::string empty_key() const = 0;

  virtual std::string restrict_key(std::size_t a, int j) const = 0;
  virtual int restrict_length(std::size_t a, int j) const = 0;
  virtual std::string restrict2_key(std::size_t a, int j, int i) const = 0;
  /// Canonical serialization assembled from the first j block payloads.
  virtual std::string prefix_key(std::size_t a, int j) const = 0;

  virtual bool leq_fin(std::size_t a, std::size_t b) const = 0;
  /// Complete enumeration of {x : x <=_fin b}, as keys.
  virtual std::vector<std::string> leq_fin_keys(std::size_t b) const = 0;
};

std::unique_ptr<SpaceFragment> make_fragment(const SpaceId& space, int depth,
                                             const AuditBudget& budget = {});

/// Negative control: a block-tree fragment whose restriction returns the
/// last j blocks instead of the first j.
std::unique_ptr<SpaceFragment> make_corrupt_fragment(int depth,
                                                     const AuditBudget& budget = {});

AuditReport audit_axioms(const SpaceFragment& fragment, const SpaceId& space,
                         int depth, const AuditBudget& budget = {});
AuditReport audit_axioms(const SpaceId& space, int depth,
                         const AuditBudget& budget = {});

}  // namespace ramsey
