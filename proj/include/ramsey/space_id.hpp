#pragma once

#include <optional>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

enum class Family {
  ellentuck_hd,
  laflamme,
  hypercube,
  cliquefree,
  fin,
  carlson_simpson,
};

/// A space family plus its small natural parameter (level k, dimension n, or
/// clique bound; unused for carlson_simpson).
struct SpaceId {
  Family family;
  int param = 1;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// Validates the family/param combination; throws UnsupportedSpace.
SpaceId make_space(Family family, int param);

/// Canonical short name used in CLI flags and JSON ("e", "laflamme",
/// "hypercube", "arrow", "fin", "cs").
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

}  // namespace ramsey
