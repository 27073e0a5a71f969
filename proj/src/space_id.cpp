#include "ramsey/space_id.hpp"

namespace ramsey {

SpaceId make_space(Family family, int param) {
  switch (family) {
    case Family::ellentuck_hd:
      if (param < 2) fail(Errc::unsupported_space, "e requires param >= 2");
      break;
    case Family::laflamme:
      if (param < 1) fail(Errc::unsupported_space, "laflamme requires param >= 1");
      break;
    case Family::hypercube:
      if (param < 2) fail(Errc::unsupported_space, "hypercube requires param >= 2");
      break;
    case Family::cliquefree:
      if (param < 3) fail(Errc::unsupported_space, "arrow requires param >= 3");
      break;
    case Family::fin:
      if (param < 1) fail(Errc::unsupported_space, "fin requires param >= 1");
      break;
    case Family::carlson_simpson:
      param = 1;  // unused
      break;
  }
  return SpaceId{family, param};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::ellentuck_hd: return "e";
    case Family::laflamme: return "laflamme";
    case Family::hypercube: return "hypercube";
    case Family::cliquefree: return "arrow";
    case Family::fin: return "fin";
    case Family::carlson_simpson: return "cs";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "e" || name == "ellentuck") return Family::ellentuck_hd;
  if (name == "laflamme") return Family::laflamme;
  if (name == "hypercube") return Family::hypercube;
  if (name == "arrow" || name == "cliquefree") return Family::cliquefree;
  if (name == "fin") return Family::fin;
  if (name == "cs" || name == "carlson_simpson") return Family::carlson_simpson;
  return std::nullopt;
}

}  // namespace ramsey
