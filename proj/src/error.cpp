#include "ramsey/error.hpp"

namespace ramsey {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unsupported_space: return "UnsupportedSpace";
    case Errc::equal_inputs: return "EqualInputs";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::arity_error: return "ArityError";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::ceiling_underflow: return "CeilingUnderflow";
    case Errc::overlapping_support: return "OverlappingSupport";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::index_too_small: return "IndexTooSmall";
    case Errc::missing_k: return "MissingK";
    case Errc::method_unavailable: return "MethodUnavailable";
    case Errc::not_rigid: return "NotRigid";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::too_few_classes: return "TooFewClasses";
    case Errc::no_monochromatic_set: return "NoMonochromaticSet";
    case Errc::element_out_of_range: return "ElementOutOfRange";
    case Errc::same_block_violation: return "SameBlockViolation";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace ramsey
