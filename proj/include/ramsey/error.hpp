#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Stable error names; the CLI surfaces these verbatim and exits 1.
enum class Errc {
  index_out_of_range,
  unsupported_space,
  equal_inputs,
  arity_mismatch,
  arity_error,
  degenerate_input,
  budget_exceeded,
  not_maximal,
  shape_mismatch,
  ceiling_underflow,
  overlapping_support,
  too_few_points,
  index_too_small,
  missing_k,
  method_unavailable,
  not_rigid,
  domain_mismatch,
  too_few_classes,
  no_monochromatic_set,
  element_out_of_range,
  same_block_violation,
  usage_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace ramsey
