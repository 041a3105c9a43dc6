#pragma once

#include <stdexcept>
#include <string>

namespace nilsplit {

enum class errc {
  invalid_argument,
  parse_error,
  not_a_group,
  not_a_permutation,
  not_a_subgroup,
  not_injective,
  not_homomorphism,
  degenerate_amalgam,
  order_cap_exceeded,
  invalid_letter,
  elliptic_element,
  bound_too_small,
  inconsistent_stabilizer,
  internal,
};

// Single exception type for the whole library; the code tells callers (and the
// C boundary) which contract was violated, the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nilsplit
