#pragma once

#include <stdexcept>
#include <string>

namespace spinal {

enum class errc {
  invalid_tuple,
  context_mismatch,
  not_in_l,
  not_in_stabilizer,
  not_in_derived,
  not_normalized,
  reduction_failed,
  depth_mismatch,
  not_subgroup,
  degree_cap,
  work_cap,
  unknown_suite,
  config_invalid,
  unreachable,
  parse_error,
  invalid_argument,
  internal,
};

// Every checked failure in the library carries one of the codes above; the
// CLI maps usage/config codes to exit 2 and check failures to exit 1.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

const char* errc_name(errc code);

}  // namespace spinal
