#pragma once

#include <string>
#include <vector>

#include "spinal/defining_tuple.hpp"

namespace spinal {

// Group description ingested by the CLI.  Plain key/value text so configs
// need no third-party parser:
//
//   # Gupta-Sidki 3-group
//   p = 3
//   row = 1, 2
//   label = gs3
//
// `row` repeats once per directed generator.  Unknown keys are rejected.
struct group_config {
  int p = 0;
  std::vector<std::vector<int>> rows;
  std::string label;
};

group_config parse_config_text(const std::string& text);   // config_invalid on bad input
group_config load_config_file(const std::string& path);
defining_tuple to_tuple(const group_config& cfg);          // re-validates as invalid_tuple

}  // namespace spinal
