#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "spinal/permgroup.hpp"

namespace spinal {

// Frozen reference quantities, one per line:
//
//   # group-id, depth, quantity, value
//   gs3, 2, quotient_order, 27
//
// LF line endings, `#` comments.  Values are exact integers (orders and
// indices), stored as bigint.
class golden_table {
 public:
  static golden_table load_file(const std::string& path);   // config_invalid on bad input
  static golden_table parse(const std::string& text);

  std::optional<bigint> lookup(const std::string& group, int depth,
                               const std::string& quantity) const;
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::tuple<std::string, int, std::string>, bigint> values_;
};

}  // namespace spinal
