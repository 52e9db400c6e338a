#include "spinal/golden.hpp"

#include <fstream>
#include <sstream>

namespace spinal {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

golden_table golden_table::parse(const std::string& text) {
  golden_table t;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    require(fields.size() == 4, errc::config_invalid,
            "golden line " + std::to_string(lineno) + ": expected group, depth, quantity, value");
    try {
      int depth = std::stoi(fields[1]);
      bigint value(fields[3]);
      t.values_[{fields[0], depth, fields[2]}] = value;
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::config_invalid, "golden line " + std::to_string(lineno) + ": bad number");
    }
  }
  return t;
}

golden_table golden_table::load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::config_invalid, "cannot open golden table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<bigint> golden_table::lookup(const std::string& group, int depth,
                                           const std::string& quantity) const {
  auto it = values_.find({group, depth, quantity});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

}  // namespace spinal
