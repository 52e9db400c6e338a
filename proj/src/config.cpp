#include "spinal/config.hpp"

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

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    require(!item.empty(), errc::config_invalid, "empty entry in integer list");
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      require(used == item.size(), errc::config_invalid, "bad integer '" + item + "'");
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::config_invalid, "bad integer '" + item + "'");
    }
  }
  require(!out.empty(), errc::config_invalid, "empty integer list");
  return out;
}

}  // namespace

group_config parse_config_text(const std::string& text) {
  group_config cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    require(eq != std::string::npos, errc::config_invalid,
            "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "p") {
      require(cfg.p == 0, errc::config_invalid, "p given twice");
      cfg.p = parse_int_list(value).at(0);
    } else if (key == "row") {
      cfg.rows.push_back(parse_int_list(value));
    } else if (key == "label") {
      require(!value.empty(), errc::config_invalid, "empty label");
      cfg.label = value;
    } else {
      fail(errc::config_invalid, "unknown key '" + key + "'");
    }
  }
  require(cfg.p != 0, errc::config_invalid, "missing p");
  require(!cfg.rows.empty(), errc::config_invalid, "missing rows");
  if (cfg.label.empty()) cfg.label = "unnamed";
  return cfg;
}

group_config load_config_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::config_invalid, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

defining_tuple to_tuple(const group_config& cfg) {
  try {
    return defining_tuple(prime(cfg.p), cfg.rows);
  } catch (const error& e) {
    fail(errc::config_invalid, std::string("invalid group config: ") + e.what());
  }
}

}  // namespace spinal
