#include "spinal/report.hpp"

#include <iomanip>
#include <sstream>

namespace spinal {

const char* status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skip: return "skip";
  }
  return "?";
}

int suite_report::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == check_status::pass;
  return n;
}
int suite_report::failed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == check_status::fail;
  return n;
}
int suite_report::skipped() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == check_status::skip;
  return n;
}

void suite_report::add_pass(const std::string& name, const std::string& observed,
                            const std::string& expected) {
  checks.push_back({name, check_status::pass, observed, expected, ""});
}
void suite_report::add_fail(const std::string& name, const std::string& observed,
                            const std::string& expected, const std::string& detail) {
  checks.push_back({name, check_status::fail, observed, expected, detail});
}
void suite_report::add_skip(const std::string& name, const std::string& reason) {
  checks.push_back({name, check_status::skip, "", "", reason});
}
void suite_report::add(const std::string& name, bool ok, const std::string& observed,
                       const std::string& expected, const std::string& detail) {
  if (ok)
    add_pass(name, observed, expected);
  else
    add_fail(name, observed, expected, detail);
}

std::string render_machine(const suite_report& r) {
  std::ostringstream os;
  os << "suite=" << r.suite << "\n";
  os << "group=" << r.group_label << "\n";
  os << "seed=" << r.seed << "\n";
  for (const auto& c : r.checks)
    os << "check|" << c.name << '|' << status_name(c.status) << '|' << c.observed << '|'
       << c.expected << '|' << c.detail << "\n";
  os << "summary|checks=" << r.checks.size() << "|passed=" << r.passed()
     << "|failed=" << r.failed() << "|skipped=" << r.skipped() << "\n";
  return os.str();
}

std::string render_text(const suite_report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " on " << r.group_label << " (seed " << r.seed << ")\n";
  size_t width = 4;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.name
       << std::setw(6) << status_name(c.status);
    if (!c.observed.empty()) {
      os << " observed " << c.observed;
      if (!c.expected.empty()) os << ", expected " << c.expected;
    }
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (r.ok() ? "OK" : "FAILED") << ": " << r.passed() << " passed, " << r.failed()
     << " failed, " << r.skipped() << " skipped";
  os << std::fixed << std::setprecision(2) << " (" << r.wall_seconds << "s)\n";
  return os.str();
}

}  // namespace spinal
