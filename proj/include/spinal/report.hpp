#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinal {

enum class check_status { pass, fail, skip };

struct check_result {
  std::string name;
  check_status status = check_status::pass;
  std::string observed;
  std::string expected;
  std::string detail;  // counterexample or skip reason
};

// One verification-suite run.  The machine rendering is deterministic for a
// fixed (config, seed, caps) triple, so wall time lives only in the human
// rendering.
struct suite_report {
  std::string suite;
  std::string group_label;
  std::uint64_t seed = 0;
  std::vector<check_result> checks;
  double wall_seconds = 0.0;

  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }

  void add_pass(const std::string& name, const std::string& observed = "",
                const std::string& expected = "");
  void add_fail(const std::string& name, const std::string& observed,
                const std::string& expected, const std::string& detail = "");
  void add_skip(const std::string& name, const std::string& reason);
  // Uniform shorthand: pass/fail from a condition.
  void add(const std::string& name, bool ok, const std::string& observed = "",
           const std::string& expected = "", const std::string& detail = "");
};

const char* status_name(check_status s);

// key=value header, one pipe-separated line per check, summary line; LF only.
std::string render_machine(const suite_report& r);
// Aligned human table with a timing footer.
std::string render_text(const suite_report& r);

}  // namespace spinal
