#include "doctest.h"
#include "spinal/config.hpp"
#include "spinal/golden.hpp"
#include "spinal/report.hpp"
#include "spinal/suites.hpp"
#include "spinal/wordio.hpp"

using namespace spinal;

namespace {

group_config gs3_cfg() {
  group_config cfg;
  cfg.p = 3;
  cfg.rows = {{1, 2}};
  cfg.label = "gs3";
  return cfg;
}

}  // namespace

TEST_CASE("config text parsing") {
  group_config cfg = parse_config_text("# comment\np = 3\nrow = 1, 2\nlabel = gs3\n");
  CHECK(cfg.p == 3);
  CHECK(cfg.rows == std::vector<std::vector<int>>{{1, 2}});
  CHECK(cfg.label == "gs3");
  group_config two = parse_config_text("p = 3\nrow = 1,0\nrow = 1,1\n");
  CHECK(two.rows.size() == 2);
  CHECK(two.label == "unnamed");
  CHECK_THROWS_AS(parse_config_text("row = 1,2\n"), error);          // missing p
  CHECK_THROWS_AS(parse_config_text("p = 3\n"), error);              // missing rows
  CHECK_THROWS_AS(parse_config_text("p = 3\nq = 1\nrow = 1,2\n"), error);
  CHECK_THROWS_AS(parse_config_text("p = 3\nrow = 1,x\n"), error);
  CHECK_THROWS_AS(load_config_file("no/such/file.cfg"), error);
  CHECK_THROWS_AS(to_tuple(parse_config_text("p = 4\nrow = 1,2,3\n")), error);
}

TEST_CASE("golden table lookups") {
  golden_table t = golden_table::parse(
      "# group, depth, quantity, value\n"
      "gs3, 2, quotient_order, 27\n"
      "gs3, 3, quotient_order, 729\n");
  CHECK(t.lookup("gs3", 2, "quotient_order") == bigint(27));
  CHECK(t.lookup("gs3", 3, "quotient_order") == bigint(729));
  CHECK_FALSE(t.lookup("gs3", 4, "quotient_order").has_value());
  CHECK_FALSE(t.lookup("other", 2, "quotient_order").has_value());
  CHECK_THROWS_AS(golden_table::parse("one, two\n"), error);
  CHECK_THROWS_AS(golden_table::parse("g, x, q, 1\n"), error);
  CHECK_THROWS_AS(golden_table::load_file("no/such/golden.txt"), error);
}

TEST_CASE("machine report rendering is stable") {
  suite_report rep;
  rep.suite = "demo";
  rep.group_label = "gs3";
  rep.seed = 7;
  rep.add_pass("alpha", "1", "1");
  rep.add_fail("beta", "2", "3", "w");
  rep.add_skip("gamma", "why");
  CHECK(rep.passed() == 1);
  CHECK(rep.failed() == 1);
  CHECK(rep.skipped() == 1);
  CHECK_FALSE(rep.ok());
  CHECK(render_machine(rep) ==
        "suite=demo\n"
        "group=gs3\n"
        "seed=7\n"
        "check|alpha|pass|1|1|\n"
        "check|beta|fail|2|3|w\n"
        "check|gamma|skip|||why\n"
        "summary|checks=3|passed=1|failed=1|skipped=1\n");
  std::string text = render_text(rep);
  CHECK(text.find("FAILED") != std::string::npos);
  CHECK(text.find("alpha") != std::string::npos);
}

TEST_CASE("the suite registry is fixed") {
  const std::vector<std::string> expected{"torsion",        "words",        "sections",
                                          "theta",          "abelianization", "gamma3",
                                          "special_group",  "transitivity", "normalize",
                                          "branch"};
  CHECK(suite_names() == expected);
  try {
    run_suite("no-such-suite", gs3_cfg(), 1);
    FAIL("expected an unknown-suite error");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_suite);
  }
  group_config bad = gs3_cfg();
  bad.rows = {{1, 2}, {2, 1}};  // dependent rows
  try {
    run_suite("words", bad, 1);
    FAIL("expected a config error");
  } catch (const error& e) {
    CHECK(e.code() == errc::config_invalid);
  }
}

TEST_CASE("random word generators hit their contracts") {
  splitmix64 rng(99);
  for (int it = 0; it < 50; ++it) {
    int syl = rng.below(8);
    reduced_word w = random_reduced_word(3, 2, syl, rng);
    CHECK(w.length() == syl);
    reduced_word s = random_stabilizer_word(5, 1, syl, rng);
    CHECK(s.length() == syl);
    CHECK(exponents(s).eps_a == 0);
  }
}

TEST_CASE("derived-word sampling is deterministic and respects its length contract") {
  spinal_group g(defining_tuple(prime(3), {{1, 2}}));
  CHECK(random_derived_word(g, 0, 5).is_identity());
  try {
    random_derived_word(g, 1, 5);
    FAIL("length one is impossible for derived words");
  } catch (const error& e) {
    CHECK(e.code() == errc::unreachable);
  }
  reduced_word w1 = random_derived_word(g, 4, 7);
  reduced_word w2 = random_derived_word(g, 4, 7);
  CHECK(w1 == w2);
  CHECK(w1.length() == 4);
  CHECK(exponents(w1).is_zero());
  CHECK(format_word(w1) == "b1^2*a^2*b1^2*a*b1*a^2*b1*a");
  for (int target : {2, 3, 4, 5, 6, 7, 8}) {
    reduced_word w = random_derived_word(g, target, 11);
    CHECK(w.length() == target);
    CHECK(exponents(w).is_zero());
  }
}

TEST_CASE("suite runs are reproducible byte for byte") {
  suite_caps caps;
  caps.samples = 40;
  suite_report r1 = run_suite("words", gs3_cfg(), 12345, caps);
  suite_report r2 = run_suite("words", gs3_cfg(), 12345, caps);
  CHECK(render_machine(r1) == render_machine(r2));
  CHECK(r1.failed() == 0);
  suite_report r3 = run_suite("words", gs3_cfg(), 54321, caps);
  CHECK(render_machine(r1) != render_machine(r3));  // seed is part of the header
}

TEST_CASE("caps propagate into suite behaviour") {
  suite_caps caps;
  caps.samples = 5;
  caps.degree_cap = 3;  // depth 2 exceeds this
  suite_report rep = run_suite("abelianization", gs3_cfg(), 1, caps);
  CHECK(rep.failed() == 0);
  CHECK(rep.skipped() >= 2);  // both depths skip under the tiny cap
}
