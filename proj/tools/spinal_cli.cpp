// Command-line front end: group facts, portrait evaluation, section maps,
// contraction traces, tuple normalization, congruence-quotient reports, and
// the verification suites.  Exit codes: 0 pass, 1 check failure, 2 usage or
// config error.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinal/config.hpp"
#include "spinal/group.hpp"
#include "spinal/permgroup.hpp"
#include "spinal/portrait.hpp"
#include "spinal/report.hpp"
#include "spinal/suites.hpp"
#include "spinal/wordio.hpp"

namespace {

using namespace spinal;

int exit_code_for(errc code) {
  switch (code) {
    case errc::invalid_tuple:
    case errc::unknown_suite:
    case errc::config_invalid:
    case errc::parse_error:
    case errc::invalid_argument:
      return 2;
    default:
      return 1;
  }
}

struct config_opts {
  std::string path;
  int p = 0;
  std::vector<std::string> rows;
  std::string label;
};

void attach_config(CLI::App* cmd, config_opts& opts) {
  cmd->add_option("config", opts.path, "Config file (keys: p, row, label)");
  cmd->add_option("--p", opts.p, "Prime, as an alternative to a config file");
  cmd->add_option("--row", opts.rows, "Defining row like 1,2 (repeat per generator)");
  cmd->add_option("--label", opts.label, "Group label used in reports");
  cmd->fallthrough();
}

group_config resolve_config(const config_opts& opts) {
  if (!opts.path.empty()) {
    require(opts.p == 0 && opts.rows.empty(), errc::config_invalid,
            "give either a config file or inline --p/--row flags, not both");
    group_config cfg = load_config_file(opts.path);
    if (!opts.label.empty()) cfg.label = opts.label;
    return cfg;
  }
  require(opts.p != 0 && !opts.rows.empty(), errc::config_invalid,
          "a config file or inline --p/--row flags are required");
  std::string text = "p = " + std::to_string(opts.p) + "\n";
  for (const std::string& row : opts.rows) text += "row = " + row + "\n";
  text += "label = " + (opts.label.empty() ? std::string("inline") : opts.label) + "\n";
  return parse_config_text(text);
}

std::string rows_string(const defining_tuple& t) {
  std::string s;
  for (int i = 0; i < t.r(); ++i) {
    if (i) s += ";";
    for (int j = 1; j <= t.p() - 1; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(t.entry(i, j));
    }
  }
  return s;
}

std::string perm_string(const perm& q) {
  std::string s;
  for (int i = 0; i < q.degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(q[i]);
  }
  return s;
}

std::string matrix_string(const fp_matrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += std::to_string(m.at(i, j));
    }
  }
  return s;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

int run_info(const config_opts& copts, const std::string& format) {
  group_config cfg = resolve_config(copts);
  defining_tuple t = to_tuple(cfg);
  spinal_group g(t);
  std::string label = cfg.label.empty() ? "unnamed" : cfg.label;
  if (format == "machine") {
    std::cout << "label=" << label << "\n"
              << "p=" << t.p() << "\n"
              << "r=" << t.r() << "\n"
              << "rows=" << rows_string(t) << "\n"
              << "torsion=" << yesno(is_torsion(t)) << "\n"
              << "family_E=" << yesno(in_family_E(t)) << "\n"
              << "exceptional=" << yesno(is_exceptional_G(t)) << "\n"
              << "normal_form=" << yesno(satisfies_normal_form(t)) << "\n"
              << "n_star=" << g.n_star() << "\n";
  } else {
    std::cout << "group " << label << ": p = " << t.p() << ", r = " << t.r() << ", rows "
              << rows_string(t) << "\n"
              << "  torsion:             " << yesno(is_torsion(t)) << "\n"
              << "  in family E:         " << yesno(in_family_E(t)) << "\n"
              << "  exceptional (r=1):   " << yesno(is_exceptional_G(t)) << "\n"
              << "  normal form:         " << yesno(satisfies_normal_form(t)) << "\n"
              << "  n* (last e_1 != 0):  " << g.n_star() << "\n";
  }
  return 0;
}

int run_eval(const config_opts& copts, const std::string& text, int depth,
             const std::string& format) {
  group_config cfg = resolve_config(copts);
  spinal_group g(to_tuple(cfg));
  reduced_word w = parse_word(text, g.p(), g.r());
  portrait f = eval(g, w, depth);
  if (format == "machine") {
    std::cout << "word=" << format_word(w) << "\n"
              << "depth=" << depth << "\n"
              << "portrait=" << dump(f) << "\n"
              << "order=" << portrait_order(f) << "\n";
  } else {
    std::cout << "word " << format_word(w) << " at depth " << depth << ":\n"
              << "  " << dump(f) << "\n"
              << "  order in the quotient: " << portrait_order(f) << "\n";
  }
  return 0;
}

int run_sections(const config_opts& copts, const std::string& text, const std::string& format) {
  group_config cfg = resolve_config(copts);
  spinal_group g(to_tuple(cfg));
  reduced_word w = parse_word(text, g.p(), g.r());
  std::vector<reduced_word> secs = g.sections(w);
  if (format == "machine") {
    std::cout << "word=" << format_word(w) << "\n";
    for (size_t j = 0; j < secs.size(); ++j)
      std::cout << "section" << j + 1 << "=" << format_word(secs[j]) << "\n";
  } else {
    std::cout << "sections of " << format_word(w) << " (length " << w.length() << "):\n";
    for (size_t j = 0; j < secs.size(); ++j)
      std::cout << "  " << j + 1 << ": " << format_word(secs[j]) << "  (length "
                << secs[j].length() << ")\n";
  }
  return 0;
}

int run_theta(const config_opts& copts, const std::string& text, int map,
              const std::string& format) {
  group_config cfg = resolve_config(copts);
  spinal_group g(to_tuple(cfg));
  reduced_word z = parse_word(text, g.p(), g.r());
  reduced_word out = map == 1 ? g.theta1(z) : g.theta2(z);
  if (format == "machine") {
    std::cout << "word=" << format_word(z) << "\n"
              << "map=" << map << "\n"
              << "result=" << format_word(out) << "\n"
              << "length=" << out.length() << "\n";
  } else {
    std::cout << "theta" << map << "(" << format_word(z) << ") = " << format_word(out)
              << "  (length " << z.length() << " -> " << out.length() << ")\n";
  }
  return 0;
}

int run_reduce(const config_opts& copts, const std::string& text, int cap,
               const std::string& format) {
  group_config cfg = resolve_config(copts);
  spinal_group g(to_tuple(cfg));
  reduced_word z = parse_word(text, g.p(), g.r());
  spinal_group::reduction_result res = g.reduce_commutator_length(z, cap);
  if (format == "machine") {
    std::cout << "word=" << format_word(z) << "\n"
              << "cap=" << cap << "\n";
    reduced_word cur = z;
    for (size_t i = 0; i < res.trace.size(); ++i) {
      cur = res.trace[i] == 1 ? g.theta1(cur) : g.theta2(cur);
      std::cout << "step" << i + 1 << "=theta" << res.trace[i] << "|" << format_word(cur)
                << "\n";
    }
    std::cout << "result=" << format_word(res.word) << "\n"
              << "length=" << res.word.length() << "\n";
  } else {
    std::cout << "initial: " << format_word(z) << "  (length " << z.length() << ")\n";
    reduced_word cur = z;
    for (size_t i = 0; i < res.trace.size(); ++i) {
      cur = res.trace[i] == 1 ? g.theta1(cur) : g.theta2(cur);
      std::cout << "theta" << res.trace[i] << " : " << format_word(cur) << "  (length "
                << cur.length() << ")\n";
    }
    std::cout << "final length " << res.word.length() << " after " << res.trace.size()
              << " steps\n";
  }
  return 0;
}

int run_normalize(const config_opts& copts, const std::string& format) {
  group_config cfg = resolve_config(copts);
  defining_tuple t = to_tuple(cfg);
  normalization_result res = normalize_defining_tuple(t);
  if (format == "machine") {
    std::cout << "rows=" << rows_string(t) << "\n"
              << "normalized=" << rows_string(res.tuple) << "\n"
              << "already_normal=" << yesno(satisfies_normal_form(t)) << "\n"
              << "scalar_power=" << res.witness.scalar_power << "\n"
              << "root_permutation=" << perm_string(res.witness.root_permutation) << "\n"
              << "generator_matrix=" << matrix_string(res.witness.generator_matrix) << "\n";
  } else {
    std::cout << "input rows:      " << rows_string(t) << "\n"
              << "normalized rows: " << rows_string(res.tuple) << "\n"
              << "witness: scalar power k = " << res.witness.scalar_power
              << ", root permutation images " << perm_string(res.witness.root_permutation)
              << ",\n         generator matrix " << matrix_string(res.witness.generator_matrix)
              << "\n";
  }
  return 0;
}

int run_quotient(const config_opts& copts, int depth, const std::string& what, int degree_cap,
                 const std::string& format) {
  group_config cfg = resolve_config(copts);
  spinal_group g(to_tuple(cfg));
  const int p = g.p();
  perm_group q = quotient_group(g, depth, degree_cap);
  const bool machine = format == "machine";
  if (machine)
    std::cout << "depth=" << depth << "\norder=" << q.order() << "\n";
  else
    std::cout << "quotient at depth " << depth << ": order " << q.order() << " on "
              << q.degree() << " leaves\n";
  if (what == "orders") {
    perm_group d = derived_subgroup(q);
    perm_group g3 = gamma3(q);
    if (machine)
      std::cout << "derived_order=" << d.order() << "\ngamma3_order=" << g3.order() << "\n";
    else
      std::cout << "  derived subgroup order " << d.order() << ", gamma3 order " << g3.order()
                << "\n";
  } else if (what == "abelianization") {
    perm_group d = derived_subgroup(q);
    bigint idx = index(q, d);
    if (machine)
      std::cout << "abelianization_index=" << idx << "\n";
    else
      std::cout << "  |G : G'| = " << idx << "\n";
  } else if (what == "gamma3") {
    perm_group g3 = gamma3(q);
    bigint idx = index(q, g3);
    if (machine)
      std::cout << "gamma3_order=" << g3.order() << "\ngamma3_index=" << idx << "\n";
    else
      std::cout << "  gamma3 order " << g3.order() << ", index " << idx << "\n";
  } else {  // rigid
    std::vector<perm> prod_gens;
    for (int u = 0; u < p; ++u) {
      perm_group ru = rigid_stabilizer(q, p, depth, u, 1);
      if (machine)
        std::cout << "rigid" << u << "_order=" << ru.order() << "\n";
      else
        std::cout << "  rigid stabilizer of vertex " << u << ": order " << ru.order() << "\n";
      for (const perm& x : ru.generators()) prod_gens.push_back(x);
    }
    perm_group prod(q.degree(), std::move(prod_gens));
    bigint idx = index(q, prod);
    if (machine)
      std::cout << "rigid_product_index=" << idx << "\n";
    else
      std::cout << "  index of the rigid product: " << idx << "\n";
  }
  return 0;
}

int run_verify(const config_opts& copts, const std::string& suite, std::uint64_t seed,
               const suite_caps& caps, const std::string& format) {
  group_config cfg = resolve_config(copts);
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  int failures = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    suite_report rep = run_suite(names[i], cfg, seed, caps);
    failures += rep.failed();
    if (format == "machine")
      std::cout << render_machine(rep);
    else {
      if (i) std::cout << "\n";
      std::cout << render_text(rep);
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational toolkit for multi-edge spinal groups on the p-adic rooted tree"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  int rc = 0;
  config_opts info_c, eval_c, sect_c, theta_c, red_c, norm_c, quot_c, ver_c;
  std::string eval_word, sect_word, theta_word, red_word;
  int eval_depth = 2;
  int theta_map = 1;
  int red_cap = 12;
  int quot_depth = 2, quot_degree_cap = 1000;
  std::string quot_report = "orders";
  std::string ver_suite;
  std::uint64_t ver_seed = 1;
  suite_caps ver_caps;

  CLI::App* info = app.add_subcommand("info", "Group facts from the defining tuple");
  attach_config(info, info_c);
  info->callback([&] { rc = run_info(info_c, format); });

  CLI::App* ev = app.add_subcommand("eval", "Evaluate a word as a finite-depth portrait");
  attach_config(ev, eval_c);
  ev->add_option("word", eval_word, "Word like a*b1^2*a^-1")->required();
  ev->add_option("--depth", eval_depth, "Tree depth")->capture_default_str();
  ev->callback([&] { rc = run_eval(eval_c, eval_word, eval_depth, format); });

  CLI::App* se = app.add_subcommand("sections", "Level-1 sections of a stabilizer word");
  attach_config(se, sect_c);
  se->add_option("word", sect_word, "Word with zero a-exponent")->required();
  se->callback([&] { rc = run_sections(sect_c, sect_word, format); });

  CLI::App* th = app.add_subcommand("theta", "Apply one contraction map to a derived word");
  attach_config(th, theta_c);
  th->add_option("word", theta_word, "Word with zero exponent vector")->required();
  th->add_option("--map", theta_map, "Which map, 1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  th->callback([&] { rc = run_theta(theta_c, theta_word, theta_map, format); });

  CLI::App* re = app.add_subcommand("reduce", "Contract a derived word to length 0 or 2");
  attach_config(re, red_c);
  re->add_option("word", red_word, "Word with zero exponent vector")->required();
  re->add_option("--cap", red_cap, "Per-stage step cap")->capture_default_str();
  re->callback([&] { rc = run_reduce(red_c, red_word, red_cap, format); });

  CLI::App* no = app.add_subcommand("normalize", "Bring the defining tuple to normal form");
  attach_config(no, norm_c);
  no->callback([&] { rc = run_normalize(norm_c, format); });

  CLI::App* qu = app.add_subcommand("quotient", "Report on a finite congruence quotient");
  attach_config(qu, quot_c);
  qu->add_option("--depth", quot_depth, "Tree depth")->capture_default_str();
  qu->add_option("--report", quot_report, "What to compute")
      ->check(CLI::IsMember({"orders", "abelianization", "gamma3", "rigid"}))
      ->capture_default_str();
  qu->add_option("--degree-cap", quot_degree_cap, "Largest permitted p^depth")
      ->capture_default_str();
  qu->callback(
      [&] { rc = run_quotient(quot_c, quot_depth, quot_report, quot_degree_cap, format); });

  CLI::App* ve = app.add_subcommand("verify", "Run a verification suite");
  attach_config(ve, ver_c);
  ve->add_option("--suite", ver_suite, "Suite name, or 'all'")->required();
  ve->add_option("--seed", ver_seed, "Random seed")->capture_default_str();
  ve->add_option("--samples", ver_caps.samples, "Override the sample count (0 = default)");
  ve->add_option("--cap", ver_caps.step_cap, "Contraction step cap")->capture_default_str();
  ve->add_option("--degree-cap", ver_caps.degree_cap, "Largest permitted quotient degree")
      ->capture_default_str();
  ve->add_option("--golden", ver_caps.golden_path, "Golden-value table")->capture_default_str();
  ve->callback([&] { rc = run_verify(ver_c, ver_suite, ver_seed, ver_caps, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const spinal::error& e) {
    std::cerr << "error [" << spinal::errc_name(e.code()) << "] " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return rc;
}
