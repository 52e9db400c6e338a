#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinal/config.hpp"
#include "spinal/group.hpp"
#include "spinal/report.hpp"
#include "spinal/rng.hpp"

namespace spinal {

// Budgets for the verification suites.  `samples` scales the randomized
// checks (0 keeps each suite's documented default); the other caps bound the
// search and chain work.  Golden comparisons are skipped, not failed, when
// the table at golden_path cannot be read.
struct suite_caps {
  int samples = 0;
  int step_cap = 12;          // theta-reduction budget per stage
  int degree_cap = 1000;      // quotient degree bound on p^n
  long long work_cap = 1000000000;  // stabilizer-chain point operations
  std::string golden_path = "data/golden.txt";
};

// Registry of the verification suites, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one named suite against the configured group.  The machine rendering
// of the returned report is byte-identical across runs for a fixed
// (config, seed, caps) triple.  Errors: unknown_suite, config_invalid.
suite_report run_suite(const std::string& name, const group_config& cfg, std::uint64_t seed,
                       const suite_caps& caps = {});

// Deterministic word generators backing the randomized checks (exposed for
// the unit tests).  random_reduced_word returns a word with exactly
// `syllables` b-syllables; random_stabilizer_word additionally cancels the
// total a-exponent.
reduced_word random_reduced_word(int p, int r, int syllables, splitmix64& rng);
reduced_word random_stabilizer_word(int p, int r, int syllables, splitmix64& rng);

// A word with zero exponent vector and exactly target_length syllables,
// built from products of random conjugated commutators, retried until the
// length lands on target.  Errors with unreachable when the retry budget is
// spent -- in particular for target 1, which no zero-exponent word attains.
reduced_word random_derived_word(const spinal_group& g, int target_length, std::uint64_t seed);

}  // namespace spinal
