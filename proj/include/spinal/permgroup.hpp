#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "spinal/perm.hpp"
#include "spinal/portrait.hpp"

namespace spinal {

using bigint = boost::multiprecision::cpp_int;

// Finitely generated permutation group with a deterministic stabilizer chain
// (Schreier-Sims): base points are taken from base_hint in order, then in
// lexicographic point order; orbits and transversals extend in breadth-first
// discovery order with generators applied in listed order, so identical input
// always yields the identical chain.  Construction is single-writer (the
// chain is built eagerly); afterwards all queries are read-only.
class perm_group {
 public:
  perm_group(int degree, std::vector<perm> generators, std::vector<int> base_hint = {},
             long long work_cap = kDefaultWorkCap);

  int degree() const { return degree_; }
  const std::vector<perm>& generators() const { return gens_; }
  const bigint& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const perm& g) const;

  const std::vector<int>& base() const { return base_; }
  // Strong generators of the stabilizer of base()[0..k-1] (pointwise).
  std::vector<perm> chain_level_generators(size_t k) const;

  static constexpr long long kDefaultWorkCap = 1000000000;

 private:
  struct level {
    int beta = -1;
    std::vector<perm> gens;
    std::vector<int> orbit;
    std::vector<int> pos;      // degree-sized; index into orbit, or -1
    std::vector<perm> trans;   // rep u with beta^u = point, valid where pos >= 0
  };

  void build(std::vector<int> hint, long long cap);
  void recompute_orbit(level& lv, long long& work, long long cap) const;
  std::pair<size_t, perm> strip(perm g, size_t from) const;

  int degree_;
  std::vector<perm> gens_;
  std::vector<level> levels_;
  std::vector<int> base_;
  bigint order_ = 1;
};

bigint index(const perm_group& g, const perm_group& h);  // not_subgroup checked

perm_group normal_closure(const perm_group& ambient, const std::vector<perm>& seeds,
                          long long work_cap = perm_group::kDefaultWorkCap);
perm_group derived_subgroup(const perm_group& g);
// Third term of the lower central series, [[G,G],G], via the normal closure
// of triple commutators of generators.
perm_group gamma3(const perm_group& g);

perm_group pointwise_stabilizer(const perm_group& g, const std::vector<int>& points);

// Helpers for groups acting on the p^n leaves of the depth-n tree.
perm_group level_stabilizer(const perm_group& g, int p, int n, int k);
std::vector<perm> block_sections(const perm& s, int p, int n);  // not_in_stabilizer checked
perm assemble_sections(const std::vector<perm>& sections);
perm_group rigid_stabilizer(const perm_group& g, int p, int n, int vertex, int k);
std::vector<perm> restrict_to_block(const std::vector<perm>& gens, int block_size, int block);

bool is_transitive(int degree, const std::vector<perm>& gens);

// Finite congruence quotient G / stab(depth) as leaf permutations.
// degree_cap bounds p^depth (default 1000, the desk-scale contract).
perm_group quotient_group(const spinal_group& g, int depth, int degree_cap = 1000,
                          long long work_cap = perm_group::kDefaultWorkCap);

}  // namespace spinal
