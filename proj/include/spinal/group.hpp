#pragma once

#include <vector>

#include "spinal/defining_tuple.hpp"
#include "spinal/words.hpp"

namespace spinal {

// A multi-edge spinal group G = <a, b_1..b_r> acting on the p-regular rooted
// tree, presented symbolically: group elements are handled as words in the
// free product C_p * C_p^r and the level-1 section map is computed on words.
class spinal_group {
 public:
  explicit spinal_group(defining_tuple tuple);

  int p() const { return tuple_.p(); }
  int r() const { return tuple_.r(); }
  const defining_tuple& tuple() const { return tuple_; }
  // Largest j with e_{1,j} != 0; the tail cut used by the second theta map.
  int n_star() const { return n_star_; }
  bool is_normalized() const { return normalized_; }

  reduced_word gen_a(int exp = 1) const { return word_a(p(), r(), exp); }
  reduced_word gen_b(int index, int exp = 1) const { return word_b(p(), r(), index, exp); }

  // Level-1 sections of a word with eps_a == 0 (errors not_in_stabilizer).
  // Coordinate j (1-based) of sections(w^a) equals coordinate j-1 mod p of
  // sections(w); the recursion of each b_i sits in the last coordinate.
  std::vector<reduced_word> sections(const reduced_word& w) const;
  reduced_word section(const reduced_word& w, int j) const;  // j in 1..p

  // Contraction maps on words with zero exponent vector (errors
  // not_in_derived; not_normalized unless e_{1,1} == 1):
  //   theta1(z) = [a, z_1^{-1}],  theta2(z) = [a, z_{n*+1} ... z_p].
  reduced_word theta1(const reduced_word& z) const;
  reduced_word theta2(const reduced_word& z) const;

  struct reduction_result {
    reduced_word word;
    std::vector<int> trace;  // applied maps, entries 1 or 2
  };
  // Repeatedly shortens z by breadth-first search over {theta1, theta2}
  // sequences, requiring a strict length decrease within step_cap steps per
  // stage, until the length lands in {0, 2}.  Deterministic: stages take the
  // first shorter word in BFS order (theta1 explored before theta2).
  reduction_result reduce_commutator_length(const reduced_word& z, int step_cap) const;

 private:
  defining_tuple tuple_;
  int n_star_;
  bool normalized_;
};

// Torsion criterion: every row of E sums to 0 mod p.
bool is_torsion(const defining_tuple& e);

// Syntactic membership in the exceptional family: row 1 = (1,0,...,0), every
// e_{i,1} = 1, and some e_{i,p-1} != 0.  The contraction machinery excludes
// these groups.
bool in_family_E(const defining_tuple& e);

// The one GGS-type exception to the congruence/branch results: r = 1 with a
// constant nonzero row (any constant counts; the constant-1 row is the
// standard representative).
bool is_exceptional_G(const defining_tuple& e);

}  // namespace spinal
