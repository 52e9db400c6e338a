#pragma once

#include <string>
#include <vector>

#include "spinal/group.hpp"
#include "spinal/perm.hpp"

namespace spinal {

// Finite-depth portrait of a tree automorphism: a permutation of the p
// subtrees at the root plus, below depth 0, one portrait per child.  Vertices
// compose left-to-right like permutations: u^{fg} = (u^f)^g.
class portrait {
 public:
  portrait() = default;
  static portrait leaf(int p) { return portrait(perm(p), {}); }
  static portrait identity(int p, int depth);
  portrait(perm root, std::vector<portrait> children);

  int arity() const { return root_.degree(); }
  int depth() const { return depth_; }
  const perm& root() const { return root_; }
  const portrait& child(int i) const { return children_[i]; }
  const std::vector<portrait>& children() const { return children_; }

  bool is_identity() const;
  bool operator==(const portrait&) const = default;

 private:
  perm root_;
  std::vector<portrait> children_;
  int depth_ = 0;
};

portrait compose(const portrait& f, const portrait& g);
portrait inverse(const portrait& f);
portrait portrait_power(const portrait& f, long long e);

// Rooted automorphism truncated at depth: label at the root only.
portrait rooted_portrait(const perm& root, int depth);
// Same label at every vertex; the shape of a normalization witness.
portrait recursive_rooted_portrait(const perm& label, int depth);

portrait eval(const spinal_group& g, const reduced_word& w, int depth);

// Lexicographic leaf action of a depth-n portrait (degree p^n).
perm to_leaf_perm(const portrait& f);
portrait from_leaf_perm(const perm& leaf, int p, int depth);

// Element order.  Aut of the depth-n tree is a p-group, so the order is the
// first p-power k with f^k trivial; computed by repeated p-th powers with an
// early exit at p^depth.
long long portrait_order(const portrait& f);

// Nested one-line dump: "(images)" at depth 0, "(images)[c_1,...,c_p]" below.
std::string dump(const portrait& f);

long long pow_ll(int base, int exp);  // small powers, overflow-checked

}  // namespace spinal
