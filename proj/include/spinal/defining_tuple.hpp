#pragma once

#include <vector>

#include "spinal/fp.hpp"
#include "spinal/perm.hpp"

namespace spinal {

// The defining data of a multi-edge spinal group: an r x (p-1) matrix E over
// Z/p with linearly independent rows.  Row i gives the spine of the directed
// generator b_i: its level-1 sections are a^{e_{i,1}}, ..., a^{e_{i,p-1}}, b_i
// (recursion in the last coordinate).
class defining_tuple {
 public:
  defining_tuple(prime p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_.value; }
  int r() const { return r_; }
  // 1-based column j in 1..p-1, matching the e_{i,j} convention; i is 0-based.
  int entry(int i, int j) const {
    require(i >= 0 && i < r_ && j >= 1 && j <= p_.value - 1, errc::invalid_argument,
            "tuple entry index out of range");
    return rows_.at(i, j - 1);
  }
  std::vector<int> row(int i) const { return rows_.row(i); }
  const fp_matrix& matrix() const { return rows_; }

  bool operator==(const defining_tuple& rhs) const = default;

 private:
  prime p_;
  int r_;
  fp_matrix rows_;
};

bool rows_independent(int p, const std::vector<std::vector<int>>& rows);

// Witness of a normalization: the group defined by the normalized tuple is
// the conjugate of the original group by the recursively-rooted automorphism
// f with label root_permutation at every vertex, after the generator change
// recorded in generator_matrix.  Concretely, writing row_transform for the
// per-row map v_j -> l * v_{(k*j mod p)} (l = k^{-1} mod p, the same map f
// induces on spines), the contract is
//     normalized rows = generator_matrix * row_transform(original rows)
// and at the automorphism level, generator i of the normalized group equals
// prod_j (b_j^f)^{A_{ij}} with A = generator_matrix.
struct coordinate_change {
  int scalar_power = 1;     // k: the inverse of the root permutation is x -> k*x
  perm root_permutation;    // pi: x -> l*x on level-1 vertices (0-based storage)
  fp_matrix generator_matrix;  // r x r, invertible over Z/p

  bool is_identity() const;
};

struct normalization_result {
  defining_tuple tuple;
  coordinate_change witness;
};

// Row transform induced on spines by conjugation with the witness of scalar k.
std::vector<int> scaled_coordinate_row(const std::vector<int>& row, int k, int p);

// Permutation x -> l*x on residues {1..p} (p plays 0), stored 0-based.
perm scaling_perm(int l, int p);

// Nondegeneracy scan used by the normal-form conditions: some k in 2..p-2 has
// e_{k-1} * e_{k+1} != e_k^2 (1-based positions).
bool row_nondegenerate(const std::vector<int>& row, int p);

// Brings a tuple to the normal form used by the contraction machinery:
// e_{1,1} = 1 always; for r >= 2 additionally the case-by-case row conditions
// checked by satisfies_normal_form.  Deterministic; returns the certificate.
normalization_result normalize_defining_tuple(const defining_tuple& e);

bool satisfies_normal_form(const defining_tuple& e);

}  // namespace spinal
