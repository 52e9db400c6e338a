#pragma once

#include <vector>

#include "spinal/errors.hpp"

namespace spinal {

// Validated odd prime in 3..31.  Keeping p this small means every product of
// two residues fits comfortably in int, so all matrix arithmetic is native.
struct prime {
  int value;
  explicit prime(int p);
  bool operator==(const prime&) const = default;
};

inline int mod_norm(long long x, int p) {
  int v = static_cast<int>(x % p);
  return v < 0 ? v + p : v;
}

int mod_pow(int base, long long exp, int p);
int mod_inv(int a, int p);  // invalid_argument if a == 0 mod p

// Dense row-major matrix over Z/p, entries stored normalized to 0..p-1.
class fp_matrix {
 public:
  fp_matrix(int p, int rows, int cols, int fill = 0);
  static fp_matrix identity(int p, int n);
  static fp_matrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v) { a_[static_cast<size_t>(r) * cols_ + c] = mod_norm(v, p_); }

  std::vector<int> row(int r) const;
  void set_row(int r, const std::vector<int>& v);

  void swap_rows(int r1, int r2);
  void scale_row(int r, int factor);              // row r *= factor
  void add_multiple(int dst, int src, int factor);  // row dst += factor * row src

  fp_matrix operator*(const fp_matrix& rhs) const;
  bool operator==(const fp_matrix& rhs) const = default;

 private:
  int p_, rows_, cols_;
  std::vector<int> a_;
};

struct rref_result {
  fp_matrix reduced;
  fp_matrix transform;  // square; transform * input == reduced
  int rank;
  std::vector<int> pivot_cols;
};

rref_result rref(const fp_matrix& m);
int rank(const fp_matrix& m);
fp_matrix inverse(const fp_matrix& m);  // invalid_argument if singular

}  // namespace spinal
