#include "spinal/fp.hpp"

namespace spinal {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_tuple: return "invalid_tuple";
    case errc::context_mismatch: return "context_mismatch";
    case errc::not_in_l: return "not_in_l";
    case errc::not_in_stabilizer: return "not_in_stabilizer";
    case errc::not_in_derived: return "not_in_derived";
    case errc::not_normalized: return "not_normalized";
    case errc::reduction_failed: return "reduction_failed";
    case errc::depth_mismatch: return "depth_mismatch";
    case errc::not_subgroup: return "not_subgroup";
    case errc::degree_cap: return "degree_cap";
    case errc::work_cap: return "work_cap";
    case errc::unknown_suite: return "unknown_suite";
    case errc::config_invalid: return "config_invalid";
    case errc::unreachable: return "unreachable";
    case errc::parse_error: return "parse_error";
    case errc::invalid_argument: return "invalid_argument";
    case errc::internal: return "internal";
  }
  return "unknown";
}

prime::prime(int p) : value(p) {
  static const int allowed[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int q : allowed)
    if (q == p) return;
  fail(errc::invalid_tuple, "p must be an odd prime in 3..31, got " + std::to_string(p));
}

int mod_pow(int base, long long exp, int p) {
  base = mod_norm(base, p);
  if (exp < 0) {
    base = mod_inv(base, p);
    exp = -exp;
  }
  int acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

int mod_inv(int a, int p) {
  a = mod_norm(a, p);
  require(a != 0, errc::invalid_argument, "no inverse of 0 mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);  // p prime
}

fp_matrix::fp_matrix(int p, int rows, int cols, int fill)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, mod_norm(fill, p)) {
  require(rows >= 0 && cols >= 0, errc::invalid_argument, "negative matrix shape");
}

fp_matrix fp_matrix::identity(int p, int n) {
  fp_matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

fp_matrix fp_matrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  require(!rows.empty(), errc::invalid_argument, "empty row list");
  fp_matrix m(p, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    require(static_cast<int>(rows[i].size()) == m.cols(), errc::invalid_argument,
            "ragged row list");
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<int> fp_matrix::row(int r) const {
  return {a_.begin() + static_cast<long>(r) * cols_, a_.begin() + static_cast<long>(r + 1) * cols_};
}

void fp_matrix::set_row(int r, const std::vector<int>& v) {
  require(static_cast<int>(v.size()) == cols_, errc::invalid_argument, "row size mismatch");
  for (int j = 0; j < cols_; ++j) set(r, j, v[j]);
}

void fp_matrix::swap_rows(int r1, int r2) {
  for (int j = 0; j < cols_; ++j) std::swap(a_[static_cast<size_t>(r1) * cols_ + j], a_[static_cast<size_t>(r2) * cols_ + j]);
}

void fp_matrix::scale_row(int r, int factor) {
  for (int j = 0; j < cols_; ++j) set(r, j, static_cast<long long>(at(r, j)) * mod_norm(factor, p_));
}

void fp_matrix::add_multiple(int dst, int src, int factor) {
  int f = mod_norm(factor, p_);
  for (int j = 0; j < cols_; ++j) set(dst, j, at(dst, j) + static_cast<long long>(f) * at(src, j));
}

fp_matrix fp_matrix::operator*(const fp_matrix& rhs) const {
  require(p_ == rhs.p_, errc::context_mismatch, "matrix moduli differ");
  require(cols_ == rhs.rows_, errc::invalid_argument, "matrix shape mismatch in product");
  fp_matrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.set(i, j, out.at(i, j) + static_cast<long long>(v) * rhs.at(k, j));
    }
  return out;
}

rref_result rref(const fp_matrix& m) {
  rref_result res{m, fp_matrix::identity(m.p(), m.rows()), 0, {}};
  fp_matrix& w = res.reduced;
  fp_matrix& t = res.transform;
  int lead = 0;
  for (int col = 0; col < w.cols() && lead < w.rows(); ++col) {
    int pivot = -1;
    for (int r = lead; r < w.rows(); ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead) {
      w.swap_rows(pivot, lead);
      t.swap_rows(pivot, lead);
    }
    int inv = mod_inv(w.at(lead, col), w.p());
    w.scale_row(lead, inv);
    t.scale_row(lead, inv);
    for (int r = 0; r < w.rows(); ++r) {
      if (r == lead) continue;
      int f = w.at(r, col);
      if (f == 0) continue;
      w.add_multiple(r, lead, w.p() - f);
      t.add_multiple(r, lead, w.p() - f);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

int rank(const fp_matrix& m) { return rref(m).rank; }

fp_matrix inverse(const fp_matrix& m) {
  require(m.rows() == m.cols(), errc::invalid_argument, "inverse of non-square matrix");
  rref_result r = rref(m);
  require(r.rank == m.rows(), errc::invalid_argument, "matrix is singular mod p");
  return r.transform;
}

}  // namespace spinal
