#include "spinal/defining_tuple.hpp"

#include <algorithm>

namespace spinal {

defining_tuple::defining_tuple(prime p, const std::vector<std::vector<int>>& rows)
    : p_(p), r_(static_cast<int>(rows.size())), rows_(p.value, 1, 1) {
  require(r_ >= 1 && r_ <= p.value - 1, errc::invalid_tuple,
          "need 1 <= r <= p-1, got r = " + std::to_string(r_));
  for (const auto& row : rows)
    require(static_cast<int>(row.size()) == p.value - 1, errc::invalid_tuple,
            "each row must have p-1 entries");
  rows_ = fp_matrix::from_rows(p.value, rows);
  require(rank(rows_) == r_, errc::invalid_tuple, "rows are linearly dependent mod p");
}

bool rows_independent(int p, const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return false;
  return rank(fp_matrix::from_rows(p, rows)) == static_cast<int>(rows.size());
}

bool coordinate_change::is_identity() const {
  if (!root_permutation.is_identity()) return false;
  return generator_matrix == fp_matrix::identity(generator_matrix.p(), generator_matrix.rows());
}

std::vector<int> scaled_coordinate_row(const std::vector<int>& row, int k, int p) {
  // new_j = l * old_{k*j mod p}, 1-based positions; k*j never hits 0 mod p.
  int l = mod_inv(k, p);
  std::vector<int> out(p - 1);
  for (int j = 1; j <= p - 1; ++j) {
    int src = k * j % p;
    out[j - 1] = l * row[src - 1] % p;
  }
  return out;
}

perm scaling_perm(int l, int p) {
  std::vector<int> img(p);
  for (int x = 0; x < p; ++x) {
    int v = l * (x + 1) % p;  // vertices are residues 1..p with p standing for 0
    img[x] = (v == 0 ? p : v) - 1;
  }
  return perm::from_images(std::move(img));
}

bool row_nondegenerate(const std::vector<int>& row, int p) {
  for (int k = 2; k <= p - 2; ++k)
    if (row[k - 2] * row[k] % p != row[k - 1] * row[k - 1] % p) return true;
  return false;
}

namespace {

bool all_first_entries_one(const fp_matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    if (m.at(i, 0) != 1) return false;
  return true;
}

bool is_pair_target(const std::vector<int>& r0, const std::vector<int>& r1, int p) {
  // rows exactly (1,0,...,0) and (1,0,...,0,1)
  if (r0[0] != 1 || r1[0] != 1) return false;
  for (int j = 1; j < p - 1; ++j)
    if (r0[j] != 0) return false;
  for (int j = 1; j < p - 2; ++j)
    if (r1[j] != 0) return false;
  return r1[p - 2] == 1;
}

std::vector<int> combine(const std::vector<int>& u, int cu, const std::vector<int>& v, int cv,
                         int p) {
  std::vector<int> out(u.size());
  for (size_t j = 0; j < u.size(); ++j) out[j] = mod_norm(static_cast<long long>(cu) * u[j] + static_cast<long long>(cv) * v[j], p);
  return out;
}

}  // namespace

normalization_result normalize_defining_tuple(const defining_tuple& e) {
  const int p = e.p();
  const int r = e.r();

  // Scalar step: find the smallest power t of the first generator and then
  // the smallest position k with (t * e_1)_k == k; such (t, k) always exists
  // because the row is nonzero.
  int t = 0, k = 0;
  for (int tc = 1; tc <= p - 1 && t == 0; ++tc)
    for (int kc = 1; kc <= p - 1; ++kc)
      if (tc * e.entry(0, kc) % p == kc) {
        t = tc;
        k = kc;
        break;
      }
  require(t != 0, errc::internal, "no scalar witness found for a nonzero row");
  const int l = mod_inv(k, p);

  // Apply the generator scaling, then the coordinate change row-by-row.
  fp_matrix work(p, r, p - 1);
  for (int i = 0; i < r; ++i) {
    std::vector<int> row = e.row(i);
    if (i == 0)
      for (int& v : row) v = v * t % p;
    work.set_row(i, scaled_coordinate_row(row, k, p));
  }
  require(work.at(0, 0) == 1, errc::internal, "scalar step must put 1 in position (1,1)");

  fp_matrix gen_change = fp_matrix::identity(p, r);
  gen_change.set(0, 0, t);

  coordinate_change witness{k, scaling_perm(l, p), gen_change};

  if (r == 1) {
    defining_tuple out(prime(p), {work.row(0)});
    return {out, witness};
  }

  // Row-operation step.  Track the accumulated generator matrix: any left
  // multiplication applied to `work` is applied to `acc` as well, keeping
  // result == acc * row_transform(original).
  fp_matrix acc = gen_change;
  auto apply_left = [&](const fp_matrix& m) {
    work = m * work;
    acc = m * acc;
  };

  if (r == 2 && p == 3) {
    // Only one normal form exists here; the rows span (Z/3)^2.
    fp_matrix target = fp_matrix::from_rows(3, {{1, 0}, {1, 1}});
    apply_left(target * inverse(work));
  } else if (r == 2) {
    rref_result rr = rref(work);
    require(rr.rank == 2 && rr.pivot_cols[0] == 0, errc::internal, "unexpected rref shape");
    apply_left(rr.transform);
    std::vector<int> top = work.row(0), bottom = work.row(1);
    // Replace the rows by (top + y*bottom, top + z*bottom).  A pair (y, z) is
    // valid when both rows pass the nondegeneracy scan, or when they hit the
    // exact (1,0,...,0),(1,0,...,0,1) pair; take the lexicographically first.
    bool found = false;
    for (int y = 0; y < p && !found; ++y)
      for (int z = y + 1; z < p && !found; ++z) {
        std::vector<int> r0 = combine(top, 1, bottom, y, p);
        std::vector<int> r1 = combine(top, 1, bottom, z, p);
        bool ok = (row_nondegenerate(r0, p) && row_nondegenerate(r1, p)) ||
                  is_pair_target(r0, r1, p);
        if (!ok) continue;
        fp_matrix mix = fp_matrix::from_rows(p, {{1, y}, {1, z}});
        apply_left(mix);
        found = true;
      }
    require(found, errc::internal, "no valid row mix exists for an r=2 tuple");
  } else {
    // r >= 3 (hence p >= 5).  Reduce, add the first row to the others, then
    // patch the last and first rows if the scan fails; the middle rows always
    // pass after the addition.
    rref_result rr = rref(work);
    require(rr.rank == r && rr.pivot_cols[0] == 0, errc::internal, "unexpected rref shape");
    apply_left(rr.transform);
    {
      fp_matrix add = fp_matrix::identity(p, r);
      for (int i = 1; i < r; ++i) add.set(i, 0, 1);
      apply_left(add);
    }
    bool changed_last = false;
    if (!row_nondegenerate(work.row(r - 1), p)) {
      // The failing shape is forced to be (1,0,...,0,1); last - 2nd + 1st
      // introduces an interior -1 next to a zero run.
      fp_matrix fix = fp_matrix::identity(p, r);
      fix.set(r - 1, 0, 1);
      fix.set(r - 1, 1, p - 1);
      apply_left(fix);
      changed_last = true;
      require(row_nondegenerate(work.row(r - 1), p), errc::internal,
              "last-row replacement failed the scan");
    }
    if (!row_nondegenerate(work.row(0), p)) {
      fp_matrix fix = fp_matrix::identity(p, r);
      if (r == 3 && changed_last) {
        fix.set(0, 0, 2);
        fix.set(0, 2, p - 1);  // 2*first - third
      } else {
        fix.set(0, 1, 1);
        fix.set(0, 2, p - 1);  // first + second - third
      }
      apply_left(fix);
      require(row_nondegenerate(work.row(0), p), errc::internal,
              "first-row replacement failed the scan");
    }
    for (int i = 0; i < r; ++i)
      require(row_nondegenerate(work.row(i), p) && work.at(i, 0) == 1, errc::internal,
              "normal form conditions not met after row operations");
  }

  require(all_first_entries_one(work), errc::internal, "first column must be all ones");
  witness.generator_matrix = acc;

  std::vector<std::vector<int>> rows;
  rows.reserve(r);
  for (int i = 0; i < r; ++i) rows.push_back(work.row(i));
  defining_tuple out(prime(p), rows);
  return {out, witness};
}

bool satisfies_normal_form(const defining_tuple& e) {
  const int p = e.p(), r = e.r();
  if (e.entry(0, 1) != 1) return false;
  if (r == 1) return true;
  for (int i = 0; i < r; ++i)
    if (e.entry(i, 1) != 1) return false;
  if (r == 2 && p == 3) return e.row(0) == std::vector<int>{1, 0} && e.row(1) == std::vector<int>{1, 1};
  if (r == 2) {
    if (row_nondegenerate(e.row(0), p) && row_nondegenerate(e.row(1), p)) return true;
    return is_pair_target(e.row(0), e.row(1), p);
  }
  for (int i = 0; i < r; ++i)
    if (!row_nondegenerate(e.row(i), p)) return false;
  return true;
}

}  // namespace spinal
