#include "doctest.h"
#include "spinal/defining_tuple.hpp"
#include "spinal/group.hpp"

using namespace spinal;

TEST_CASE("row independence over Z/p") {
  CHECK(rows_independent(3, {{1, 2}}));
  CHECK_FALSE(rows_independent(3, {{0, 0}}));
  CHECK_FALSE(rows_independent(3, {{1, 2}, {2, 1}}));  // second row = 2 * first
  CHECK(rows_independent(3, {{1, 0}, {1, 1}}));
  CHECK(rows_independent(5, {{1, 0, 0, 0}, {1, 0, 0, 1}}));
}

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(defining_tuple(prime(3), {}), error);
  CHECK_THROWS_AS(defining_tuple(prime(3), {{1, 2, 3}}), error);
  CHECK_THROWS_AS(defining_tuple(prime(3), {{1, 2}, {2, 1}}), error);
  CHECK_THROWS_AS(defining_tuple(prime(3), {{1, 0}, {0, 1}, {1, 1}}), error);  // r > p-1
  defining_tuple t(prime(3), {{1, 2}});
  CHECK(t.p() == 3);
  CHECK(t.r() == 1);
  CHECK(t.entry(0, 1) == 1);
  CHECK(t.entry(0, 2) == 2);
}

TEST_CASE("classifiers on the standard examples") {
  defining_tuple gs(prime(3), {{1, 2}});
  defining_tuple gexc(prime(3), {{1, 1}});
  defining_tuple gexc2(prime(3), {{2, 2}});
  defining_tuple r2(prime(3), {{1, 0}, {1, 1}});
  defining_tuple q5(prime(5), {{1, 1, 1, 2}});
  defining_tuple fam5(prime(5), {{1, 0, 0, 0}, {1, 0, 0, 1}});

  CHECK(is_torsion(gs));
  CHECK_FALSE(is_torsion(gexc));
  CHECK_FALSE(is_torsion(r2));  // first row sums to 1
  CHECK(is_torsion(q5));

  CHECK_FALSE(in_family_E(gs));
  CHECK_FALSE(in_family_E(gexc));
  CHECK(in_family_E(r2));
  CHECK(in_family_E(fam5));
  CHECK_FALSE(in_family_E(defining_tuple(prime(5), {{1, 0, 0, 0}, {1, 1, 0, 0}})));

  CHECK(is_exceptional_G(gexc));
  CHECK(is_exceptional_G(gexc2));
  CHECK_FALSE(is_exceptional_G(gs));
  CHECK_FALSE(is_exceptional_G(r2));
}

TEST_CASE("nondegeneracy scan on explicit rows") {
  // p = 5, positions k = 2, 3: compare e_{k-1} e_{k+1} with e_k^2
  CHECK(row_nondegenerate({1, 1, 1, 2}, 5));
  CHECK_FALSE(row_nondegenerate({1, 1, 1, 1}, 5));   // geometric
  CHECK_FALSE(row_nondegenerate({1, 2, 4, 3}, 5));   // powers of 2
  CHECK_FALSE(row_nondegenerate({1, 0, 0, 1}, 5));   // zero middle
  CHECK(row_nondegenerate({1, 1, 0, 0}, 5));
}

TEST_CASE("normalization of the two-generator example at p = 3") {
  defining_tuple t(prime(3), {{1, 2}, {2, 2}});
  normalization_result res = normalize_defining_tuple(t);
  CHECK(res.tuple == defining_tuple(prime(3), {{1, 0}, {1, 1}}));
  CHECK(satisfies_normal_form(res.tuple));
  CHECK(res.witness.scalar_power == 1);
  CHECK(res.witness.root_permutation.is_identity());
  CHECK(res.witness.generator_matrix == fp_matrix::from_rows(3, {{2, 1}, {0, 2}}));
}

TEST_CASE("normalization of a row needing the scaling step") {
  defining_tuple t(prime(5), {{0, 2, 0, 0}});
  normalization_result res = normalize_defining_tuple(t);
  CHECK(res.tuple == defining_tuple(prime(5), {{1, 0, 0, 0}}));
  CHECK(res.witness.scalar_power == 2);
  CHECK(res.witness.root_permutation == scaling_perm(3, 5));
  CHECK(res.witness.root_permutation.images() == std::vector<int>{2, 0, 3, 1, 4});
  CHECK(res.witness.generator_matrix == fp_matrix::identity(5, 1));
  CHECK(satisfies_normal_form(res.tuple));
  CHECK(scaled_coordinate_row(t.row(0), res.witness.scalar_power, 5) ==
        std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("already-normal tuples come back unchanged with identity witnesses") {
  defining_tuple gs(prime(3), {{1, 2}});
  CHECK(satisfies_normal_form(gs));
  normalization_result res = normalize_defining_tuple(gs);
  CHECK(res.tuple == gs);
  CHECK(res.witness.is_identity());

  defining_tuple r2(prime(3), {{1, 0}, {1, 1}});
  CHECK(satisfies_normal_form(r2));
  normalization_result res2 = normalize_defining_tuple(r2);
  CHECK(res2.tuple == r2);
  CHECK(res2.witness.is_identity());
}

TEST_CASE("normal form requires a unit leading entry") {
  CHECK_FALSE(satisfies_normal_form(defining_tuple(prime(3), {{2, 2}})));
  CHECK_FALSE(satisfies_normal_form(defining_tuple(prime(5), {{0, 2, 0, 0}})));
  CHECK(satisfies_normal_form(defining_tuple(prime(3), {{1, 1}})));
  CHECK_FALSE(satisfies_normal_form(defining_tuple(prime(3), {{1, 0}, {2, 1}})));
}

TEST_CASE("scaling permutation fixes the distinguished vertex") {
  for (int p : {3, 5, 7}) {
    for (int l = 1; l < p; ++l) {
      perm s = scaling_perm(l, p);
      CHECK(s[p - 1] == p - 1);  // the vertex standing for residue 0
      CHECK(scaling_perm(mod_inv(l, p), p) == s.inverse());
    }
    CHECK(scaling_perm(1, p).is_identity());
  }
}
