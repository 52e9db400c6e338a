#include "doctest.h"
#include "spinal/portrait.hpp"
#include "spinal/wordio.hpp"

using namespace spinal;

namespace {

spinal_group gs3() { return spinal_group(defining_tuple(prime(3), {{1, 2}})); }

}  // namespace

TEST_CASE("the rooted generator rotates whole subtrees") {
  spinal_group g = gs3();
  perm leaf = to_leaf_perm(eval(g, g.gen_a(), 2));
  REQUIRE(leaf.degree() == 9);
  for (int i = 0; i < 9; ++i) CHECK(leaf[i] == (i + 3) % 9);
}

TEST_CASE("dump prints one-based images level by level") {
  spinal_group g = gs3();
  CHECK(dump(eval(g, g.gen_a(), 1)) == "(2 3 1)[(1 2 3),(1 2 3),(1 2 3)]");
  CHECK(dump(eval(g, g.gen_b(1), 1)) == "(1 2 3)[(1 2 3),(1 2 3),(1 2 3)]");
  CHECK(dump(eval(g, g.gen_b(1), 2)) ==
        "(1 2 3)[(2 3 1)[(1 2 3),(1 2 3),(1 2 3)],(3 1 2)[(1 2 3),(1 2 3),(1 2 3)],"
        "(1 2 3)[(1 2 3),(1 2 3),(1 2 3)]]");
}

TEST_CASE("depth truncation discards everything below the cut") {
  spinal_group g = gs3();
  CHECK(eval(g, g.gen_b(1), 1).is_identity());     // b1 fixes the 3 leaves
  CHECK_FALSE(eval(g, g.gen_b(1), 2).is_identity());
  CHECK(eval(g, g.gen_a(), 0).is_identity());      // depth 0 sees nothing
  CHECK(rooted_portrait(cycle_perm(3), 0).is_identity());
  CHECK(recursive_rooted_portrait(cycle_perm(3), 0).is_identity());
}

TEST_CASE("composition matches word multiplication") {
  spinal_group g = gs3();
  reduced_word u = parse_word("a*b1", 3, 1);
  reduced_word v = parse_word("b1^2*a^2*b1", 3, 1);
  for (int depth : {1, 2, 3}) {
    CHECK(compose(eval(g, u, depth), eval(g, v, depth)) == eval(g, multiply(u, v), depth));
    CHECK(inverse(eval(g, u, depth)) == eval(g, invert(u), depth));
    CHECK(compose(eval(g, u, depth), inverse(eval(g, u, depth))) ==
          portrait::identity(3, depth));
  }
}

TEST_CASE("powers by repeated squaring agree with iterated composition") {
  spinal_group g = gs3();
  portrait f = eval(g, parse_word("a*b1", 3, 1), 3);
  portrait ff = compose(f, f);
  CHECK(portrait_power(f, 2) == ff);
  CHECK(portrait_power(f, 3) == compose(ff, f));
  CHECK(portrait_power(f, -1) == inverse(f));
  CHECK(portrait_power(f, 0) == portrait::identity(3, 3));
}

TEST_CASE("leaf permutations round-trip through portraits") {
  spinal_group g = gs3();
  for (const char* text : {"a", "b1", "a*b1", "b1^2*a^2*b1*a^2"}) {
    portrait f = eval(g, parse_word(text, 3, 1), 3);
    perm leaf = to_leaf_perm(f);
    CHECK(from_leaf_perm(leaf, 3, 3) == f);
  }
  CHECK(to_leaf_perm(eval(g, g.gen_a(), 0)).degree() == 1);
}

TEST_CASE("leaf composition respects portrait composition") {
  spinal_group g = gs3();
  portrait f = eval(g, parse_word("a*b1", 3, 1), 2);
  portrait h = eval(g, parse_word("b1*a", 3, 1), 2);
  CHECK(to_leaf_perm(compose(f, h)) == to_leaf_perm(f).compose(to_leaf_perm(h)));
}

TEST_CASE("orders in the finite quotients") {
  spinal_group g = gs3();
  CHECK(portrait_order(eval(g, g.gen_a(), 1)) == 3);
  CHECK(portrait_order(eval(g, g.gen_a(), 4)) == 3);
  CHECK(portrait_order(eval(g, g.gen_b(1), 1)) == 1);
  CHECK(portrait_order(eval(g, g.gen_b(1), 2)) == 3);
  CHECK(portrait_order(portrait::identity(3, 2)) == 1);

  // the torsion group stabilizes while the exceptional one keeps growing
  reduced_word ab = multiply(g.gen_a(), g.gen_b(1));
  CHECK(portrait_order(eval(g, ab, 1)) == 3);
  spinal_group e(defining_tuple(prime(3), {{1, 1}}));
  reduced_word eab = multiply(e.gen_a(), e.gen_b(1));
  CHECK(portrait_order(eval(e, eab, 2)) == 9);
  CHECK(portrait_order(eval(e, eab, 3)) == 27);
}

TEST_CASE("rooted portraits only label the root") {
  perm c = cycle_perm(3);
  portrait f = rooted_portrait(c, 2);
  CHECK(f.root() == c);
  for (int i = 0; i < 3; ++i) CHECK(f.child(i).is_identity());
  portrait rec = recursive_rooted_portrait(c, 2);
  CHECK(rec.root() == c);
  for (int i = 0; i < 3; ++i) CHECK(rec.child(i) == rooted_portrait(c, 1));
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_AS(compose(portrait::identity(3, 2), portrait::identity(3, 1)), error);
  CHECK_THROWS_AS(from_leaf_perm(perm(8), 3, 2), error);
  // a permutation that mixes subtrees cannot be a portrait
  std::vector<int> img{0, 3, 1, 2, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(from_leaf_perm(perm::from_images(img), 3, 2), error);
}
