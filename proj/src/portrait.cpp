#include "spinal/portrait.hpp"

#include <sstream>

namespace spinal {

long long pow_ll(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    require(v <= (1LL << 62) / base, errc::degree_cap, "p^depth overflows");
    v *= base;
  }
  return v;
}

portrait portrait::identity(int p, int depth) {
  if (depth == 0) return leaf(p);
  std::vector<portrait> kids(p, identity(p, depth - 1));
  return portrait(perm(p), std::move(kids));
}

portrait::portrait(perm root, std::vector<portrait> children)
    : root_(std::move(root)), children_(std::move(children)) {
  if (children_.empty()) {
    depth_ = 0;
    return;
  }
  require(static_cast<int>(children_.size()) == root_.degree(), errc::depth_mismatch,
          "child count must equal arity");
  depth_ = children_[0].depth() + 1;
  for (const portrait& c : children_)
    require(c.depth() == depth_ - 1 && c.arity() == arity(), errc::depth_mismatch,
            "ragged portrait");
}

bool portrait::is_identity() const {
  if (!root_.is_identity()) return false;
  for (const portrait& c : children_)
    if (!c.is_identity()) return false;
  return true;
}

portrait compose(const portrait& f, const portrait& g) {
  require(f.arity() == g.arity() && f.depth() == g.depth(), errc::depth_mismatch,
          "portrait shapes differ");
  if (f.depth() == 0) return portrait(f.root().compose(g.root()), {});
  std::vector<portrait> kids;
  kids.reserve(f.arity());
  for (int x = 0; x < f.arity(); ++x) kids.push_back(compose(f.child(x), g.child(f.root()[x])));
  return portrait(f.root().compose(g.root()), std::move(kids));
}

portrait inverse(const portrait& f) {
  perm rinv = f.root().inverse();
  if (f.depth() == 0) return portrait(rinv, {});
  std::vector<portrait> kids;
  kids.reserve(f.arity());
  for (int x = 0; x < f.arity(); ++x) kids.push_back(inverse(f.child(rinv[x])));
  return portrait(std::move(rinv), std::move(kids));
}

portrait portrait_power(const portrait& f, long long e) {
  portrait base = e < 0 ? inverse(f) : f;
  if (e < 0) e = -e;
  portrait acc = portrait::identity(f.arity(), f.depth());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

portrait rooted_portrait(const perm& root, int depth) {
  // Depth counts the levels the portrait resolves, so depth 0 keeps nothing.
  if (depth == 0) return portrait::leaf(root.degree());
  std::vector<portrait> kids(root.degree(), portrait::identity(root.degree(), depth - 1));
  return portrait(root, std::move(kids));
}

portrait recursive_rooted_portrait(const perm& label, int depth) {
  if (depth == 0) return portrait::leaf(label.degree());
  std::vector<portrait> kids(label.degree(), recursive_rooted_portrait(label, depth - 1));
  return portrait(label, std::move(kids));
}

namespace {

// b_1^{beta_1} ... b_r^{beta_r} truncated at `depth`: level-1 sections are
// a-powers given by the combined row, with the same syllable in the last slot.
portrait eval_syllable(const spinal_group& g, const syllable& c, int depth) {
  const int p = g.p();
  if (depth == 0) return portrait::leaf(p);
  perm a = cycle_perm(p);
  std::vector<portrait> kids;
  kids.reserve(p);
  for (int col = 1; col <= p - 1; ++col) {
    long long acc = 0;
    for (int i = 0; i < g.r(); ++i)
      acc += static_cast<long long>(c.beta[i]) * g.tuple().entry(i, col);
    kids.push_back(rooted_portrait(a.pow(mod_norm(acc, p)), depth - 1));
  }
  kids.push_back(eval_syllable(g, c, depth - 1));
  return portrait(perm(p), std::move(kids));
}

}  // namespace

portrait eval(const spinal_group& g, const reduced_word& w, int depth) {
  require(w.p() == g.p() && w.r() == g.r(), errc::context_mismatch,
          "word context (p, r) mismatch");
  require(depth >= 0, errc::invalid_argument, "depth must be >= 0");
  const perm a = cycle_perm(g.p());
  portrait acc = portrait::identity(g.p(), depth);
  const auto& ae = w.a_exponents();
  const auto& syl = w.syllables();
  for (size_t j = 0; j < syl.size(); ++j) {
    if (ae[j] != 0) acc = compose(acc, rooted_portrait(a.pow(ae[j]), depth));
    acc = compose(acc, eval_syllable(g, syl[j], depth));
  }
  if (ae.back() != 0) acc = compose(acc, rooted_portrait(a.pow(ae.back()), depth));
  return acc;
}

perm to_leaf_perm(const portrait& f) {
  if (f.depth() == 0) return perm(1);  // p^0 leaves: the trivial action
  long long q = pow_ll(f.arity(), f.depth() - 1);
  std::vector<int> img(static_cast<size_t>(q) * f.arity());
  for (int b = 0; b < f.arity(); ++b) {
    perm inner = to_leaf_perm(f.child(b));
    long long base = static_cast<long long>(f.root()[b]) * q;
    for (long long x = 0; x < q; ++x)
      img[static_cast<size_t>(b) * q + x] = static_cast<int>(base + inner[static_cast<int>(x)]);
  }
  return perm::from_images(std::move(img));
}

portrait from_leaf_perm(const perm& leaf, int p, int depth) {
  require(leaf.degree() == pow_ll(p, depth), errc::depth_mismatch,
          "leaf permutation degree must be p^depth");
  if (depth == 0) return portrait::leaf(p);
  long long q = pow_ll(p, depth - 1);
  std::vector<int> root(p);
  std::vector<portrait> kids;
  kids.reserve(p);
  for (int b = 0; b < p; ++b) {
    int target = static_cast<int>(leaf[static_cast<int>(b * q)] / q);
    std::vector<int> inner(static_cast<size_t>(q));
    for (long long x = 0; x < q; ++x) {
      long long y = leaf[static_cast<int>(b * q + x)];
      require(y / q == target, errc::invalid_argument,
              "permutation does not preserve the subtree blocks");
      inner[static_cast<size_t>(x)] = static_cast<int>(y - static_cast<long long>(target) * q);
    }
    root[b] = target;
    kids.push_back(from_leaf_perm(perm::from_images(std::move(inner)), p, depth - 1));
  }
  return portrait(perm::from_images(std::move(root)), std::move(kids));
}

long long portrait_order(const portrait& f) {
  long long bound = pow_ll(f.arity(), f.depth());
  long long order = 1;
  portrait g = f;
  while (!g.is_identity()) {
    g = portrait_power(g, f.arity());
    order *= f.arity();
    require(order <= bound, errc::internal, "order exceeded the p-group exponent bound");
  }
  return order;
}

std::string dump(const portrait& f) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < f.arity(); ++i) {
    if (i) os << ' ';
    os << f.root()[i] + 1;  // vertices print 1-based
  }
  os << ')';
  if (f.depth() > 0) {
    os << '[';
    for (int i = 0; i < f.arity(); ++i) {
      if (i) os << ',';
      os << dump(f.child(i));
    }
    os << ']';
  }
  return os.str();
}

}  // namespace spinal
