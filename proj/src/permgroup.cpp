#include "spinal/permgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace spinal {

namespace {

void bump(long long& work, long long amount, long long cap) {
  work += amount;
  require(work <= cap, errc::work_cap,
          "stabilizer chain work cap exceeded (" + std::to_string(cap) + " point operations)");
}

}  // namespace

perm_group::perm_group(int degree, std::vector<perm> generators, std::vector<int> base_hint,
                       long long work_cap)
    : degree_(degree) {
  for (perm& g : generators) {
    require(g.degree() == degree, errc::depth_mismatch, "generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  build(std::move(base_hint), work_cap);
  order_ = 1;
  for (const level& lv : levels_) order_ *= static_cast<unsigned>(lv.orbit.size());
  base_.clear();
  for (const level& lv : levels_) base_.push_back(lv.beta);
}

void perm_group::recompute_orbit(level& lv, long long& work, long long cap) const {
  lv.orbit.assign(1, lv.beta);
  lv.pos.assign(degree_, -1);
  lv.pos[lv.beta] = 0;
  lv.trans.assign(degree_, perm());
  lv.trans[lv.beta] = perm(degree_);
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    int pt = lv.orbit[i];
    for (const perm& g : lv.gens) {
      bump(work, 1, cap);
      int img = g[pt];
      if (lv.pos[img] < 0) {
        lv.pos[img] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        bump(work, degree_, cap);
        lv.trans[img] = lv.trans[pt].compose(g);
      }
    }
  }
}

std::pair<size_t, perm> perm_group::strip(perm g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const level& lv = levels_[l];
    int img = g[lv.beta];
    if (img == lv.beta) continue;
    if (lv.pos[img] < 0) return {l, std::move(g)};
    g = g.compose(lv.trans[img].inverse());
  }
  return {levels_.size(), std::move(g)};
}

void perm_group::build(std::vector<int> hint, long long cap) {
  long long work = 0;
  levels_.clear();

  // Forced base prefix: one level per hint point, in order, even when the
  // orbit is trivial; this is what makes pointwise stabilizers directly
  // readable off the chain.
  std::vector<char> used(degree_, 0);
  for (int pt : hint) {
    require(pt >= 0 && pt < degree_, errc::invalid_argument, "base hint point out of range");
    if (used[pt]) continue;
    used[pt] = 1;
    level lv;
    lv.beta = pt;
    levels_.push_back(std::move(lv));
  }
  if (levels_.empty()) {
    if (gens_.empty()) return;
    int beta = degree_;
    for (const perm& g : gens_) beta = std::min(beta, g.first_moved() >= 0 ? g.first_moved() : degree_);
    level lv;
    lv.beta = beta;
    levels_.push_back(std::move(lv));
  }
  levels_[0].gens = gens_;
  for (level& lv : levels_) recompute_orbit(lv, work, cap);

  // Verify the Schreier condition level by level, deepest first; a violation
  // adds the sifted residue to every level it fixes through and restarts the
  // scan at the deepest modified level.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    level& lv = levels_[i];
    bool modified = false;
    for (size_t oi = 0; oi < lv.orbit.size() && !modified; ++oi) {
      int delta = lv.orbit[oi];
      for (size_t si = 0; si < lv.gens.size() && !modified; ++si) {
        const perm& s = lv.gens[si];
        bump(work, 3LL * degree_, cap);
        perm schreier = lv.trans[delta].compose(s).compose(lv.trans[s[delta]].inverse());
        if (schreier.is_identity()) continue;
        bump(work, static_cast<long long>(levels_.size() - i) * degree_, cap);
        auto [j, residue] = strip(std::move(schreier), static_cast<size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          int beta = residue.first_moved();
          level fresh;
          fresh.beta = beta;
          levels_.push_back(std::move(fresh));
        }
        for (size_t l = static_cast<size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(levels_[l], work, cap);
        }
        i = static_cast<int>(j);
        modified = true;
      }
    }
    if (!modified) --i;
  }
}

bool perm_group::contains(const perm& g) const {
  require(g.degree() == degree_, errc::depth_mismatch, "degree mismatch in membership test");
  if (g.is_identity()) return true;
  if (levels_.empty()) return false;
  auto [l, residue] = strip(g, 0);
  (void)l;
  return residue.is_identity();
}

std::vector<perm> perm_group::chain_level_generators(size_t k) const {
  if (k >= levels_.size()) return {};
  return levels_[k].gens;
}

bigint index(const perm_group& g, const perm_group& h) {
  require(g.degree() == h.degree(), errc::depth_mismatch, "degree mismatch");
  for (const perm& x : h.generators())
    require(g.contains(x), errc::not_subgroup, "claimed subgroup has a generator outside the group");
  require(g.order() % h.order() == 0, errc::internal, "order does not divide (chain bug)");
  return g.order() / h.order();
}

perm_group normal_closure(const perm_group& ambient, const std::vector<perm>& seeds,
                          long long work_cap) {
  const int n = ambient.degree();
  std::vector<perm> gens;
  perm_group current(n, {}, {}, work_cap);
  std::vector<perm> pending;
  std::unordered_set<perm, perm_hasher> queued;
  for (const perm& s : seeds) {
    require(s.degree() == n, errc::depth_mismatch, "seed degree mismatch");
    if (!s.is_identity() && queued.insert(s).second) pending.push_back(s);
  }
  while (!pending.empty()) {
    std::vector<perm> added;
    for (perm& x : pending)
      if (!current.contains(x)) {
        gens.push_back(x);
        added.push_back(std::move(x));
      }
    pending.clear();
    if (added.empty()) break;
    current = perm_group(n, gens, {}, work_cap);
    for (const perm& x : added)
      for (const perm& g : ambient.generators()) {
        perm y = conjugate(x, g);
        if (!y.is_identity() && queued.insert(y).second) pending.push_back(std::move(y));
      }
  }
  return current;
}

perm_group derived_subgroup(const perm_group& g) {
  std::vector<perm> seeds;
  const auto& gen = g.generators();
  for (size_t i = 0; i < gen.size(); ++i)
    for (size_t j = i + 1; j < gen.size(); ++j) seeds.push_back(commutator(gen[i], gen[j]));
  return normal_closure(g, seeds);
}

perm_group gamma3(const perm_group& g) {
  std::vector<perm> seeds;
  const auto& gen = g.generators();
  for (size_t i = 0; i < gen.size(); ++i)
    for (size_t j = 0; j < gen.size(); ++j) {
      if (i == j) continue;
      perm c = commutator(gen[i], gen[j]);
      if (c.is_identity()) continue;
      for (size_t k = 0; k < gen.size(); ++k) {
        perm t = commutator(c, gen[k]);
        if (!t.is_identity()) seeds.push_back(std::move(t));
      }
    }
  return normal_closure(g, seeds);
}

perm_group pointwise_stabilizer(const perm_group& g, const std::vector<int>& points) {
  perm_group rebased(g.degree(), g.generators(), points);
  std::vector<char> wanted(g.degree(), 0);
  for (int pt : points) wanted[pt] = 1;
  size_t k = 0;
  while (k < rebased.base().size() && wanted[rebased.base()[k]]) ++k;
  std::vector<perm> gens = rebased.chain_level_generators(k);
  for (const perm& x : gens)
    for (int pt : points)
      require(x[pt] == pt, errc::internal, "stabilizer extraction failed (chain bug)");
  return perm_group(g.degree(), std::move(gens));
}

perm_group level_stabilizer(const perm_group& g, int p, int n, int k) {
  require(k >= 0 && k <= n, errc::invalid_argument, "level out of range");
  long long leaves = pow_ll(p, n);
  require(g.degree() == leaves, errc::depth_mismatch, "group degree must be p^n");
  if (k == 0) return g;
  long long blocks = pow_ll(p, k);
  long long q = leaves / blocks;  // leaves per level-k block
  // Extend the action with one point per level-k vertex; the pointwise
  // stabilizer of those extra points is the kernel of the level-k action.
  int ext_degree = static_cast<int>(leaves + blocks);
  std::vector<perm> ext;
  ext.reserve(g.generators().size());
  for (const perm& s : g.generators()) {
    std::vector<int> img(ext_degree);
    for (long long x = 0; x < leaves; ++x) img[x] = s[static_cast<int>(x)];
    for (long long b = 0; b < blocks; ++b) {
      long long target = s[static_cast<int>(b * q)] / q;
      for (long long x = 1; x < q; ++x)
        require(s[static_cast<int>(b * q + x)] / q == target, errc::invalid_argument,
                "generator does not act on the tree (blocks not preserved)");
      img[leaves + b] = static_cast<int>(leaves + target);
    }
    ext.push_back(perm::from_images(std::move(img)));
  }
  std::vector<int> block_points(blocks);
  for (long long b = 0; b < blocks; ++b) block_points[b] = static_cast<int>(leaves + b);
  perm_group stab = pointwise_stabilizer(perm_group(ext_degree, std::move(ext)), block_points);
  std::vector<perm> restricted;
  for (const perm& x : stab.generators()) {
    std::vector<int> img(leaves);
    for (long long i = 0; i < leaves; ++i) img[i] = x[static_cast<int>(i)];
    restricted.push_back(perm::from_images(std::move(img)));
  }
  return perm_group(static_cast<int>(leaves), std::move(restricted));
}

std::vector<perm> block_sections(const perm& s, int p, int n) {
  long long leaves = pow_ll(p, n);
  require(s.degree() == leaves, errc::depth_mismatch, "permutation degree must be p^n");
  long long q = leaves / p;
  std::vector<perm> out;
  out.reserve(p);
  for (int b = 0; b < p; ++b) {
    std::vector<int> img(static_cast<size_t>(q));
    for (long long x = 0; x < q; ++x) {
      long long y = s[static_cast<int>(b * q + x)];
      require(y / q == b, errc::not_in_stabilizer,
              "sections need an element of the level-1 stabilizer");
      img[static_cast<size_t>(x)] = static_cast<int>(y - b * q);
    }
    out.push_back(perm::from_images(std::move(img)));
  }
  return out;
}

perm assemble_sections(const std::vector<perm>& sections) {
  int p = static_cast<int>(sections.size());
  require(p > 0, errc::invalid_argument, "no sections given");
  int q = sections[0].degree();
  std::vector<int> img(static_cast<size_t>(p) * q);
  for (int b = 0; b < p; ++b) {
    require(sections[b].degree() == q, errc::depth_mismatch, "ragged section list");
    for (int x = 0; x < q; ++x) img[static_cast<size_t>(b) * q + x] = b * q + sections[b][x];
  }
  return perm::from_images(std::move(img));
}

perm_group rigid_stabilizer(const perm_group& g, int p, int n, int vertex, int k) {
  require(k >= 1 && k <= n, errc::invalid_argument, "level out of range");
  long long leaves = pow_ll(p, n);
  require(g.degree() == leaves, errc::depth_mismatch, "group degree must be p^n");
  long long blocks = pow_ll(p, k);
  require(vertex >= 0 && vertex < blocks, errc::invalid_argument, "vertex out of range");
  long long q = leaves / blocks;
  std::vector<int> outside;
  outside.reserve(leaves - q);
  for (long long x = 0; x < leaves; ++x)
    if (x / q != vertex) outside.push_back(static_cast<int>(x));
  return pointwise_stabilizer(g, outside);
}

std::vector<perm> restrict_to_block(const std::vector<perm>& gens, int block_size, int block) {
  std::vector<perm> out;
  out.reserve(gens.size());
  for (const perm& g : gens) {
    std::vector<int> img(block_size);
    for (int x = 0; x < block_size; ++x) {
      int y = g[block * block_size + x];
      require(y / block_size == block, errc::not_in_stabilizer,
              "restriction needs elements supported on the block");
      img[x] = y - block * block_size;
    }
    out.push_back(perm::from_images(std::move(img)));
  }
  return out;
}

bool is_transitive(int degree, const std::vector<perm>& gens) {
  if (degree <= 1) return true;
  std::vector<char> seen(degree, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  size_t count = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (const perm& g : gens) {
      int img = g[queue[i]];
      if (!seen[img]) {
        seen[img] = 1;
        queue.push_back(img);
        ++count;
      }
    }
  return count == static_cast<size_t>(degree);
}

perm_group quotient_group(const spinal_group& g, int depth, int degree_cap, long long work_cap) {
  require(depth >= 1, errc::invalid_argument, "depth must be >= 1");
  long long leaves = pow_ll(g.p(), depth);
  require(leaves <= degree_cap, errc::degree_cap,
          "p^depth = " + std::to_string(leaves) + " exceeds the degree cap of " +
              std::to_string(degree_cap));
  std::vector<perm> gens;
  gens.push_back(to_leaf_perm(eval(g, g.gen_a(), depth)));
  for (int i = 1; i <= g.r(); ++i) gens.push_back(to_leaf_perm(eval(g, g.gen_b(i), depth)));
  return perm_group(static_cast<int>(leaves), std::move(gens), {}, work_cap);
}

}  // namespace spinal
