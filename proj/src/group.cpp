#include "spinal/group.hpp"

#include <deque>
#include <unordered_set>

namespace spinal {

spinal_group::spinal_group(defining_tuple tuple) : tuple_(std::move(tuple)) {
  n_star_ = 0;
  for (int j = 1; j <= p() - 1; ++j)
    if (tuple_.entry(0, j) != 0) n_star_ = j;
  normalized_ = tuple_.entry(0, 1) == 1;
}

std::vector<reduced_word> spinal_group::sections(const reduced_word& w) const {
  require(w.p() == p() && w.r() == r(), errc::context_mismatch, "word context (p, r) mismatch");
  require(exponents(w).eps_a == 0, errc::not_in_stabilizer,
          "sections need total a-exponent 0 mod p");
  std::vector<word_builder> out;
  out.reserve(p());
  for (int j = 0; j < p(); ++j) out.emplace_back(p(), r());

  for (const spine_factor& f : spine_form(w)) {
    // The base tuple of the syllable c: coordinate i < p-1 carries
    // a^{sum_i beta_i e_{i, j+1}}, the last coordinate carries c itself; the
    // conjugation by a^{t} rotates coordinates by t.
    std::vector<int> v(p() - 1, 0);
    for (int col = 1; col <= p() - 1; ++col) {
      long long acc = 0;
      for (int i = 0; i < r(); ++i) acc += static_cast<long long>(f.c.beta[i]) * tuple_.entry(i, col);
      v[col - 1] = mod_norm(acc, p());
    }
    for (int j = 0; j < p(); ++j) {
      int idx = mod_norm(j - f.t, p());
      if (idx == p() - 1)
        out[j].push_syllable(f.c);
      else
        out[j].push_a(v[idx]);
    }
  }

  std::vector<reduced_word> res;
  res.reserve(p());
  for (auto& b : out) res.push_back(b.build());
  return res;
}

reduced_word spinal_group::section(const reduced_word& w, int j) const {
  require(j >= 1 && j <= p(), errc::invalid_argument, "section index out of 1..p");
  return sections(w)[j - 1];
}

reduced_word spinal_group::theta1(const reduced_word& z) const {
  require(is_normalized(), errc::not_normalized, "theta maps need e_{1,1} == 1");
  require(exponents(z).is_zero(), errc::not_in_derived,
          "theta maps need a zero exponent vector");
  reduced_word z1 = sections(z)[0];
  return commutator(gen_a(), invert(z1));
}

reduced_word spinal_group::theta2(const reduced_word& z) const {
  require(is_normalized(), errc::not_normalized, "theta maps need e_{1,1} == 1");
  require(exponents(z).is_zero(), errc::not_in_derived,
          "theta maps need a zero exponent vector");
  std::vector<reduced_word> secs = sections(z);
  word_builder tail(p(), r());
  for (int j = n_star_; j < p(); ++j) tail.append(secs[j]);  // z_{n*+1} ... z_p, 1-based
  return commutator(gen_a(), tail.build());
}

spinal_group::reduction_result spinal_group::reduce_commutator_length(const reduced_word& z,
                                                                      int step_cap) const {
  require(step_cap >= 1, errc::invalid_argument, "step cap must be positive");
  require(is_normalized(), errc::not_normalized, "theta maps need e_{1,1} == 1");
  require(!in_family_E(tuple_), errc::reduction_failed,
          "the group lies in the excluded family, where the contraction fails");
  require(exponents(z).is_zero(), errc::not_in_derived,
          "length reduction operates on zero-exponent words");
  constexpr size_t kSearchBudget = 200000;  // distinct words per stage

  reduction_result res{z, {}};
  while (res.word.length() != 0 && res.word.length() != 2) {
    const int target = res.word.length();
    struct node {
      reduced_word w;
      std::vector<int> path;
    };
    std::deque<node> frontier{{res.word, {}}};
    std::unordered_set<reduced_word, word_hasher> seen{res.word};
    bool found = false;
    for (int depth = 1; depth <= step_cap && !found && !frontier.empty(); ++depth) {
      std::deque<node> next;
      for (const node& n : frontier) {
        for (int map = 1; map <= 2 && !found; ++map) {
          reduced_word y = map == 1 ? theta1(n.w) : theta2(n.w);
          std::vector<int> path = n.path;
          path.push_back(map);
          if (y.length() < target) {
            res.word = y;
            for (int m : path) res.trace.push_back(m);
            found = true;
            break;
          }
          if (seen.size() < kSearchBudget && seen.insert(y).second)
            next.push_back({std::move(y), std::move(path)});
        }
        if (found) break;
      }
      frontier = std::move(next);
    }
    if (!found)
      fail(errc::reduction_failed,
           "no strictly shorter word within " + std::to_string(step_cap) +
               " theta steps; the cap may be too small, or the group is conjugate "
               "into the excluded family");
  }
  return res;
}

bool is_torsion(const defining_tuple& e) {
  for (int i = 0; i < e.r(); ++i) {
    long long sum = 0;
    for (int j = 1; j <= e.p() - 1; ++j) sum += e.entry(i, j);
    if (mod_norm(sum, e.p()) != 0) return false;
  }
  return true;
}

bool in_family_E(const defining_tuple& e) {
  if (e.entry(0, 1) != 1) return false;
  for (int j = 2; j <= e.p() - 1; ++j)
    if (e.entry(0, j) != 0) return false;
  for (int i = 1; i < e.r(); ++i)
    if (e.entry(i, 1) != 1) return false;
  for (int i = 0; i < e.r(); ++i)
    if (e.entry(i, e.p() - 1) != 0) return true;
  return false;
}

bool is_exceptional_G(const defining_tuple& e) {
  if (e.r() != 1) return false;
  int c = e.entry(0, 1);
  if (c == 0) return false;
  for (int j = 2; j <= e.p() - 1; ++j)
    if (e.entry(0, j) != c) return false;
  return true;
}

}  // namespace spinal
