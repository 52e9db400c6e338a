#pragma once

#include <cstdint>
#include <vector>

#include "spinal/errors.hpp"

namespace spinal {

// Symbolic elements of the free product C_p * C_p^r with free generators
// a (order p) and b_1..b_r (commuting, each of order p).  The normal form is
//     a^{s_1} c_1 a^{s_2} c_2 ... c_m a^{s_{m+1}}
// with every c_j a nonzero exponent vector over the b's and every interior
// s_j nonzero mod p.  length() is m, the number of b-syllables.

// One b-syllable: exponents of b_1..b_r, entries 0..p-1, not all zero when
// the syllable sits inside a reduced word.
struct syllable {
  std::vector<int> beta;

  bool is_zero() const {
    for (int v : beta)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const syllable&) const = default;
};

struct exponent_vector {
  int eps_a = 0;
  std::vector<int> eps_b;
  bool operator==(const exponent_vector&) const = default;
  bool is_zero() const {
    if (eps_a != 0) return false;
    for (int v : eps_b)
      if (v != 0) return false;
    return true;
  }
};

class reduced_word;

// Accumulates generator powers and merges them to normal form on the fly.
class word_builder {
 public:
  word_builder(int p, int r) : p_(p), r_(r) {}

  void push_a(long long exp);
  void push_b(int index, long long exp);  // index in 1..r
  void push_syllable(const syllable& s);
  void append(const reduced_word& w);
  void append_inverse(const reduced_word& w);

  reduced_word build() const;

 private:
  struct atom {
    bool is_a;
    int a_exp;
    syllable syl;
  };
  int p_, r_;
  std::vector<atom> stack_;
};

class reduced_word {
 public:
  reduced_word() : reduced_word(3, 1) {}
  reduced_word(int p, int r) : p_(p), r_(r), a_exp_{0} {}

  int p() const { return p_; }
  int r() const { return r_; }
  int length() const { return static_cast<int>(syllables_.size()); }
  bool is_identity() const { return syllables_.empty() && a_exp_[0] == 0; }

  // a_exponents() has length()+1 entries; word = a^{s_0} c_0 a^{s_1} ...
  const std::vector<int>& a_exponents() const { return a_exp_; }
  const std::vector<syllable>& syllables() const { return syllables_; }

  bool operator==(const reduced_word&) const = default;
  std::uint64_t hash() const;

 private:
  friend class word_builder;
  int p_, r_;
  std::vector<int> a_exp_;
  std::vector<syllable> syllables_;
};

reduced_word word_a(int p, int r, long long exp = 1);
reduced_word word_b(int p, int r, int index, long long exp = 1);

// Raw input: (generator index, exponent) pairs, index 0 for a and 1..r for
// the b's; reduction merges adjacent same-factor runs and strips empties.
reduced_word reduce(int p, int r, const std::vector<std::pair<int, long long>>& raw);

reduced_word multiply(const reduced_word& u, const reduced_word& v);
reduced_word invert(const reduced_word& w);
reduced_word conjugate(const reduced_word& x, const reduced_word& g);   // g^-1 x g
reduced_word commutator(const reduced_word& x, const reduced_word& y);  // x^-1 y^-1 x y
reduced_word power(const reduced_word& w, long long e);

exponent_vector exponents(const reduced_word& w);

// Spine form of a word with eps_a == 0: w = prod_j (c_j)^{a^{t_j}} with
// consecutive t_j distinct mod p.  Errors with not_in_l otherwise.
struct spine_factor {
  int t;
  syllable c;
  bool operator==(const spine_factor&) const = default;
};
using spine_form_t = std::vector<spine_factor>;

spine_form_t spine_form(const reduced_word& w);
reduced_word from_spine(int p, int r, const spine_form_t& factors);

struct word_hasher {
  std::size_t operator()(const reduced_word& w) const { return static_cast<std::size_t>(w.hash()); }
};

}  // namespace spinal
