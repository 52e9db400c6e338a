#include "spinal/words.hpp"

#include "spinal/fp.hpp"

namespace spinal {

void word_builder::push_a(long long exp) {
  int e = mod_norm(exp, p_);
  if (e == 0) return;
  if (!stack_.empty() && stack_.back().is_a) {
    int merged = mod_norm(stack_.back().a_exp + e, p_);
    if (merged == 0)
      stack_.pop_back();
    else
      stack_.back().a_exp = merged;
    return;
  }
  stack_.push_back({true, e, {}});
}

void word_builder::push_b(int index, long long exp) {
  require(index >= 1 && index <= r_, errc::invalid_argument,
          "directed generator index out of range");
  syllable s;
  s.beta.assign(r_, 0);
  s.beta[index - 1] = mod_norm(exp, p_);
  push_syllable(s);
}

void word_builder::push_syllable(const syllable& s) {
  require(static_cast<int>(s.beta.size()) == r_, errc::context_mismatch,
          "syllable width does not match r");
  syllable norm;
  norm.beta.resize(r_);
  for (int i = 0; i < r_; ++i) norm.beta[i] = mod_norm(s.beta[i], p_);
  if (norm.is_zero()) return;
  if (!stack_.empty() && !stack_.back().is_a) {
    syllable& top = stack_.back().syl;
    bool zero = true;
    for (int i = 0; i < r_; ++i) {
      top.beta[i] = mod_norm(top.beta[i] + norm.beta[i], p_);
      zero = zero && top.beta[i] == 0;
    }
    if (zero) stack_.pop_back();
    return;
  }
  stack_.push_back({false, 0, std::move(norm)});
}

void word_builder::append(const reduced_word& w) {
  require(w.p() == p_ && w.r() == r_, errc::context_mismatch, "word context (p, r) mismatch");
  const auto& a = w.a_exponents();
  const auto& s = w.syllables();
  for (size_t j = 0; j < s.size(); ++j) {
    push_a(a[j]);
    push_syllable(s[j]);
  }
  push_a(a.back());
}

void word_builder::append_inverse(const reduced_word& w) {
  require(w.p() == p_ && w.r() == r_, errc::context_mismatch, "word context (p, r) mismatch");
  const auto& a = w.a_exponents();
  const auto& s = w.syllables();
  push_a(-a.back());
  for (size_t j = s.size(); j-- > 0;) {
    syllable inv;
    inv.beta.resize(r_);
    for (int i = 0; i < r_; ++i) inv.beta[i] = mod_norm(-s[j].beta[i], p_);
    push_syllable(inv);
    push_a(-a[j]);
  }
}

reduced_word word_builder::build() const {
  reduced_word w(p_, r_);
  w.a_exp_.clear();
  size_t i = 0;
  if (!stack_.empty() && stack_[0].is_a) {
    w.a_exp_.push_back(stack_[0].a_exp);
    i = 1;
  } else {
    w.a_exp_.push_back(0);
  }
  for (; i < stack_.size(); ++i) {
    const atom& at = stack_[i];
    require(!at.is_a || !w.syllables_.empty(), errc::internal, "builder stack lost alternation");
    if (at.is_a) {
      w.a_exp_.push_back(at.a_exp);
    } else {
      if (w.a_exp_.size() == w.syllables_.size()) w.a_exp_.push_back(0);
      w.syllables_.push_back(at.syl);
    }
  }
  if (w.a_exp_.size() == w.syllables_.size()) w.a_exp_.push_back(0);
  require(w.a_exp_.size() == w.syllables_.size() + 1, errc::internal, "builder shape broken");
  return w;
}

std::uint64_t reduced_word::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(p_) << 8 | static_cast<std::uint64_t>(r_));
  for (int v : a_exp_) mix(static_cast<std::uint64_t>(v) + 1);
  for (const syllable& s : syllables_)
    for (int v : s.beta) mix(static_cast<std::uint64_t>(v) + 257);
  return h;
}

reduced_word word_a(int p, int r, long long exp) {
  word_builder b(p, r);
  b.push_a(exp);
  return b.build();
}

reduced_word word_b(int p, int r, int index, long long exp) {
  word_builder b(p, r);
  b.push_b(index, exp);
  return b.build();
}

reduced_word reduce(int p, int r, const std::vector<std::pair<int, long long>>& raw) {
  word_builder b(p, r);
  for (const auto& [gen, exp] : raw) {
    if (gen == 0)
      b.push_a(exp);
    else
      b.push_b(gen, exp);
  }
  return b.build();
}

reduced_word multiply(const reduced_word& u, const reduced_word& v) {
  require(u.p() == v.p() && u.r() == v.r(), errc::context_mismatch,
          "word context (p, r) mismatch");
  word_builder b(u.p(), u.r());
  b.append(u);
  b.append(v);
  return b.build();
}

reduced_word invert(const reduced_word& w) {
  word_builder b(w.p(), w.r());
  b.append_inverse(w);
  return b.build();
}

reduced_word conjugate(const reduced_word& x, const reduced_word& g) {
  word_builder b(x.p(), x.r());
  b.append_inverse(g);
  b.append(x);
  b.append(g);
  return b.build();
}

reduced_word commutator(const reduced_word& x, const reduced_word& y) {
  word_builder b(x.p(), x.r());
  b.append_inverse(x);
  b.append_inverse(y);
  b.append(x);
  b.append(y);
  return b.build();
}

reduced_word power(const reduced_word& w, long long e) {
  word_builder b(w.p(), w.r());
  long long n = e < 0 ? -e : e;
  for (long long i = 0; i < n; ++i) {
    if (e < 0)
      b.append_inverse(w);
    else
      b.append(w);
  }
  return b.build();
}

exponent_vector exponents(const reduced_word& w) {
  exponent_vector ev;
  ev.eps_b.assign(w.r(), 0);
  for (int s : w.a_exponents()) ev.eps_a = mod_norm(ev.eps_a + s, w.p());
  for (const syllable& s : w.syllables())
    for (int i = 0; i < w.r(); ++i) ev.eps_b[i] = mod_norm(ev.eps_b[i] + s.beta[i], w.p());
  return ev;
}

spine_form_t spine_form(const reduced_word& w) {
  require(exponents(w).eps_a == 0, errc::not_in_l,
          "spine form requires total a-exponent 0 mod p");
  // a^{s_1} c_1 a^{s_2} ... = prod_j c_j^{a^{t_j}} with t_j = -(s_1+...+s_j).
  spine_form_t out;
  int t = 0;
  const auto& a = w.a_exponents();
  const auto& s = w.syllables();
  for (size_t j = 0; j < s.size(); ++j) {
    t = mod_norm(t - a[j], w.p());
    out.push_back({t, s[j]});
  }
  return out;
}

reduced_word from_spine(int p, int r, const spine_form_t& factors) {
  word_builder b(p, r);
  for (const spine_factor& f : factors) {
    b.push_a(-f.t);
    b.push_syllable(f.c);
    b.push_a(f.t);
  }
  return b.build();
}

}  // namespace spinal
