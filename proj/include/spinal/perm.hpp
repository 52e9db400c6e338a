#pragma once

#include <cstdint>
#include <vector>

#include "spinal/errors.hpp"

namespace spinal {

// Permutation in one-line form (0-based images), acting on the right:
// apply(x) is the image of x, and compose(f, g) means "f first, then g".
class perm {
 public:
  perm() = default;
  explicit perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }
  static perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }
  int operator[](int x) const { return img_[x]; }

  perm compose(const perm& then) const;  // x -> then[this[x]]
  perm inverse() const;
  perm pow(long long e) const;

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }
  // Smallest moved point, or -1 if identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  bool operator==(const perm& rhs) const = default;
  std::uint64_t hash() const;

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

// p-cycle 0 -> 1 -> ... -> p-1 -> 0; the rooted generator's action on level-1
// vertices.
perm cycle_perm(int p);

inline perm conjugate(const perm& x, const perm& g) {  // g^-1 x g
  return g.inverse().compose(x).compose(g);
}
inline perm commutator(const perm& x, const perm& y) {  // x^-1 y^-1 x y
  return x.inverse().compose(y.inverse()).compose(x).compose(y);
}

struct perm_hasher {
  std::size_t operator()(const perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace spinal
