#include "spinal/perm.hpp"

namespace spinal {

perm perm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    require(v >= 0 && v < n && !seen[v], errc::invalid_argument, "not a permutation");
    seen[v] = 1;
  }
  perm p;
  p.img_ = std::move(images);
  return p;
}

perm perm::compose(const perm& then) const {
  require(degree() == then.degree(), errc::depth_mismatch, "permutation degrees differ");
  perm out;
  out.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) out.img_[i] = then.img_[img_[i]];
  return out;
}

perm perm::inverse() const {
  perm out;
  out.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) out.img_[img_[i]] = i;
  return out;
}

perm perm::pow(long long e) const {
  perm base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  perm acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the image list
  for (int v : img_) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

perm cycle_perm(int p) {
  std::vector<int> img(p);
  for (int i = 0; i < p; ++i) img[i] = (i + 1) % p;
  return perm::from_images(std::move(img));
}

}  // namespace spinal
