#pragma once

#include <cstdint>

namespace spinal {

// splitmix64 (Steele & Vigna): state advances by the golden-ratio constant,
// output is the finalizer mix.  Chosen because the full algorithm fits in a
// dozen lines and the stream is identical on every platform, which the
// byte-identical report contract requires.  Bounded draws use plain modulo;
// the tiny bias is irrelevant for test-data generation and keeps the draw
// sequence trivially reproducible.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n).  n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

}  // namespace spinal
