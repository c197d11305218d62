#pragma once

#include <cstdint>
#include <random>

namespace sxcad {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// mt19937_64 with distribution helpers that do not depend on libstdc++
// distribution internals, so streams replay identically everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  uint64_t seed() const { return seed_; }
  uint64_t next() { return eng_(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(static_cast<int64_t>(hi) - lo) + 1;
    return static_cast<int>(lo + static_cast<int64_t>(next() % span));
  }

  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  bool coin() { return (next() & 1u) != 0; }

  // independent substream keyed by (this seed, id); does not consume state
  Rng derive(uint64_t id) const {
    return Rng(splitmix64(splitmix64(seed_) ^ splitmix64(id + 0x51ed2701ull)));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace sxcad
