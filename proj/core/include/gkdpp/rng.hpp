#ifndef GKDPP_RNG_HPP
#define GKDPP_RNG_HPP

#include <cstdint>
#include <random>

namespace gkdpp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based stream: (seed, index) fully determines the generator state,
/// so sampling in parallel is reproducible regardless of scheduling.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed2701ULL))) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0,1) with 53 random bits; stdlib distributions are avoided
  // because their output is not pinned across implementations
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gkdpp

#endif  // GKDPP_RNG_HPP
