#pragma once

#include <cstdint>
#include <random>

namespace pdegen {

// Counter-based generator: hash of (seed, index) -> uniform double in [0,1).
// Used for sample placement so the dataset is a pure function of the seed,
// independent of draw order or platform.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline double uniform_from_counter(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t z = splitmix64(seed ^ splitmix64(index + 1));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Streaming RNG for weight init. std::mt19937_64 has a standard-specified
// sequence; the [0,1) mapping is done by hand because
// std::uniform_real_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-bound, bound].
  double symmetric(double bound) { return (2.0 * uniform01() - 1.0) * bound; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over raw bytes; used for replica checksums and golden-output tests.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace pdegen
