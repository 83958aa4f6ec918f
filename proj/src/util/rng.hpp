#pragma once

#include <cstdint>

namespace nflux {

// SplitMix64: tiny, fast, and stable across platforms. Used both as a
// stream-splitting mixer (derive substream seeds from a master seed) and
// as the RNG for Monte Carlo paths where results must not depend on
// thread count.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n)  (n > 0).
  std::uint64_t below(std::uint64_t n) {
    // Multiply-shift; bias is negligible for our n (<< 2^32).
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

// Deterministic seed derivation: independent streams keyed by label.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  SplitMix64 mix(master ^ (0x632be59bd9b4e019ULL * (stream + 1)));
  mix.next();
  return mix.next();
}

// FNV-1a over bytes; used to hash tokens and string keys reproducibly.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace nflux
