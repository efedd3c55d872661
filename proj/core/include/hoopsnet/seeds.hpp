#pragma once

// Seed derivation and portable random primitives.
//
// Every stochastic component in the library draws its randomness from a
// single base seed through derive_seed(base, stream). Streams are plain
// integers (iteration index, walk index) or label hashes, so one base seed
// reproduces any run bit-for-bit. std::uniform_* distributions are avoided
// on purpose: their output is implementation-defined, the helpers below
// are not.

#include <cstdint>
#include <random>
#include <string_view>

namespace hoopsnet {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// (base, stream) -> independent 64-bit seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream ^ 0xd6e8feb86659fd93ULL));
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform double in [0,1) from the top 53 bits.
inline double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0,n). n must be positive.
inline std::size_t rand_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rand_unit(rng) * static_cast<double>(n)) % n;
}

}  // namespace hoopsnet
