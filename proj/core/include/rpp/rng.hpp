#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rpp {

/// SplitMix64 finalizer. Used for counter-based seed derivation so that
/// stream identities are stable: adding trials or algorithms never perturbs
/// the seeds of existing streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a, used to derive stable per-algorithm noise branches from names.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// master seed -> per-trial seed -> per-branch seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial,
                                    std::uint64_t branch) noexcept {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ splitmix64(0x747269616cULL + trial));
  s = splitmix64(s ^ splitmix64(0x6272616e6368ULL + branch));
  return s;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace rpp
