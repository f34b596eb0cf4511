#pragma once

#include <cstdint>
#include <string_view>

namespace xfer {

// 64-bit FNV-1a. Used wherever a stable, platform-independent hash is needed
// (split membership, seed derivation, fingerprints); std::hash gives no such
// guarantee.
constexpr std::uint64_t fnv1a(std::string_view s,
                              std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed, e.g. per training phase.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t keyed_hash(std::uint64_t seed, std::string_view key) {
  return splitmix64(fnv1a(key) ^ splitmix64(seed));
}

}  // namespace xfer
