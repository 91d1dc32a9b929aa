#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace avse {

// splitmix64; used to derive independent substream seeds from a master seed
// so that parallel and serial corpus generation produce identical bytes.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic per-item stream: mix the master seed with a label.
inline std::mt19937_64 derive_rng(uint64_t seed, const std::string& label) {
  uint64_t s = seed ^ fnv1a64(label);
  splitmix64(s);
  return std::mt19937_64(splitmix64(s));
}

inline std::mt19937_64 derive_rng(uint64_t seed, uint64_t index) {
  uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  splitmix64(s);
  return std::mt19937_64(splitmix64(s));
}

}  // namespace avse
