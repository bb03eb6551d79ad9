#pragma once

#include <cstdint>

namespace coopcolor {

// All randomized components draw through these helpers instead of
// <random> distributions, whose output is implementation-defined. Outputs
// must be byte-identical across platforms for a fixed seed.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b ^ 0x6a09e667f3bcc909ULL));
}

// Maps a uniform 64-bit word onto [0, n) by multiply-shift.
inline std::uint64_t bounded(std::uint64_t word, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(word) * static_cast<unsigned __int128>(n)) >> 64);
}

// Deterministic per-key substream: the k-th draw of stream (seed, key) does
// not depend on how draws from different streams are interleaved.
class Substream {
 public:
  Substream() = default;
  Substream(std::uint64_t seed, std::uint64_t key) : state_(mix_seed(seed, key)) {}

  std::uint64_t next() {
    state_ = splitmix64(state_);
    return state_;
  }

  std::uint64_t next_below(std::uint64_t n) { return bounded(next(), n); }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace coopcolor
