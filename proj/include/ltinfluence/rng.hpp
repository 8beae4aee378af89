#pragma once

#include <cstdint>

// Counter-based randomness built on splitmix64. Every random quantity in the
// library is a pure function of (seed, counter...) words, so simulation runs
// are reproducible across platforms and thread schedules. The algorithm
// identifier reported in output metadata is "splitmix64-counter".

namespace ltinfluence::rng {

inline constexpr const char* kAlgorithm = "splitmix64-counter";
inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a + kGamma * b);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix64(mix(a, b) + kGamma * c);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t a, std::uint64_t b) {
  return to_unit(mix(a, b));
}

inline double uniform(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return to_unit(mix(a, b, c));
}

// Small sequential generator for places that want a stream of draws.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return to_unit(next_u64()); }

  // Uniform integer in [0, bound) by rejection-free scaling; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(next_unit() * static_cast<double>(bound)) % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ltinfluence::rng
