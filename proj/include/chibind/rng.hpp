#pragma once

#include <cstdint>

namespace chibind {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed so other ports can reproduce streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish in [0, bound) by modulo; bias is below 2^-50 for desk-sized bounds.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Independent seed for stream `index` derived from `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed ^ (index * 0xd1b54a32d192ed03ULL));
  a.next();
  return a.next();
}

}  // namespace chibind
