#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fairsweep {

// SplitMix64 finalizer; used to mix seeds and derive independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t seed) { return splitmix64(seed); }

// Order-sensitive key derivation: derive_seed(s, a, b) != derive_seed(s, b, a).
template <class... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key, Rest... rest) {
  return derive_seed(splitmix64(seed ^ splitmix64(key)), rest...);
}

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, Rest... rest) {
  return derive_seed(seed, fnv1a64(tag), rest...);
}

// Deterministic random stream. mt19937_64 output is pinned by the standard;
// bounded draws and gaussians are implemented here rather than with
// std::*_distribution, whose sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1)
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n); Lemire's multiply-shift with rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    while (true) {
      std::uint64_t x = engine_();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (0ull - n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Standard normal via Box-Muller; draws exactly two uniforms per call.
  double next_gaussian() {
    double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairsweep
