#pragma once
// Seedable, portable random number generation. All randomness in jitterlab
// flows through this generator so that split generation and simulation are
// byte-identical across platforms and across re-runs.
//
// Algorithm (pinned, do not change without a format version bump):
//   - splitmix64 as the core stream (Steele, Lea & Flood's mixer constants)
//   - bounded draws by masked rejection (no modulo bias, no libc distributions)
//   - substream k of seed s starts from mix(mix(s) + k)

#include <bit>
#include <cstdint>
#include <vector>

namespace jitterlab {

constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic seed for the idx-th substream of a base seed.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t idx) {
  return splitmix64_mix(splitmix64_mix(seed) + idx);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n) via masked rejection; n = 0 or 1 returns 0.
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = (std::uint64_t(-1)) >> std::countl_zero(n - 1);
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Moves a uniform k-subset to the front of items (partial Fisher-Yates)
  // and returns it; order within the selection is part of the pinned stream.
  template <typename T>
  std::vector<T> sample_front(std::vector<T>& items, std::size_t k) {
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t j = t + static_cast<std::size_t>(bounded(items.size() - t));
      std::swap(items[t], items[j]);
    }
    return std::vector<T>(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(k));
  }

private:
  std::uint64_t state_;
};

}  // namespace jitterlab
