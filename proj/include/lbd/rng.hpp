#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace lbd {

// Deterministic RNG facade. All sampling goes through hand-rolled helpers so
// the byte stream of every artifact is independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1).
  double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n). Hash-set rejection; intended for k << n.
  std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> out;
    out.reserve(k);
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(k * 2);
    while (out.size() < k) {
      auto x = static_cast<std::uint32_t>(below(n));
      if (seen.insert(x).second) out.push_back(x);
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lbd
