#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hpnet {

/// splitmix64 output function (Steele et al.). Used as a finalizer when
/// deriving child seeds so that nearby inputs map to unrelated outputs.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derive a child seed from (master seed, label string). Every stage of the
/// pipeline gets its own label, so any stage can be reproduced in isolation:
///   child = splitmix64(splitmix64(master ^ fnv1a64(label)))
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

/// FNV-1a 64-bit hash. Stable across platforms; used for seed derivation
/// and for config/run identifiers.
std::uint64_t fnv1a64(std::string_view bytes);

/// Deterministic random source. The engine is std::mt19937_64 (bit-exact by
/// the standard); the distribution mappings are written out explicitly here
/// because the std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (pair cached).
  double normal();

  /// Uniform index in [0, n). n must be > 0.
  std::size_t index(std::size_t n);

  /// Uniform integer in [lo, hi] inclusive.
  int int_range(int lo, int hi);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  /// k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hpnet
