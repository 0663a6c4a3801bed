#pragma once

#include <cstddef>
#include <cstdint>

namespace netee {

/// SplitMix64 finalizer; also used as the seed-mixing primitive.
std::uint64_t mix_bits(std::uint64_t x);

/// Derives a new stream key from a parent key and a tag. Distinct tags give
/// statistically independent keys.
std::uint64_t mix_seed(std::uint64_t key, std::uint64_t tag);

/// Counter-based random stream. A draw depends only on (key, position), so
/// streams with distinct keys can be consumed concurrently and results never
/// depend on scheduling. Copying the object snapshots the stream position.
class Rng {
 public:
  explicit Rng(std::uint64_t key = 0) : key_(key) {}

  static Rng from_seed(std::uint64_t seed);

  /// Independent child stream; does not disturb this stream's position.
  Rng substream(std::uint64_t tag) const { return Rng(mix_seed(key_, tag)); }

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform on {0, ..., n-1}; n must be > 0.
  std::size_t uniform_index(std::size_t n);

  /// Zero-mean normal draw with standard deviation sigma.
  double gaussian(double sigma);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t ctr_ = 0;
};

}  // namespace netee
