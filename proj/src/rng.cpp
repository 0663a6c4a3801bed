#include "netee/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace netee {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kSeedSalt = 0x6b79d0e4c1a3f52dULL;
}  // namespace

std::uint64_t mix_bits(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t key, std::uint64_t tag) {
  return mix_bits(key ^ (mix_bits(tag) + kGolden + (key << 6) + (key >> 2)));
}

Rng Rng::from_seed(std::uint64_t seed) { return Rng(mix_bits(seed ^ kSeedSalt)); }

std::uint64_t Rng::next_u64() {
  ++ctr_;
  return mix_bits(key_ + kGolden * ctr_);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double Rng::gaussian(double sigma) {
  // Box-Muller; 1-u keeps the log argument in (0, 1].
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return sigma * r * std::cos(2.0 * M_PI * u2);
}

}  // namespace netee
