#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "netee/rng.hpp"

using namespace netee;

TEST_CASE("identical seeds give identical streams") {
  Rng a = Rng::from_seed(42);
  Rng b = Rng::from_seed(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct substreams diverge") {
  Rng root = Rng::from_seed(7);
  Rng a = root.substream(1);
  Rng b = root.substream(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  CHECK(equal == 0);
}

TEST_CASE("substream derivation does not advance the parent") {
  Rng root = Rng::from_seed(9);
  Rng probe = root;
  (void)root.substream(3);
  CHECK(root.next_u64() == probe.next_u64());
}

TEST_CASE("uniform01 is in [0,1) with mean 1/2") {
  Rng rng = Rng::from_seed(123);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("uniform_index is close to uniform over 8 bins") {
  Rng rng = Rng::from_seed(77);
  const int n = 100000;
  int counts[8] = {0};
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_index(8)];
  for (int c : counts) CHECK(std::abs(c / double(n) - 0.125) < 0.01);
}

TEST_CASE("uniform_index rejects n = 0") {
  Rng rng = Rng::from_seed(1);
  CHECK_THROWS_AS(rng.uniform_index(0), std::invalid_argument);
}

TEST_CASE("gaussian variance matches sigma^2 within 5%") {
  Rng rng = Rng::from_seed(2024);
  const int n = 100000;
  const double sigma = 0.01;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.gaussian(sigma);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(var - 1e-4) < 5e-6);
}

TEST_CASE("seed mixing stays collision free over a campaign-sized grid") {
  std::set<std::uint64_t> keys;
  const std::uint64_t base = Rng::from_seed(5).key();
  for (std::uint64_t cell = 0; cell < 64; ++cell)
    for (std::uint64_t run = 0; run < 64; ++run)
      keys.insert(mix_seed(mix_seed(base, cell), run));
  CHECK(keys.size() == 64 * 64);
}
