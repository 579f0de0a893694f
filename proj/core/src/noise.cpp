#include "eemd/noise.hpp"

#include <random>

namespace eemd {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

std::uint64_t NoiseStream::member_seed() const noexcept {
  // SplitMix64 stepping: member i sees the (i+1)-th output of the sequence
  // started at base_seed.
  constexpr std::uint64_t golden = UINT64_C(0x9E3779B97F4A7C15);
  return mix64(base_seed + golden * (static_cast<std::uint64_t>(member_index) + 1));
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  std::uint64_t seed = 0;
  while (seed == 0) {
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  return seed;
}

void generate_noise(const NoiseStream& stream, std::span<double> out) {
  const std::uint64_t seed =
      stream.base_seed != 0 ? stream.member_seed() : entropy_seed();
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& v : out) v = normal(engine);
}

std::vector<double> generate_noise(const NoiseStream& stream, std::size_t n) {
  std::vector<double> out(n);
  generate_noise(stream, out);
  return out;
}

}  // namespace eemd
