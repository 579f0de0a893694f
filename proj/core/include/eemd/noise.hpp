#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eemd {

/// Identifies the white-noise realization of one ensemble member. With a
/// nonzero base seed the samples depend only on (base_seed, member_index),
/// never on which thread draws them or in what order.
struct NoiseStream {
  std::uint64_t base_seed = 0;  // 0 draws a seed from std::random_device
  std::size_t member_index = 0;

  /// Seed of the member's generator. Only meaningful for base_seed != 0.
  std::uint64_t member_seed() const noexcept;
};

/// SplitMix64 finalizer; a bijection on 64-bit integers.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Returns a nonzero seed from std::random_device.
std::uint64_t entropy_seed();

/// n independent standard-normal draws from the member's stream.
std::vector<double> generate_noise(const NoiseStream& stream, std::size_t n);

/// Fills `out` with standard-normal draws from the member's stream.
void generate_noise(const NoiseStream& stream, std::span<double> out);

}  // namespace eemd
