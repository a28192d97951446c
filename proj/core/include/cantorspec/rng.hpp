#pragma once

#include <cstdint>
#include <span>

namespace cantorspec {

/// SplitMix64 (Steele, Lea, Flood 2014). Fully specified integer arithmetic,
/// so streams are bit-identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t operator()() noexcept;

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 finalizer: a bijective avalanche mix of 64 bits.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Maps 64 random bits to [0, 1).
double unit_interval(std::uint64_t bits) noexcept;

/// Seed of the private stream owned by a tree address. The result depends only
/// on (seed, path), never on the order in which addresses are visited.
std::uint64_t address_stream(std::uint64_t seed, std::span<const std::uint32_t> path) noexcept;

/// Stream of child `index` (1-based) given its parent's stream; address_stream is
/// the fold of this step over the path.
std::uint64_t child_stream(std::uint64_t parent_stream, std::uint32_t index) noexcept;

}  // namespace cantorspec
