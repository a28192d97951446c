#include "cantorspec/rng.hpp"

namespace cantorspec {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::operator()() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::uniform() noexcept { return unit_interval((*this)()); }

std::uint64_t address_stream(std::uint64_t seed, std::span<const std::uint32_t> path) noexcept {
  std::uint64_t h = mix64(seed ^ 0x5851F42D4C957F2DULL);
  for (std::uint32_t index : path) h = child_stream(h, index);
  return h;
}

std::uint64_t child_stream(std::uint64_t parent_stream, std::uint32_t index) noexcept {
  return mix64(parent_stream + kGolden * (static_cast<std::uint64_t>(index) + 1));
}

}  // namespace cantorspec
