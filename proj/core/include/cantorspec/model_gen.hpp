#pragma once

#include <cstdint>

#include "cantorspec/ifs_model.hpp"

namespace cantorspec {

struct RandomModelOptions {
  std::size_t max_letters = 4;
  std::size_t max_maps = 5;
  /// Chance that all letters share one exponent alpha (sum_i (r_i m_i)^alpha = 1).
  double balanced_probability = 0.2;
  /// Chance that a given gap between neighbouring images is closed (touching maps).
  double touching_probability = 0.15;
  /// Chance that one letter gets probability zero (when there are >= 2 letters).
  double zero_prob_probability = 0.1;
};

/// Admissible random model, deterministic in the seed.
IfsModel random_model(std::uint64_t seed, const RandomModelOptions& options = {});

/// Random model whose letters all satisfy sum_i (r_i m_i)^alpha = 1 for the
/// given alpha in (0, 1/2].
IfsModel random_balanced_model(std::uint64_t seed, double alpha, const RandomModelOptions& options = {});

}  // namespace cantorspec
