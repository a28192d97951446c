#include "cantorspec/model_gen.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "cantorspec/rng.hpp"

namespace cantorspec {

namespace {

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

std::vector<double> simplex(SplitMix64& rng, std::size_t n, double floor = 0.05) {
  std::vector<double> v(n);
  for (auto& x : v) x = floor + rng.uniform();
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= s;
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) head += v[i];
  v.back() = 1.0 - head;
  return v;
}

/// Maps with the given length fractions laid out left to right over [a,b];
/// the leftover length is split into the n-1 gaps.
std::vector<ContractionMap> lay_out(SplitMix64& rng, Interval iv, const std::vector<double>& ratios,
                                    double touching_probability) {
  const std::size_t n = ratios.size();
  const double used = std::accumulate(ratios.begin(), ratios.end(), 0.0);
  const double slack = std::max(0.0, 1.0 - used);
  std::vector<double> gaps(n - 1, 0.0);
  double gsum = 0.0;
  for (auto& g : gaps) {
    g = rng.uniform() < touching_probability ? 0.0 : 0.05 + rng.uniform();
    gsum += g;
  }
  if (gsum > 0.0) {
    for (auto& g : gaps) g *= slack / gsum;
  }

  const double len = iv.length();
  std::vector<ContractionMap> maps(n);
  double left = iv.a;
  for (std::size_t i = 0; i < n; ++i) {
    maps[i].ratio = ratios[i];
    maps[i].offset = left - ratios[i] * iv.a;
    left += ratios[i] * len + (i + 1 < n ? gaps[i] * len : 0.0);
  }
  maps.front().offset = iv.a - ratios.front() * iv.a;
  maps.back().offset = iv.b - ratios.back() * iv.b;
  return maps;
}

Interval random_interval(SplitMix64& rng) {
  const double a = -1.0 + 2.0 * rng.uniform();
  return {a, a + 0.5 + 2.5 * rng.uniform()};
}

std::vector<double> random_probs(SplitMix64& rng, std::size_t n, double zero_probability) {
  std::vector<double> p = simplex(rng, n);
  if (n >= 2 && rng.uniform() < zero_probability) {
    const std::size_t k = pick(rng, 0, n - 1);
    p[k] = 0.0;
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= s;
  }
  return p;
}

Letter balanced_letter(SplitMix64& rng, Interval iv, double alpha, const RandomModelOptions& o, std::string id) {
  const std::size_t n = pick(rng, 2, o.max_maps);
  Letter letter;
  letter.id = std::move(id);
  letter.weights = simplex(rng, n);
  const double beta = 1.0 / alpha - 1.0;
  std::vector<double> ratios(n);
  for (std::size_t i = 0; i < n; ++i) ratios[i] = std::pow(letter.weights[i], beta);
  letter.maps = lay_out(rng, iv, ratios, o.touching_probability);
  return letter;
}

}  // namespace

IfsModel random_model(std::uint64_t seed, const RandomModelOptions& o) {
  SplitMix64 rng(mix64(seed) ^ 0x243F6A8885A308D3ULL);
  if (rng.uniform() < o.balanced_probability) {
    const double alpha = 0.25 + 0.25 * rng.uniform();
    return random_balanced_model(rng(), alpha, o);
  }

  IfsModel model;
  model.interval = random_interval(rng);
  const std::size_t letters = pick(rng, 1, o.max_letters);
  for (std::size_t j = 0; j < letters; ++j) {
    const std::size_t n = pick(rng, 2, o.max_maps);
    Letter letter;
    letter.id = "L" + std::to_string(j + 1);
    letter.weights = simplex(rng, n);
    // Length fractions and gap fractions drawn together, then normalized.
    std::vector<double> raw(n);
    for (auto& x : raw) x = 0.05 + rng.uniform();
    double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    const bool tiling = rng.uniform() < 0.1;
    if (!tiling) total += (0.05 + rng.uniform()) * static_cast<double>(n - 1) * 0.5;
    for (auto& x : raw) x /= total;
    letter.maps = lay_out(rng, model.interval, raw, o.touching_probability);
    model.letters.push_back(std::move(letter));
  }
  model.probs = random_probs(rng, letters, o.zero_prob_probability);
  return model;
}

IfsModel random_balanced_model(std::uint64_t seed, double alpha, const RandomModelOptions& o) {
  SplitMix64 rng(mix64(seed) ^ 0x13198A2E03707344ULL);
  IfsModel model;
  model.interval = random_interval(rng);
  const std::size_t letters = pick(rng, 1, o.max_letters);
  for (std::size_t j = 0; j < letters; ++j) {
    model.letters.push_back(balanced_letter(rng, model.interval, alpha, o, "B" + std::to_string(j + 1)));
  }
  model.probs = random_probs(rng, letters, o.zero_prob_probability);
  return model;
}

}  // namespace cantorspec
