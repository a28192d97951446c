#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "cantorspec/ifs_model.hpp"
#include "cantorspec/random_tree.hpp"

namespace cantorspec {

/// One individual of the Crump-Mode-Jagers population attached to a model.
/// Child i is born at birth_time + child_offsets[i-1], where the offset is
/// -ln(r_i m_i) of the individual's letter.
struct BirthEvent {
  Address address;
  double birth_time = 0.0;
  std::size_t letter = 0;
  std::vector<double> child_offsets;
};

/// Every individual born by `horizon`, in birth order (ties broken by
/// lexicographic address order). Each event carries its children's offsets, so
/// children born after the horizon are known without being listed.
struct PopulationRun {
  std::shared_ptr<const IfsModel> model;
  std::uint64_t seed = 0;
  double horizon = 0.0;
  /// Malthusian parameter used by the martingale, always gamma_r of the model.
  double gamma = 0.0;
  std::vector<BirthEvent> events;
};

/// Labels come from the same per-address streams as sample_tree, so a run and a
/// tree with the same seed describe the same random tree.
/// Throws std::invalid_argument for t_max < 0.
PopulationRun simulate_population(std::shared_ptr<const IfsModel> model, double t_max, std::uint64_t seed);
PopulationRun simulate_population(const IfsModel& model, double t_max, std::uint64_t seed);

/// Smallest run (horizon grown geometrically) holding at least n individuals.
PopulationRun simulate_first_individuals(std::shared_ptr<const IfsModel> model, std::size_t n, std::uint64_t seed);

/// R_n = 1 + sum over the first n individuals of
///       (sum_i e^{-gamma sigma_child_i} - e^{-gamma sigma}).
/// Throws std::invalid_argument when fewer than n individuals are materialized.
double martingale_R(const PopulationRun& run, std::size_t n);

/// R_0, R_1, ..., R_K for the K materialized individuals.
std::vector<double> martingale_path(const PopulationRun& run);

/// R_n as the truncation estimate of the martingale limit W.
double estimate_W(const PopulationRun& run, std::size_t n);

/// Number of individuals born after t to mothers born at or before t.
/// Throws std::invalid_argument for t beyond the horizon (or negative t).
std::size_t z_process(const PopulationRun& run, double t);

/// CSV with header order_index,address,sigma,letter.
void write_events_csv(std::ostream& out, const PopulationRun& run);

}  // namespace cantorspec
