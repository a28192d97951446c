#include "cantorspec/branching_sim.hpp"

#include <cmath>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

#include "cantorspec/exponent.hpp"

namespace cantorspec {

namespace {

struct Pending {
  double birth_time;
  Address address;
};

struct LaterFirst {
  bool operator()(const Pending& x, const Pending& y) const {
    if (x.birth_time != y.birth_time) return x.birth_time > y.birth_time;
    return x.address > y.address;
  }
};

}  // namespace

PopulationRun simulate_population(std::shared_ptr<const IfsModel> model, double t_max, std::uint64_t seed) {
  if (!model) throw std::invalid_argument("simulate_population: null model");
  if (!(t_max >= 0.0)) throw std::invalid_argument("simulate_population: t_max must be >= 0");
  require_valid(*model);

  PopulationRun run;
  run.model = model;
  run.seed = seed;
  run.horizon = t_max;
  run.gamma = solve_recursive_exponent(*model);

  std::vector<std::vector<double>> offsets;
  for (const auto& letter : model->letters) {
    std::vector<double> taus;
    for (double q : contraction_products(letter)) taus.push_back(-std::log(q));
    offsets.push_back(std::move(taus));
  }

  std::priority_queue<Pending, std::vector<Pending>, LaterFirst> heap;
  heap.push({0.0, Address{}});
  while (!heap.empty() && heap.top().birth_time <= t_max) {
    Pending p = heap.top();
    heap.pop();
    const std::size_t letter = draw_letter(*model, seed, p.address);
    for (std::uint32_t i = 1; i <= offsets[letter].size(); ++i) {
      Address child = p.address;
      child.push_back(i);
      heap.push({p.birth_time + offsets[letter][i - 1], std::move(child)});
    }
    run.events.push_back({std::move(p.address), p.birth_time, letter, offsets[letter]});
  }
  return run;
}

PopulationRun simulate_population(const IfsModel& model, double t_max, std::uint64_t seed) {
  return simulate_population(std::make_shared<const IfsModel>(model), t_max, seed);
}

PopulationRun simulate_first_individuals(std::shared_ptr<const IfsModel> model, std::size_t n, std::uint64_t seed) {
  double t = 1.0;
  for (;;) {
    PopulationRun run = simulate_population(model, t, seed);
    if (run.events.size() >= n) return run;
    t *= 1.5;
  }
}

double martingale_R(const PopulationRun& run, std::size_t n) {
  if (n > run.events.size()) {
    throw std::invalid_argument("martingale_R: n = " + std::to_string(n) + " exceeds the " +
                                std::to_string(run.events.size()) + " materialized individuals");
  }
  double r = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const BirthEvent& ev = run.events[k];
    double children = 0.0;
    for (double tau : ev.child_offsets) children += std::exp(-run.gamma * (ev.birth_time + tau));
    r += children - std::exp(-run.gamma * ev.birth_time);
  }
  return r;
}

std::vector<double> martingale_path(const PopulationRun& run) {
  std::vector<double> path{1.0};
  path.reserve(run.events.size() + 1);
  double r = 1.0;
  for (const BirthEvent& ev : run.events) {
    double children = 0.0;
    for (double tau : ev.child_offsets) children += std::exp(-run.gamma * (ev.birth_time + tau));
    r += children - std::exp(-run.gamma * ev.birth_time);
    path.push_back(r);
  }
  return path;
}

double estimate_W(const PopulationRun& run, std::size_t n) { return martingale_R(run, n); }

std::size_t z_process(const PopulationRun& run, double t) {
  if (!(t >= 0.0) || t > run.horizon) throw std::invalid_argument("z_process: t outside [0, horizon]");
  std::size_t z = 0;
  for (const BirthEvent& ev : run.events) {
    if (ev.birth_time > t) break;  // events are in birth order
    for (double tau : ev.child_offsets) {
      if (ev.birth_time + tau > t) ++z;
    }
  }
  return z;
}

void write_events_csv(std::ostream& out, const PopulationRun& run) {
  const auto old = out.precision(17);
  out << "order_index,address,sigma,letter\n";
  for (std::size_t k = 0; k < run.events.size(); ++k) {
    const BirthEvent& ev = run.events[k];
    out << k + 1 << ',' << format_address(ev.address) << ',' << ev.birth_time << ','
        << run.model->letters[ev.letter].id << '\n';
  }
  out.precision(old);
}

}  // namespace cantorspec
