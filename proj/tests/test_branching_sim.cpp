#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "cantorspec/branching_sim.hpp"
#include "cantorspec/exponent.hpp"

using namespace cantorspec;

namespace {

struct Stats {
  double mean = 0.0, se = 0.0;
};

Stats stats(const std::vector<double>& v) {
  Stats s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - s.mean) * (x - s.mean);
  s.se = std::sqrt(var / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  return s;
}

}  // namespace

TEST_SUITE("branching_sim") {
  TEST_CASE("horizon zero holds only the ancestor") {
    const IfsModel m = fx::third_fifth();
    const PopulationRun run = simulate_population(m, 0.0, 4);
    REQUIRE(run.events.size() == 1);
    CHECK(run.events[0].address.empty());
    CHECK(run.events[0].birth_time == 0.0);
    CHECK(run.events[0].child_offsets.size() == m.letters[run.events[0].letter].size());
    CHECK(z_process(run, 0.0) == run.events[0].child_offsets.size());
    CHECK_THROWS_AS(simulate_population(m, -1.0, 4), std::invalid_argument);
  }

  TEST_CASE("deterministic clock of the middle-third letter") {
    const PopulationRun run = simulate_population(fx::single(fx::middle_third()), 4.0 * std::log(6.0) + 1e-9, 1);
    CHECK(run.events.size() == 1 + 2 + 4 + 8 + 16);
    for (const auto& ev : run.events) {
      CHECK(ev.birth_time == doctest::Approx(static_cast<double>(ev.address.size()) * std::log(6.0)).epsilon(1e-12));
    }
  }

  TEST_CASE("children are born at the mother's time plus the label offset") {
    const IfsModel m = fx::third_fifth();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PopulationRun run = simulate_population(m, 12.0, seed);
      std::map<Address, const BirthEvent*> by_address;
      for (const auto& ev : run.events) by_address[ev.address] = &ev;
      for (const auto& ev : run.events) {
        CHECK(ev.letter == draw_letter(m, seed, ev.address));
        if (ev.address.empty()) continue;
        Address mother(ev.address.begin(), ev.address.end() - 1);
        REQUIRE(by_address.count(mother) == 1);  // prefix closed
        const BirthEvent& mum = *by_address[mother];
        const double tau = mum.letter == 0 ? std::log(6.0) : std::log(15.0);
        CHECK(ev.birth_time == doctest::Approx(mum.birth_time + tau).epsilon(1e-12));
      }
      for (std::size_t k = 1; k < run.events.size(); ++k) {
        const auto& a = run.events[k - 1];
        const auto& b = run.events[k];
        CHECK((a.birth_time < b.birth_time || (a.birth_time == b.birth_time && a.address < b.address)));
      }
    }
  }

  TEST_CASE("population is complete up to the horizon") {
    const IfsModel m = fx::third_fifth();
    const PopulationRun run = simulate_population(m, 10.0, 3);
    std::set<Address> born;
    for (const auto& ev : run.events) born.insert(ev.address);
    for (const auto& ev : run.events) {
      for (std::uint32_t i = 1; i <= ev.child_offsets.size(); ++i) {
        Address child = ev.address;
        child.push_back(i);
        CHECK(born.count(child) == (ev.birth_time + ev.child_offsets[i - 1] <= 10.0 ? 1u : 0u));
      }
    }
  }

  TEST_CASE("martingale basics") {
    const PopulationRun single = simulate_population(fx::single(fx::middle_third()), 20.0, 1);
    CHECK(martingale_R(single, 0) == 1.0);
    for (std::size_t n = 1; n < single.events.size(); n += 7) CHECK(std::abs(martingale_R(single, n) - 1.0) < 1e-12);
    CHECK(estimate_W(single, single.events.size()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(martingale_R(single, single.events.size() + 1), std::invalid_argument);

    const PopulationRun run = simulate_population(fx::third_fifth(), 15.0, 9);
    const auto path = martingale_path(run);
    REQUIRE(path.size() == run.events.size() + 1);
    for (std::size_t n = 0; n < path.size(); n += 13) CHECK(path[n] == doctest::Approx(martingale_R(run, n)).epsilon(1e-12));
  }

  TEST_CASE("Equal case: the martingale stays at 1") {
    const IfsModel m = load_model(fx::model_path("balanced-pair.json"));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PopulationRun run = simulate_population(m, 8.0, seed);
      for (double r : martingale_path(run)) CHECK(std::abs(r - 1.0) < 1e-12);
    }
  }

  TEST_CASE("mean of R_50 is 1 and R_n stays positive") {
    const auto m = fx::shared(fx::third_fifth());
    std::vector<double> r50;
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
      const PopulationRun run = simulate_first_individuals(m, 50, seed);
      CHECK(run.events.size() >= 50);
      const auto path = martingale_path(run);
      for (std::size_t n = 0; n <= 50; ++n) CHECK(path[n] > 0.0);
      r50.push_back(path[50]);
    }
    const Stats s = stats(r50);
    CHECK(std::abs(s.mean - 1.0) < 3.0 * s.se);
  }

  TEST_CASE("martingale increments average to zero") {
    const auto m = fx::shared(fx::third_fifth());
    std::vector<double> inc;
    for (std::uint64_t seed = 10000; seed < 14000; ++seed) {
      const PopulationRun run = simulate_first_individuals(m, 11, seed);
      inc.push_back(martingale_R(run, 11) - martingale_R(run, 10));
    }
    const Stats s = stats(inc);
    CHECK(std::abs(s.mean) < 3.0 * s.se);
  }

  TEST_CASE("Cauchy differences shrink") {
    const auto m = fx::shared(fx::third_fifth());
    double early = 0.0, late = 0.0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto path = martingale_path(simulate_first_individuals(m, 400, seed));
      early += std::abs(path[20] - path[10]);
      late += std::abs(path[400] - path[200]);
    }
    CHECK(late < early);
  }

  TEST_CASE("z process") {
    const PopulationRun run = simulate_population(fx::single(fx::middle_third()), 10.0, 1);
    const double ln6 = std::log(6.0);
    CHECK(z_process(run, 0.0) == 2);
    CHECK(z_process(run, 1.5 * ln6) == 4);
    // Jumps only at multiples of ln 6.
    for (int k = 0; k < 5; ++k) {
      const std::size_t inside = z_process(run, (k + 0.01) * ln6);
      for (double f : {0.2, 0.5, 0.8, 0.99}) CHECK(z_process(run, (k + f) * ln6) == inside);
      CHECK(z_process(run, (k + 1.01) * ln6) == 2 * inside);
    }
    CHECK_THROWS_AS(z_process(run, 10.5), std::invalid_argument);
    CHECK_THROWS_AS(z_process(run, -0.5), std::invalid_argument);
  }

  TEST_CASE("normalized z tracks the Nerman constant on average over [5, 15]") {
    const auto m = fx::shared(fx::third_fifth());
    const double g = solve_recursive_exponent(*m);
    const double c = nerman_constant_hat_phi(*m, g);
    double sum = 0.0;
    int count = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const PopulationRun run = simulate_population(m, 15.0, seed);
      for (double t = 5.0; t <= 15.0; t += 0.25) {
        sum += std::exp(-g * t) * static_cast<double>(z_process(run, t));
        ++count;
      }
    }
    CHECK(std::abs(sum / count / c - 1.0) < 0.10);
  }

  TEST_CASE("event csv") {
    const PopulationRun run = simulate_population(fx::third_fifth(), 3.0, 2);
    std::ostringstream out;
    write_events_csv(out, run);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "order_index,address,sigma,letter");
    std::getline(in, line);
    CHECK(line.rfind("1,,0,", 0) == 0);
  }

  TEST_CASE("replay") {
    const IfsModel m = fx::third_fifth();
    const PopulationRun a = simulate_population(m, 9.0, 5), b = simulate_population(m, 9.0, 5);
    REQUIRE(a.events.size() == b.events.size());
    for (std::size_t k = 0; k < a.events.size(); ++k) {
      CHECK(a.events[k].address == b.events[k].address);
      CHECK(a.events[k].birth_time == b.events[k].birth_time);
    }
  }
}
