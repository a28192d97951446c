#include <cmath>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "cantorspec/random_tree.hpp"
#include "cantorspec/rng.hpp"

using namespace cantorspec;

TEST_SUITE("random_tree") {
  TEST_CASE("addresses format and parse") {
    CHECK(format_address(Address{}) == "");
    CHECK(format_address(Address{1, 2, 1}) == "1.2.1");
    CHECK(parse_address("1.2.1") == Address{1, 2, 1});
    CHECK(parse_address("").empty());
    CHECK_THROWS(parse_address("1..2"));
    CHECK_THROWS(parse_address("0"));
    CHECK(concat(Address{1}, Address{2, 3}) == Address{1, 2, 3});
  }

  TEST_CASE("stop rules") {
    CHECK(StopRule::at_depth(3).describe() == "depth:3");
    CHECK_THROWS_AS(StopRule::resolution(0.0), std::invalid_argument);
    CHECK_THROWS_AS(StopRule::resolution(-1.0), std::invalid_argument);
    StopRule bad;
    bad.kind = StopRule::Kind::Resolution;
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(sample_tree(fx::third_fifth(), bad, 1), std::invalid_argument);
  }

  TEST_CASE("depth 0 holds only the root") {
    const RandomTree t = sample_tree(fx::third_fifth(), StopRule::at_depth(0), 5);
    CHECK(t.size() == 1);
    CHECK(t.depth() == 0);
    CHECK(t.label(Address{}) < 2);
  }

  TEST_CASE("single-letter model gives a complete tree") {
    const RandomTree t = sample_tree(fx::single(fx::fifth()), StopRule::at_depth(2), 9);
    CHECK(t.size() == 1 + 3 + 9);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(t.nodes()[k].letter == 0);
  }

  TEST_CASE("generation") {
    const RandomTree t = sample_tree(fx::single(fx::middle_third()), StopRule::at_depth(3), 1);
    CHECK(generation(t, 0) == std::vector<Address>{Address{}});
    const auto g3 = generation(t, 3);
    CHECK(g3.size() == 8);
    CHECK(std::is_sorted(g3.begin(), g3.end()));
    CHECK(generation(t, 4).empty());
  }

  TEST_CASE("generation sizes follow the labels") {
    const IfsModel m = fx::third_fifth();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const RandomTree t = sample_tree(m, StopRule::at_depth(4), seed);
      for (std::size_t n = 0; n < 4; ++n) {
        std::size_t expected = 0;
        for (const auto& a : generation(t, n)) expected += m.letters[t.label(a)].size();
        CHECK(generation(t, n + 1).size() == expected);
      }
    }
  }

  TEST_CASE("replay is deterministic and seeds differ") {
    const IfsModel m = fx::third_fifth();
    const RandomTree a = sample_tree(m, StopRule::at_depth(10), 1);
    const RandomTree b = sample_tree(m, StopRule::at_depth(10), 1);
    const RandomTree c = sample_tree(m, StopRule::at_depth(10), 2);
    CHECK(a == b);
    CHECK_FALSE(a == c);
  }

  TEST_CASE("labels are streams of the address, not of the traversal") {
    const IfsModel m = fx::third_fifth();
    const RandomTree shallow = sample_tree(m, StopRule::at_depth(3), 77);
    const RandomTree deep = sample_tree(m, StopRule::at_depth(6), 77);
    for (const auto& a : generation(shallow, 3)) {
      CHECK(shallow.label(a) == deep.label(a));
      CHECK(draw_letter(m, 77, a) == deep.label(a));
    }
  }

  TEST_CASE("SplitMix64 reference outputs") {
    SplitMix64 rng(0);
    CHECK(rng() == 0xE220A8397B1DCDAFULL);
    CHECK(rng() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng() == 0x06C45D188009454FULL);
    CHECK(mix64(0) == 0);
  }

  TEST_CASE("root label frequency is 3/5 (binomial 3 sigma band)") {
    const IfsModel m = fx::third_fifth();
    const int n = 10000;
    int third = 0;
    for (int seed = 0; seed < n; ++seed) third += draw_letter(m, static_cast<std::uint64_t>(seed), {}) == 0;
    const double sd = std::sqrt(n * 0.6 * 0.4);
    CHECK(std::abs(third - 0.6 * n) < 3 * sd);
  }

  TEST_CASE("children labels are independent of the parent label (chi-square)") {
    const IfsModel m = fx::third_fifth();
    // 2x2 contingency table of (root label, label of child 1).
    double table[2][2] = {{0, 0}, {0, 0}};
    const int n = 20000;
    for (int seed = 0; seed < n; ++seed) {
      const auto s = static_cast<std::uint64_t>(seed);
      table[draw_letter(m, s, {})][draw_letter(m, s, Address{1})] += 1;
    }
    double chi2 = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double row = table[i][0] + table[i][1];
        const double col = table[0][j] + table[1][j];
        const double e = row * col / n;
        chi2 += (table[i][j] - e) * (table[i][j] - e) / e;
      }
    CHECK(chi2 < 10.83);  // 1 degree of freedom, p = 0.001
  }

  TEST_CASE("zero-probability letters never appear") {
    IfsModel m = fx::third_fifth();
    m.probs = {1.0, 0.0};
    const RandomTree t = sample_tree(m, StopRule::at_depth(6), 3);
    for (const auto& node : t.nodes()) CHECK(node.letter == 0);
  }

  TEST_CASE("resolution stop expands until cells are shorter than epsilon") {
    const IfsModel m = fx::third_fifth();
    const RandomTree t = sample_tree(m, StopRule::resolution(1e-3), 4);
    for (std::size_t k = 0; k < t.size(); ++k) {
      double len = m.interval.length();
      const Address a = t.address_of(k);
      for (std::size_t d = 0; d < a.size(); ++d) {
        const Address prefix(a.begin(), a.begin() + static_cast<long>(d));
        len *= m.letters[t.label(prefix)].maps[a[d] - 1].ratio;
      }
      const bool leaf = t.nodes()[k].child_count == 0;
      CHECK(leaf == (len < 1e-3));
    }
  }

  TEST_CASE("subtree") {
    const IfsModel m = fx::third_fifth();
    const RandomTree t = sample_tree(m, StopRule::at_depth(2), 11);
    CHECK(subtree(t, {}) == t);
    const RandomTree s = subtree(t, Address{1});
    CHECK(s.depth() == 1);
    CHECK(s.label(Address{}) == t.label(Address{1}));
    CHECK(s.origin() == Address{1});
    for (const auto& leaf : generation(t, 2)) CHECK(subtree(t, leaf).size() == 1);
    CHECK_THROWS_AS(subtree(t, Address{9}), NotFound);
    CHECK_THROWS_AS(t.label(Address{1, 1, 1}), NotFound);
  }

  TEST_CASE("property: subtree composition") {
    const IfsModel m = fx::third_fifth();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const RandomTree t = sample_tree(m, StopRule::at_depth(5), seed);
      for (const auto& a : generation(t, 2)) {
        const RandomTree sa = subtree(t, a);
        for (const auto& b : generation(sa, 1)) CHECK(subtree(sa, b) == subtree(t, concat(a, b)));
      }
    }
  }

  TEST_CASE("dump and load round trip") {
    const auto m = fx::shared(fx::third_fifth());
    for (auto stop : {StopRule::at_depth(4), StopRule::resolution(0.01)}) {
      const RandomTree t = sample_tree(m, stop, 21);
      const std::string text = dump_tree(t);
      const RandomTree back = load_tree(text, m);
      CHECK(back == t);
      CHECK(back.seed() == 21);
      CHECK(dump_tree(back) == text);
    }
    CHECK_THROWS(load_tree("not json", m));
    CHECK_THROWS(load_tree(R"({"seed": 1, "stop": "depth:1", "nodes": [["1", "third"]]})", m));
  }
}
