#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "cantorspec_tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cantorspec::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cantorspec-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

const std::string tf = fx::model_path("third-fifth.json");

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const Result ok = run({"validate", "--model", tf});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") == 0);

    const Result bad = run({"validate", "--model", fx::data_path("bad-weights.json")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("weights sum ≠ 1") != std::string::npos);
  }

  TEST_CASE("exponent") {
    const Result r = run({"exponent", "--model", tf});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["gamma_r"].get<double>() - 0.396403) < 1e-6);
    CHECK(j["model_digest"].get<std::string>().size() == 16);
    CHECK(j.contains("version"));

    const auto leb = nlohmann::json::parse(run({"exponent", "--model", fx::model_path("lebesgue.json")}).out);
    CHECK(std::abs(leb["gamma_r"].get<double>() - 0.5) < 1e-14);
    CHECK(std::abs(leb["gamma_h"].get<double>() - 0.5) < 1e-14);

    const Result bad = run({"exponent", "--model", fx::data_path("bad-weights.json")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("weights sum ≠ 1") != std::string::npos);
  }

  TEST_CASE("curve on the Lebesgue model") {
    const Result r = run({"curve", "--model", fx::model_path("lebesgue.json"), "--seed", "1", "--depth", "10", "--grid",
                          "1:1e4:50"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# cantorspec ", 0) == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 51);
    CHECK(rows[0] == std::vector<std::string>{"x", "N_D", "N_N"});
    long prev_d = 0, prev_n = 0;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const long d = std::stol(rows[k][1]), n = std::stol(rows[k][2]);
      CHECK(d >= prev_d);
      CHECK(n >= prev_n);
      CHECK(n - d >= 0);
      CHECK(n - d <= 2);
      prev_d = d;
      prev_n = n;
    }
  }

  TEST_CASE("curve is byte-identical across runs") {
    const fs::path a = scratch("a.csv"), b = scratch("b.csv");
    const std::vector<std::string> base{"curve", "--model", tf, "--seed", "42", "--depth", "12", "--grid", "1:1e6:40"};
    auto args = base;
    args.insert(args.end(), {"--out", a.string()});
    REQUIRE(run(args).code == 0);
    args = base;
    args.insert(args.end(), {"--out", b.string()});
    REQUIRE(run(args).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("seed=42") != std::string::npos);
  }

  TEST_CASE("bracketing check prints true at every grid point") {
    const Result r = run({"curve", "--model", tf, "--seed", "3", "--depth", "7", "--grid", "1:1e5:25", "--check-bracketing",
                          "--out", scratch("br.csv").string()});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 26);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].back() == "true");
    CHECK(run({"curve", "--model", tf, "--seed", "3", "--epsilon", "0.01", "--grid", "1:10:5", "--check-bracketing"}).code != 0);
  }

  TEST_CASE("seed ranges, workers and reports") {
    const fs::path one = scratch("w1.csv"), four = scratch("w4.csv"), rep = scratch("rep.json");
    REQUIRE(run({"curve", "--model", tf, "--seeds", "1..6", "--epsilon", "1e-4", "--grid", "1:1e7:60", "--out",
                 one.string(), "--report", rep.string()})
                .code == 0);
    REQUIRE(run({"curve", "--model", tf, "--seeds", "1..6", "--epsilon", "1e-4", "--grid", "1:1e7:60", "--out",
                 four.string(), "--workers", "4"})
                .code == 0);
    CHECK(slurp(one) == slurp(four));
    const auto rows = csv_rows(slurp(one));
    CHECK(rows[0] == std::vector<std::string>{"seed", "x", "N_D", "N_N"});
    CHECK(rows.size() == 1 + 6 * 60);
    const auto j = nlohmann::json::parse(slurp(rep));
    CHECK(j["runs"].size() == 6);
    CHECK(j.contains("model_digest"));
  }

  TEST_CASE("curve side artifacts") {
    const fs::path tree = scratch("t.json"), cells = scratch("c.csv"), cdf = scratch("f.csv"), str = scratch("s.txt");
    const Result r = run({"curve", "--model", tf, "--seed", "5", "--depth", "3", "--grid", "1:100:5", "--boundary",
                          "dirichlet", "--tree-out", tree.string(), "--cells-out", cells.string(), "--cdf-out",
                          cdf.string(), "--string-out", str.string()});
    REQUIRE(r.code == 0);
    CHECK(csv_rows(r.out)[0] == std::vector<std::string>{"x", "N_D"});
    CHECK(nlohmann::json::parse(slurp(tree)).contains("nodes"));
    CHECK(csv_rows(slurp(cells))[0][0] == "generation");
    CHECK(csv_rows(slurp(cdf))[0] == std::vector<std::string>{"x", "F"});
    CHECK(slurp(str).rfind("# cantorspec", 0) == 0);
  }

  TEST_CASE("branching with horizon zero") {
    const fs::path prefix = scratch("b0");
    const Result r = run({"branching", "--model", tf, "--seed", "7", "--tmax", "0", "--out", prefix.string()});
    REQUIRE(r.code == 0);
    const auto events = csv_rows(slurp(prefix.string() + ".events.csv"));
    REQUIRE(events.size() == 2);
    CHECK(events[0] == std::vector<std::string>{"order_index", "address", "sigma", "letter"});
    CHECK(events[1][0] == "1");
    CHECK(events[1][1] == "");
    const auto mg = csv_rows(slurp(prefix.string() + ".martingale.csv"));
    CHECK(mg.size() == 3);
    const auto z = csv_rows(slurp(prefix.string() + ".z.csv"));
    CHECK(z[0] == std::vector<std::string>{"t", "z_t", "normalized"});
  }

  TEST_CASE("branching mean-R over many seeds") {
    const Result r = run({"branching", "--model", tf, "--seeds", "1..3000", "--stat", "mean-R", "--n", "50"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["mean"].get<double>() - 1.0) < 3.0 * j["std_error"].get<double>());
    CHECK(j["min"].get<double>() > 0.0);
  }

  TEST_CASE("lattice model: z jumps exactly at multiples of ln 6") {
    const fs::path prefix = scratch("lat");
    const double ln6 = std::log(6.0);
    REQUIRE(run({"branching", "--model", fx::model_path("middle-third.json"), "--seed", "1", "--tmax", "9", "--z-grid",
                 "0:9:901", "--out", prefix.string()})
                .code == 0);
    const auto z = csv_rows(slurp(prefix.string() + ".z.csv"));
    for (std::size_t k = 2; k < z.size(); ++k) {
      if (z[k][1] == z[k - 1][1]) continue;
      const double t0 = std::stod(z[k - 1][0]), t1 = std::stod(z[k][0]);
      const double m = std::ceil(t0 / ln6) * ln6;
      CHECK(m > t0);
      CHECK(m <= t1);
    }
  }

  TEST_CASE("branching is byte-identical across runs") {
    const fs::path a = scratch("ra"), b = scratch("rb");
    for (const auto& p : {a, b}) {
      REQUIRE(run({"branching", "--model", tf, "--seeds", "1..3", "--tmax", "8", "--out", p.string()}).code == 0);
    }
    for (const char* ext : {".s2.events.csv", ".s2.martingale.csv", ".s3.z.csv"}) {
      CHECK(slurp(a.string() + ext) == slurp(b.string() + ext));
      CHECK_FALSE(slurp(a.string() + ext).empty());
    }
  }

  TEST_CASE("compare") {
    const auto j = nlohmann::json::parse(run({"compare", "--model", tf}).out);
    CHECK(j["verdict"] == "StrictlyLess");
    CHECK(j["gamma_h"].get<double>() < j["gamma_r"].get<double>());
    const auto s = nlohmann::json::parse(run({"compare", "--model", fx::model_path("middle-third.json")}).out);
    CHECK(s["verdict"] == "Equal");
    const Result sweep = run({"compare", "--random", "100", "--seed", "9"});
    CHECK(sweep.code == 0);
    CHECK(nlohmann::json::parse(sweep.out)["violations"] == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"curve", "--model", tf, "--seed", "1", "--grid", "1:10:5"}).code != 0);
    CHECK(run({"curve", "--model", tf, "--seed", "1", "--depth", "2", "--epsilon", "0.1", "--grid", "1:10:5"}).code != 0);
    CHECK(run({"curve", "--model", tf, "--seed", "1", "--depth", "2", "--grid", "0:10:5"}).code != 0);
    CHECK(run({"curve", "--model", tf, "--seed", "1", "--depth", "2", "--grid", "1:10:1"}).code != 0);
    CHECK(run({"curve", "--model", tf, "--seeds", "5..1", "--depth", "2", "--grid", "1:10:5"}).code != 0);
    CHECK(run({"branching", "--model", tf, "--seed", "1"}).code != 0);
    CHECK(run({"validate", "--model", "/nonexistent/model.json"}).code != 0);
    CHECK(run({"--version"}).code == 0);
  }
}
