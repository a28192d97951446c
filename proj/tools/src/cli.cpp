#include "cantorspec_tools/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cantorspec/branching_sim.hpp"
#include "cantorspec/cantor_measure.hpp"
#include "cantorspec/estimator.hpp"
#include "cantorspec/exponent.hpp"
#include "cantorspec/ifs_model.hpp"
#include "cantorspec/model_gen.hpp"
#include "cantorspec/model_io.hpp"
#include "cantorspec/random_tree.hpp"
#include "cantorspec/string_solver.hpp"
#include "cantorspec/version.hpp"
#include "json.hpp"

namespace cantorspec::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A check (bracketing, sweep) found a violation; exit code 1.
constexpr int kCheckFailed = 1;
constexpr int kInvalidModel = 2;

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 0;
  std::string text;
};

GridSpec parse_grid(const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError(std::string(flag) + " expects LO:HI:POINTS, got '" + text + "'");
  GridSpec g;
  g.text = text;
  try {
    g.lo = parse_real(parts[0]);
    g.hi = parse_real(parts[1]);
    const long long n = std::stoll(parts[2]);
    if (n < 2) throw UsageError(std::string(flag) + ": POINTS must be >= 2");
    g.points = static_cast<std::size_t>(n);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
  }
  if (!(g.hi > g.lo)) throw UsageError(std::string(flag) + ": HI must exceed LO");
  return g;
}

std::vector<double> linear_grid(const GridSpec& g) {
  std::vector<double> out(g.points);
  for (std::size_t k = 0; k < g.points; ++k) {
    out[k] = g.lo + (g.hi - g.lo) * static_cast<double>(k) / static_cast<double>(g.points - 1);
  }
  out.back() = g.hi;
  return out;
}

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  bool range = false;
  std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
  std::uint64_t at(std::size_t k) const { return first + k; }
  std::string describe() const {
    return range ? "seeds=" + std::to_string(first) + ".." + std::to_string(last) : "seed=" + std::to_string(first);
  }
};

SeedRange resolve_seeds(const std::optional<std::uint64_t>& seed, const std::string& seeds) {
  SeedRange r;
  if (seed) {
    r.first = r.last = *seed;
    return r;
  }
  if (seeds.empty()) throw UsageError("one of --seed or --seeds is required");
  const auto dots = seeds.find("..");
  if (dots == std::string::npos) throw UsageError("--seeds expects A..B, got '" + seeds + "'");
  try {
    std::size_t used = 0;
    r.first = std::stoull(seeds.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("trailing");
    const std::string tail = seeds.substr(dots + 2);
    r.last = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError("--seeds expects A..B, got '" + seeds + "'");
  }
  if (r.last < r.first) throw UsageError("--seeds: B must be >= A");
  r.range = true;
  return r;
}

struct LoadedModel {
  std::shared_ptr<const IfsModel> model;
  std::string digest;
};

LoadedModel load_checked(const std::string& path) {
  IfsModel m = load_model(path);
  require_valid(m);
  LoadedModel out;
  out.digest = digest_hex(dump_model(m));
  out.model = std::make_shared<const IfsModel>(std::move(m));
  return out;
}

std::string header_line(const std::string& command, const LoadedModel& lm, const std::string& extra) {
  std::string h = std::string("# cantorspec ") + kVersion + " command=" + command + " model_digest=" + lm.digest;
  if (!extra.empty()) h += " " + extra;
  return h + "\n";
}

/// Writes to the file at `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

/// Ordered parallel map over [0, count). Exceptions are rethrown in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k].emplace(fn(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

struct Options {
  std::string model;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::optional<std::size_t> depth;
  std::optional<double> epsilon;
  std::string grid;
  std::string boundary = "both";
  std::string out;
  unsigned workers = 1;

  // curve
  bool check_bracketing = false;
  std::string report;
  std::string window;
  std::string tree_out, cells_out, cdf_out, string_out;
  std::size_t cdf_points = 201;

  // branching
  std::optional<double> tmax;
  std::string stat;
  std::size_t n = 50;
  std::optional<double> t;
  std::string z_grid;

  // compare
  std::optional<std::size_t> random;
};

StopRule stop_rule(const Options& o) {
  if (o.depth) return StopRule::at_depth(*o.depth);
  if (o.epsilon) return StopRule::resolution(*o.epsilon);
  throw UsageError("one of --depth or --epsilon is required");
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Options& o, std::ostream& out) {
  const LoadedModel lm = load_checked(o.model);
  out << "valid model_digest=" << lm.digest << " letters=" << lm.model->letters.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------- exponent

int cmd_exponent(const Options& o, std::ostream& out) {
  const LoadedModel lm = load_checked(o.model);
  const ExponentReport rep = exponent_report(*lm.model);
  emit(o.out, out, report_to_json(rep, lm.digest, kVersion) + "\n");
  return 0;
}

// ---------------------------------------------------------------- curve

struct CurveResult {
  std::vector<CountingSample> curve;
  std::vector<BracketingChain> chains;
};

MeasureApprox measure_for(const RandomTree& tree, const StopRule& stop) {
  return stop.kind == StopRule::Kind::Depth ? build_cells(tree, stop.depth) : build_leaf_cells(tree);
}

int cmd_curve(const Options& o, std::ostream& out) {
  const LoadedModel lm = load_checked(o.model);
  const SeedRange seeds = resolve_seeds(o.seed, o.seeds);
  const StopRule stop = stop_rule(o);
  if (o.grid.empty()) throw UsageError("--grid is required");
  const GridSpec grid = parse_grid(o.grid, "--grid");
  if (!(grid.lo > 0.0)) throw UsageError("--grid: XMIN must be positive");
  const bool want_d = o.boundary != "neumann";
  const bool want_n = o.boundary != "dirichlet";
  if (o.check_bracketing && (stop.kind != StopRule::Kind::Depth || stop.depth == 0)) {
    throw UsageError("--check-bracketing needs --depth >= 1");
  }
  const bool artifacts = !o.tree_out.empty() || !o.cells_out.empty() || !o.cdf_out.empty() || !o.string_out.empty();
  if (artifacts && seeds.range) throw UsageError("--tree-out/--cells-out/--cdf-out/--string-out need a single --seed");
  std::optional<FitWindow> window;
  if (!o.window.empty()) {
    const GridSpec w = parse_grid(o.window + ":2", "--window");
    window = FitWindow{w.lo, w.hi};
  }

  const std::vector<double> xs = geometric_grid(grid.lo, grid.hi, grid.points);
  const auto results = parallel_map<CurveResult>(seeds.size(), o.workers, [&](std::size_t k) {
    const RandomTree tree = sample_tree(lm.model, stop, seeds.at(k));
    const StieltjesString str = StieltjesString::from_measure(atomize(measure_for(tree, stop)));
    CurveResult r;
    r.curve = counting_curve(str, xs);
    if (o.check_bracketing) r.chains = check_bracketing(tree, stop.depth, xs);
    return r;
  });

  const std::string extra = seeds.describe() + " stop=" + stop.describe() + " grid=" + grid.text +
                            " boundary=" + o.boundary;
  std::ostringstream csv;
  csv << header_line("curve", lm, extra);
  if (!seeds.range) {
    write_curve_csv(csv, results.front().curve, want_d, want_n);
  } else {
    csv.precision(17);
    csv << "seed,x";
    if (want_d) csv << ",N_D";
    if (want_n) csv << ",N_N";
    csv << "\n";
    for (std::size_t k = 0; k < results.size(); ++k) {
      for (const auto& s : results[k].curve) {
        csv << seeds.at(k) << ',' << s.x;
        if (want_d) csv << ',' << s.count_dirichlet;
        if (want_n) csv << ',' << s.count_neumann;
        csv << "\n";
      }
    }
  }
  emit(o.out, out, csv.str());

  int status = 0;
  if (o.check_bracketing) {
    std::ostringstream b;
    b.precision(17);
    b << "# bracketing " << seeds.describe() << " depth=" << stop.depth << "\n";
    b << "seed,x,children_N_D,N_D,N_N,children_N_N,holds\n";
    for (std::size_t k = 0; k < results.size(); ++k) {
      for (const auto& c : results[k].chains) {
        b << seeds.at(k) << ',' << c.x << ',' << c.children_dirichlet << ',' << c.dirichlet << ',' << c.neumann << ','
          << c.children_neumann << ',' << (c.holds() ? "true" : "false") << "\n";
        if (!c.holds()) status = kCheckFailed;
      }
    }
    out << b.str();
  }

  if (!o.report.empty()) {
    const double gamma = solve_recursive_exponent(*lm.model);
    std::vector<AsymptoticsReport> reports;
    for (const auto& r : results) {
      const auto pts = want_d ? dirichlet_points(r.curve) : neumann_points(r.curve);
      reports.push_back(analyze_curve(pts, gamma, window));
    }
    assign_w_proxies(reports);
    json doc = json::parse(report_to_json(reports, lm.digest, kVersion));
    json full;
    full["version"] = doc["version"];
    full["model_digest"] = doc["model_digest"];
    full["seeds"] = {seeds.first, seeds.last};
    full["stop"] = stop.describe();
    full["boundary"] = want_d ? "dirichlet" : "neumann";
    full["runs"] = doc["runs"];
    emit(o.report, out, full.dump(2) + "\n");
  }

  if (artifacts) {
    const RandomTree tree = sample_tree(lm.model, stop, seeds.first);
    const MeasureApprox cells = measure_for(tree, stop);
    const std::string hdr = header_line("curve", lm, extra);
    if (!o.tree_out.empty()) emit(o.tree_out, out, dump_tree(tree) + "\n");
    if (!o.cells_out.empty()) {
      std::ostringstream s;
      s << hdr;
      write_cells_csv(s, cells);
      emit(o.cells_out, out, s.str());
    }
    if (!o.cdf_out.empty()) {
      std::ostringstream s;
      s << hdr;
      write_cdf_csv(s, cells, o.cdf_points);
      emit(o.cdf_out, out, s.str());
    }
    if (!o.string_out.empty()) {
      std::ostringstream s;
      s << hdr;
      write_string_text(s, StieltjesString::from_measure(atomize(cells)));
      emit(o.string_out, out, s.str());
    }
  }
  return status;
}

// ---------------------------------------------------------------- branching

struct Summary {
  double mean = 0.0;
  double std_error = 0.0;
};

Summary summarize(const std::vector<double>& v) {
  Summary s;
  if (v.empty()) return s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double var = 0.0;
    for (double x : v) var += (x - s.mean) * (x - s.mean);
    var /= static_cast<double>(v.size() - 1);
    s.std_error = std::sqrt(var / static_cast<double>(v.size()));
  }
  return s;
}

int cmd_branching_stat(const Options& o, const LoadedModel& lm, const SeedRange& seeds, std::ostream& out) {
  json doc;
  doc["version"] = kVersion;
  doc["model_digest"] = lm.digest;
  doc["seeds"] = {seeds.first, seeds.last};
  doc["stat"] = o.stat;
  const double gamma = solve_recursive_exponent(*lm.model);
  std::vector<double> values;
  if (o.stat == "mean-R") {
    values = parallel_map<double>(seeds.size(), o.workers, [&](std::size_t k) {
      return martingale_R(simulate_first_individuals(lm.model, o.n, seeds.at(k)), o.n);
    });
    doc["n"] = o.n;
    doc["expected"] = 1.0;
  } else if (o.stat == "mean-z") {
    if (!o.t) throw UsageError("--stat mean-z needs --t");
    const double t = *o.t;
    values = parallel_map<double>(seeds.size(), o.workers, [&](std::size_t k) {
      const PopulationRun run = simulate_population(lm.model, t, seeds.at(k));
      return std::exp(-gamma * t) * static_cast<double>(z_process(run, t));
    });
    doc["t"] = t;
    doc["expected"] = nerman_constant_hat_phi(*lm.model, gamma);
  } else {
    throw UsageError("--stat must be mean-R or mean-z");
  }
  const Summary s = summarize(values);
  doc["gamma"] = gamma;
  doc["count"] = values.size();
  doc["mean"] = s.mean;
  doc["std_error"] = s.std_error;
  doc["min"] = *std::min_element(values.begin(), values.end());
  doc["max"] = *std::max_element(values.begin(), values.end());
  emit(o.out, out, doc.dump(2) + "\n");
  return 0;
}

int cmd_branching(const Options& o, std::ostream& out) {
  const LoadedModel lm = load_checked(o.model);
  const SeedRange seeds = resolve_seeds(o.seed, o.seeds);
  if (!o.stat.empty()) return cmd_branching_stat(o, lm, seeds, out);
  if (!o.tmax) throw UsageError("--tmax is required (or --stat)");
  if (o.out.empty()) throw UsageError("--out PREFIX is required");
  const double tmax = *o.tmax;
  GridSpec zg{0.0, tmax, 101, ""};
  std::vector<double> ts;
  if (!o.z_grid.empty()) {
    zg = parse_grid(o.z_grid, "--z-grid");
    if (zg.lo < 0.0 || zg.hi > tmax) throw UsageError("--z-grid must lie inside [0, tmax]");
    ts = linear_grid(zg);
  } else {
    ts = tmax > 0.0 ? linear_grid(zg) : std::vector<double>{0.0};
  }

  const auto runs = parallel_map<PopulationRun>(seeds.size(), o.workers,
                                                [&](std::size_t k) { return simulate_population(lm.model, tmax, seeds.at(k)); });

  std::ostringstream summary;
  summary.precision(17);
  summary << header_line("branching", lm, seeds.describe());
  summary << "seed,events,R_final\n";
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const PopulationRun& run = runs[k];
    const std::string prefix = seeds.range ? o.out + ".s" + std::to_string(seeds.at(k)) : o.out;
    std::ostringstream ps;
    ps << "seed=" << run.seed << " tmax=" << tmax;
    const std::string hdr = header_line("branching", lm, ps.str());

    std::ostringstream ev;
    ev << hdr;
    write_events_csv(ev, run);
    emit(prefix + ".events.csv", out, ev.str());

    const std::vector<double> path = martingale_path(run);
    std::ostringstream mg;
    mg.precision(17);
    mg << hdr << "n,R_n\n";
    for (std::size_t n = 0; n < path.size(); ++n) mg << n << ',' << path[n] << "\n";
    emit(prefix + ".martingale.csv", out, mg.str());

    std::ostringstream zs;
    zs.precision(17);
    zs << hdr << "t,z_t,normalized\n";
    for (double tt : ts) {
      const std::size_t z = z_process(run, tt);
      zs << tt << ',' << z << ',' << std::exp(-run.gamma * tt) * static_cast<double>(z) << "\n";
    }
    emit(prefix + ".z.csv", out, zs.str());

    summary << run.seed << ',' << run.events.size() << ',' << path.back() << "\n";
  }
  out << summary.str();
  return 0;
}

// ---------------------------------------------------------------- compare

json verdict_json(const IfsModel& model) {
  const double gr = solve_recursive_exponent(model);
  const double gh = solve_homogeneous_exponent(model);
  const EqualityVerdict v = check_equality_condition(model);
  json j;
  j["gamma_r"] = gr;
  j["gamma_h"] = gh;
  j["verdict"] = to_string(v.verdict);
  j["letter_exponents"] = v.letter_exponents;
  j["consistent"] = v.consistent;
  return j;
}

int cmd_compare(const Options& o, std::ostream& out) {
  if (o.random) {
    if (!o.model.empty()) throw UsageError("--random and --model are exclusive");
    const std::uint64_t base = o.seed.value_or(0);
    struct Row {
      double gr, gh;
      bool equal, consistent;
    };
    const auto rows = parallel_map<Row>(*o.random, o.workers, [&](std::size_t k) {
      const IfsModel m = random_model(base + k);
      const EqualityVerdict v = check_equality_condition(m);
      return Row{solve_recursive_exponent(m), solve_homogeneous_exponent(m), v.verdict == Comparison::Equal,
                 v.consistent};
    });
    std::size_t violations = 0, equal = 0, inconsistent = 0;
    double worst = -INFINITY;
    json bad = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Row& r = rows[k];
      worst = std::max(worst, r.gh - r.gr);
      if (r.gh > r.gr + 1e-12) {
        ++violations;
        bad.push_back(base + k);
      }
      if (r.equal) ++equal;
      if (!r.consistent) ++inconsistent;
    }
    json doc;
    doc["version"] = kVersion;
    doc["seed"] = base;
    doc["models"] = rows.size();
    doc["violations"] = violations;
    doc["violating_seeds"] = bad;
    doc["equal"] = equal;
    doc["strictly_less"] = rows.size() - equal;
    doc["inconsistent"] = inconsistent;
    doc["max_gamma_h_minus_gamma_r"] = rows.empty() ? 0.0 : worst;
    emit(o.out, out, doc.dump(2) + "\n");
    return violations == 0 && inconsistent == 0 ? 0 : kCheckFailed;
  }
  const LoadedModel lm = load_checked(o.model);
  json doc;
  doc["version"] = kVersion;
  doc["model_digest"] = lm.digest;
  const json verdict = verdict_json(*lm.model);
  for (const auto& [k, v] : verdict.items()) doc[k] = v;
  emit(o.out, out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral asymptotics of random recursive Cantor strings", "cantorspec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_model = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--model", o.model, "Model JSON file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_seeds = [&](CLI::App* c) {
    auto* s = c->add_option("--seed", o.seed, "Single seed");
    auto* r = c->add_option("--seeds", o.seeds, "Seed range A..B (inclusive)");
    s->excludes(r);
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output path (stdout when omitted)");
    c->add_option("--workers", o.workers, "Worker threads across seeds")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check a model file");
  add_model(validate);

  auto* exponent = app.add_subcommand("exponent", "Exponent report for a model");
  add_model(exponent);
  add_common(exponent);

  auto* curve = app.add_subcommand("curve", "Eigenvalue counting curves of sampled strings");
  add_model(curve);
  add_seeds(curve);
  add_common(curve);
  auto* d = curve->add_option("--depth", o.depth, "Stop at this generation");
  auto* e = curve->add_option("--epsilon", o.epsilon, "Stop at cells of length < epsilon")->check(CLI::PositiveNumber);
  d->excludes(e);
  curve->add_option("--grid", o.grid, "Geometric x grid XMIN:XMAX:POINTS")->required();
  curve->add_option("--boundary", o.boundary, "dirichlet, neumann or both")
      ->check(CLI::IsMember({"dirichlet", "neumann", "both"}));
  curve->add_flag("--check-bracketing", o.check_bracketing, "Check the bracketing chain at every grid x");
  curve->add_option("--report", o.report, "Write a slope/normalized-tail JSON report");
  curve->add_option("--window", o.window, "Fit window LO:HI for --report");
  curve->add_option("--tree-out", o.tree_out, "Write the sampled tree as JSON");
  curve->add_option("--cells-out", o.cells_out, "Write the measure cells as CSV");
  curve->add_option("--cdf-out", o.cdf_out, "Write the distribution function as CSV");
  curve->add_option("--cdf-points", o.cdf_points, "Points for --cdf-out")->check(CLI::Range(2, 1000000));
  curve->add_option("--string-out", o.string_out, "Write the atomized string as text");

  auto* branching = app.add_subcommand("branching", "Simulate the branching population");
  add_model(branching);
  add_seeds(branching);
  add_common(branching);
  branching->add_option("--tmax", o.tmax, "Horizon")->check(CLI::NonNegativeNumber);
  branching->add_option("--stat", o.stat, "mean-R or mean-z over the seeds")
      ->check(CLI::IsMember({"mean-R", "mean-z"}));
  branching->add_option("--n", o.n, "Individuals for mean-R");
  branching->add_option("--t", o.t, "Time for mean-z")->check(CLI::NonNegativeNumber);
  branching->add_option("--z-grid", o.z_grid, "Linear t grid T0:T1:POINTS for the z file");

  auto* compare = app.add_subcommand("compare", "Compare gamma_h with gamma_r");
  add_model(compare, false);
  add_common(compare);
  compare->add_option("--random", o.random, "Sweep this many random models");
  compare->add_option("--seed", o.seed, "First seed of the random sweep");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (exponent->parsed()) return cmd_exponent(o, out);
    if (curve->parsed()) return cmd_curve(o, out);
    if (branching->parsed()) return cmd_branching(o, out);
    if (compare->parsed()) {
      if (o.model.empty() && !o.random) throw UsageError("compare needs --model or --random");
      return cmd_compare(o, out);
    }
  } catch (const InvalidModel& ex) {
    err << "invalid model '" << o.model << "':\n";
    for (const auto& v : ex.violations()) err << "  " << to_string(v) << "\n";
    return kInvalidModel;
  } catch (const ModelFormatError& ex) {
    err << "invalid model '" << o.model << "': " << ex.what() << "\n";
    return kInvalidModel;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return static_cast<int>(CLI::ExitCodes::ValidationError);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kCheckFailed;
  }
  return 0;
}

}  // namespace cantorspec::cli
