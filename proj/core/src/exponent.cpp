#include "cantorspec/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace cantorspec {

namespace {

constexpr double kEqualExponentTol = 1e-10;
constexpr double kEqualGammaTol = 1e-9;

/// Smallest s_hi (by doubling from 1) with g(s_hi) <= 0, for decreasing g.
template <class G>
double upper_bracket(G&& g) {
  double hi = 1.0;
  for (int k = 0; k < 1100 && g(hi) > 0.0; ++k) hi *= 2.0;
  return hi;
}

double letter_moment(const Letter& letter, double s) {
  double sum = 0.0;
  for (double q : contraction_products(letter)) sum += std::pow(q, s);
  return sum;
}

/// Support points -ln(r_i m_i) of the reproduction measure.
std::vector<double> support_offsets(const IfsModel& model) {
  std::vector<double> taus;
  for (std::size_t j : support(model)) {
    for (double q : contraction_products(model.letters[j])) taus.push_back(-std::log(q));
  }
  return taus;
}

/// Smallest denominator q <= max_den (a continued-fraction convergent of x)
/// with |q x - round(q x)| <= tol, if any.
std::optional<std::uint64_t> integer_multiplier(double x, double tol, std::uint64_t max_den) {
  double h_prev = 1.0, h_prev2 = 0.0;
  double k_prev = 0.0, k_prev2 = 1.0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    const double h = a * h_prev + h_prev2;
    const double k = a * k_prev + k_prev2;
    if (k > static_cast<double>(max_den)) break;
    if (std::abs(k * x - h) <= tol) return static_cast<std::uint64_t>(k);
    const double frac = rest - a;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace

double recursive_moment(const IfsModel& model, double s) {
  double sum = 0.0;
  for (std::size_t j : support(model)) sum += model.probs[j] * letter_moment(model.letters[j], s);
  return sum;
}

double solve_recursive_exponent(const IfsModel& model) {
  require_valid(model);
  auto g = [&](double s) { return recursive_moment(model, s) - 1.0; };
  return bisect_decreasing(g, 0.0, upper_bracket(g));
}

double solve_homogeneous_exponent(const IfsModel& model) {
  require_valid(model);
  auto g = [&](double s) {
    double sum = 0.0;
    for (std::size_t j : support(model)) sum += model.probs[j] * std::log(letter_moment(model.letters[j], s));
    return sum;
  };
  return bisect_decreasing(g, 0.0, upper_bracket(g));
}

double hausdorff_dimension(const Letter& letter) {
  auto g = [&](double d) {
    double sum = 0.0;
    for (const auto& m : letter.maps) sum += std::pow(m.ratio, d);
    return sum - 1.0;
  };
  if (g(1.0) >= 0.0) return 1.0;  // the images tile [a,b]
  return bisect_decreasing(g, 0.0, 1.0);
}

double letter_exponent(const Letter& letter) {
  auto g = [&](double s) { return letter_moment(letter, s) - 1.0; };
  return bisect_decreasing(g, 0.0, upper_bracket(g));
}

LatticeClass classify_lattice(const IfsModel& model, LatticeOptions options) {
  std::vector<double> taus = support_offsets(model);
  if (taus.empty()) return {};
  std::sort(taus.begin(), taus.end());

  double span = taus.front();
  std::uint64_t denominator = 1;
  for (double tau : taus) {
    const auto q = integer_multiplier(tau / span, options.tolerance, options.max_denominator);
    if (!q) return {};
    denominator *= *q;
    if (denominator > options.max_denominator) return {};
    span /= static_cast<double>(*q);
  }
  for (double tau : taus) {
    const double ratio = tau / span;
    if (std::abs(ratio - std::round(ratio)) > options.tolerance) return {};
  }
  return {span};
}

MalthusianDiagnostics malthusian_diagnostics(const IfsModel& model, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("malthusian_diagnostics: gamma must be positive");
  MalthusianDiagnostics out;
  double mass = 0.0;
  for (std::size_t j : support(model)) {
    double x_j = 0.0;
    for (double q : contraction_products(model.letters[j])) {
      const double tilt = std::pow(q, gamma);
      x_j += tilt;
      out.condition2_value += model.probs[j] * (-std::log(q)) * tilt;
    }
    mass += model.probs[j] * x_j;
    out.xlogx_value += model.probs[j] * x_j * std::max(std::log(x_j), 0.0);
  }
  out.condition1_residual = std::abs(mass - 1.0);
  return out;
}

EqualityVerdict check_equality_condition(const IfsModel& model) {
  require_valid(model);
  EqualityVerdict out;
  for (std::size_t j : support(model)) out.letter_exponents.push_back(letter_exponent(model.letters[j]));
  const auto [lo, hi] = std::minmax_element(out.letter_exponents.begin(), out.letter_exponents.end());
  out.verdict = (*hi - *lo) <= kEqualExponentTol ? Comparison::Equal : Comparison::StrictlyLess;
  const bool gammas_equal =
      std::abs(solve_recursive_exponent(model) - solve_homogeneous_exponent(model)) <= kEqualGammaTol;
  out.consistent = gammas_equal == (out.verdict == Comparison::Equal);
  return out;
}

double nerman_constant_hat_phi(const IfsModel& model, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("nerman_constant_hat_phi: gamma must be positive");
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t j : support(model)) {
    for (double q : contraction_products(model.letters[j])) {
      const double tilt = std::pow(q, gamma);  // e^{-gamma tau}
      numerator += model.probs[j] * (1.0 - tilt) / gamma;
      denominator += model.probs[j] * (-std::log(q)) * tilt;
    }
  }
  return numerator / denominator;
}

ExponentReport exponent_report(const IfsModel& model, LatticeOptions lattice) {
  require_valid(model);
  ExponentReport r;
  r.gamma_r = solve_recursive_exponent(model);
  r.gamma_h = solve_homogeneous_exponent(model);
  for (const auto& letter : model.letters) {
    r.letter_ids.push_back(letter.id);
    r.hausdorff_d.push_back(hausdorff_dimension(letter));
  }
  r.lattice = classify_lattice(model, lattice);
  r.diagnostics = malthusian_diagnostics(model, r.gamma_r);
  r.xlogx_value = r.diagnostics.xlogx_value;
  r.malthusian_ok = r.diagnostics.condition1_residual <= 1e-12 && std::isfinite(r.diagnostics.condition2_value) &&
                    std::isfinite(r.diagnostics.xlogx_value);
  r.comparison = check_equality_condition(model);
  r.nerman_constant = nerman_constant_hat_phi(model, r.gamma_r);
  return r;
}

const char* to_string(Comparison c) noexcept { return c == Comparison::Equal ? "Equal" : "StrictlyLess"; }

std::string report_to_json(const ExponentReport& r, const std::string& model_digest, const std::string& version) {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["model_digest"] = model_digest;
  doc["gamma_r"] = r.gamma_r;
  doc["gamma_h"] = r.gamma_h;
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (std::size_t j = 0; j < r.letter_ids.size(); ++j) dims[r.letter_ids[j]] = r.hausdorff_d[j];
  doc["hausdorff_d"] = dims;
  if (r.lattice.lattice()) {
    doc["lattice"] = {{"kind", "Lattice"}, {"span", *r.lattice.span}};
  } else {
    doc["lattice"] = {{"kind", "NonLattice"}};
  }
  doc["malthusian_ok"] = r.malthusian_ok;
  doc["condition1_residual"] = r.diagnostics.condition1_residual;
  doc["condition2_value"] = r.diagnostics.condition2_value;
  doc["xlogx_value"] = r.xlogx_value;
  doc["comparison"] = to_string(r.comparison.verdict);
  doc["letter_exponents"] = r.comparison.letter_exponents;
  doc["comparison_consistent"] = r.comparison.consistent;
  doc["nerman_constant_hat_phi"] = r.nerman_constant;
  return doc.dump(2);
}

}  // namespace cantorspec
