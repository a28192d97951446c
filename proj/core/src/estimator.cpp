#include "cantorspec/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace cantorspec {

namespace {

bool in_window(double x, FitWindow w) { return x >= w.lo && x <= w.hi; }

std::vector<CurvePoint> positive_points(std::span<const CurvePoint> curve) {
  std::vector<CurvePoint> out;
  for (const auto& p : curve) {
    if (p.count >= 1.0 && p.x > 0.0) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<CurvePoint> dirichlet_points(std::span<const CountingSample> curve) {
  std::vector<CurvePoint> out;
  out.reserve(curve.size());
  for (const auto& s : curve) out.push_back({s.x, static_cast<double>(s.count_dirichlet)});
  return out;
}

std::vector<CurvePoint> neumann_points(std::span<const CountingSample> curve) {
  std::vector<CurvePoint> out;
  out.reserve(curve.size());
  for (const auto& s : curve) out.push_back({s.x, static_cast<double>(s.count_neumann)});
  return out;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("geometric_grid: needs 0 < lo < hi and n >= 2");
  std::vector<double> out(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo * std::exp(step * static_cast<double>(k));
  out.front() = lo;
  out.back() = hi;
  return out;
}

FitWindow default_window(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw std::invalid_argument("default_window: empty curve");
  double x_max = curve.front().x;
  for (const auto& p : curve) x_max = std::max(x_max, p.x);
  return {x_max * 1e-2, x_max / std::sqrt(10.0)};
}

ExponentFit fit_exponent(std::span<const CurvePoint> curve, std::optional<FitWindow> window) {
  const auto usable = positive_points(curve);
  if (usable.size() < 10) throw std::invalid_argument("fit_exponent: needs at least 10 points with count >= 1");
  const auto [lo_it, hi_it] = std::minmax_element(usable.begin(), usable.end(),
                                                  [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  if (hi_it->x < 1e3 * lo_it->x) throw std::invalid_argument("fit_exponent: x values must span at least 3 decades");

  const FitWindow w = window.value_or(default_window(curve));
  std::vector<double> lx, ly;
  for (const auto& p : usable) {
    if (!in_window(p.x, w)) continue;
    lx.push_back(std::log(p.x));
    ly.push_back(std::log(p.count));
  }
  const std::size_t n = lx.size();
  if (n < 3) throw std::invalid_argument("fit_exponent: fewer than 3 points inside the fit window");

  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("fit_exponent: window holds a single x value");

  ExponentFit fit;
  fit.points = n;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = ly[k] - (fit.intercept + fit.slope * lx[k]);
    rss += r * r;
  }
  fit.std_error = n > 2 ? std::sqrt(rss / static_cast<double>(n - 2) / sxx) : 0.0;
  return fit;
}

NormalizedLimit normalized_limit(std::span<const CurvePoint> curve, double gamma, std::optional<FitWindow> window) {
  if (!(gamma > 0.0)) throw std::invalid_argument("normalized_limit: gamma must be positive");
  NormalizedLimit out;
  out.window = window.value_or(curve.empty() ? FitWindow{} : default_window(curve));
  out.points.reserve(curve.size());
  std::vector<double> tail;
  for (const auto& p : curve) {
    const double v = p.count * std::pow(p.x, -gamma);
    out.points.push_back({p.x, v});
    if (in_window(p.x, out.window)) tail.push_back(v);
  }
  if (!tail.empty()) {
    double mean = 0.0;
    for (double v : tail) mean += v;
    mean /= static_cast<double>(tail.size());
    double var = 0.0;
    for (double v : tail) var += (v - mean) * (v - mean);
    var = tail.size() > 1 ? var / static_cast<double>(tail.size() - 1) : 0.0;
    out.tail_mean = mean;
    out.tail_cv = mean != 0.0 ? std::sqrt(var) / mean : 0.0;
  }
  return out;
}

bool AsymptoticsReport::slope_within(double tolerance) const noexcept {
  return std::abs(slope - gamma_target) <= tolerance;
}

double linear_bound(std::span<const CurvePoint> curve) {
  double c = 0.0;
  for (const auto& p : curve) {
    if (p.x > 0.0) c = std::max(c, p.count / p.x);
  }
  return c;
}

AsymptoticsReport analyze_curve(std::span<const CurvePoint> curve, double gamma_target,
                                std::optional<FitWindow> window) {
  AsymptoticsReport r;
  r.gamma_target = gamma_target;
  r.window = window.value_or(default_window(curve));
  const ExponentFit fit = fit_exponent(curve, r.window);
  r.slope = fit.slope;
  r.slope_stderr = fit.std_error;
  const NormalizedLimit lim = normalized_limit(curve, gamma_target, r.window);
  for (const auto& p : lim.points) {
    if (in_window(p.x, r.window)) r.normalized_tail.push_back(p);
  }
  r.tail_mean = lim.tail_mean;
  r.tail_cv = lim.tail_cv;
  r.linear_bound = linear_bound(curve);
  return r;
}

void assign_w_proxies(std::span<AsymptoticsReport> reports) {
  if (reports.empty()) return;
  std::vector<double> means;
  for (const auto& r : reports) means.push_back(r.tail_mean);
  std::sort(means.begin(), means.end());
  const std::size_t m = means.size();
  const double median = m % 2 ? means[m / 2] : 0.5 * (means[m / 2 - 1] + means[m / 2]);
  for (auto& r : reports) r.w_proxy = median > 0.0 ? r.tail_mean / median : 0.0;
}

std::string report_to_json(std::span<const AsymptoticsReport> reports, const std::string& model_digest,
                           const std::string& version) {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["model_digest"] = model_digest;
  doc["runs"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["slope"] = r.slope;
    jr["slope_stderr"] = r.slope_stderr;
    jr["gamma_target"] = r.gamma_target;
    jr["window"] = {r.window.lo, r.window.hi};
    jr["tail_mean"] = r.tail_mean;
    jr["tail_cv"] = r.tail_cv;
    jr["w_proxy"] = r.w_proxy;
    jr["linear_bound"] = r.linear_bound;
    nlohmann::ordered_json tail = nlohmann::ordered_json::array();
    for (const auto& p : r.normalized_tail) tail.push_back({p.x, p.value});
    jr["normalized_tail"] = std::move(tail);
    doc["runs"].push_back(std::move(jr));
  }
  return doc.dump(2);
}

}  // namespace cantorspec
