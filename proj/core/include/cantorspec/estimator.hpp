#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantorspec/string_solver.hpp"

namespace cantorspec {

struct CurvePoint {
  double x = 0.0;
  double count = 0.0;
};

std::vector<CurvePoint> dirichlet_points(std::span<const CountingSample> curve);
std::vector<CurvePoint> neumann_points(std::span<const CountingSample> curve);

/// n points spaced geometrically over [lo, hi], both ends included.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

/// Closed x-range used for regression and tail statistics.
struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Top two decades of the curve's x-range with the largest half-decade cut off:
/// [x_max / 10^2, x_max / 10^0.5].
FitWindow default_window(std::span<const CurvePoint> curve);

struct ExponentFit {
  double slope = 0.0;
  double std_error = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of log(count) against log(x) over the window (points
/// with count >= 1 only). The whole curve must hold >= 10 such points spanning
/// >= 3 decades, and the window >= 3 of them; otherwise std::invalid_argument.
ExponentFit fit_exponent(std::span<const CurvePoint> curve, std::optional<FitWindow> window = std::nullopt);

struct NormalizedPoint {
  double x = 0.0;
  double value = 0.0;  // count * x^-gamma
};

struct NormalizedLimit {
  std::vector<NormalizedPoint> points;
  FitWindow window;
  double tail_mean = 0.0;
  /// Coefficient of variation of the values inside the window.
  double tail_cv = 0.0;
};

NormalizedLimit normalized_limit(std::span<const CurvePoint> curve, double gamma,
                                 std::optional<FitWindow> window = std::nullopt);

struct AsymptoticsReport {
  double slope = 0.0;
  double slope_stderr = 0.0;
  double gamma_target = 0.0;
  FitWindow window;
  std::vector<NormalizedPoint> normalized_tail;
  double tail_mean = 0.0;
  double tail_cv = 0.0;
  double w_proxy = 0.0;  // filled by assign_w_proxies
  /// Smallest c with count(x) <= c x over the curve.
  double linear_bound = 0.0;
  bool slope_within(double tolerance) const noexcept;
};

AsymptoticsReport analyze_curve(std::span<const CurvePoint> curve, double gamma_target,
                                std::optional<FitWindow> window = std::nullopt);

/// W proxy of each report: its tail mean over the median tail mean.
void assign_w_proxies(std::span<AsymptoticsReport> reports);

/// Smallest c with count(x) <= c x at every curve point with x > 0.
double linear_bound(std::span<const CurvePoint> curve);

std::string report_to_json(std::span<const AsymptoticsReport> reports, const std::string& model_digest,
                           const std::string& version);

}  // namespace cantorspec
