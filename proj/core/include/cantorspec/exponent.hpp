#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantorspec/ifs_model.hpp"

namespace cantorspec {

/// Root of a strictly decreasing function on [lo, hi] with f(lo) >= 0 >= f(hi),
/// bisected down to adjacent doubles. Returns whichever end has the smaller |f|.
template <class F>
double bisect_decreasing(F&& f, double lo, double hi) {
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double flo = f(lo);
  const double fhi = f(hi);
  return (flo < 0 ? -flo : flo) <= (fhi < 0 ? -fhi : fhi) ? lo : hi;
}

/// f(s) = sum_j p_j sum_i (r_i m_i)^s, the expected tilted offspring mass.
double recursive_moment(const IfsModel& model, double s);

/// Unique gamma_r > 0 with recursive_moment(model, gamma_r) = 1.
double solve_recursive_exponent(const IfsModel& model);

/// Unique gamma_h > 0 with sum_j p_j ln(sum_i (r_i m_i)^gamma_h) = 0.
double solve_homogeneous_exponent(const IfsModel& model);

/// Unique d in [0,1] with sum_i r_i^d = 1.
double hausdorff_dimension(const Letter& letter);

/// Unique alpha > 0 with sum_i (r_i m_i)^alpha = 1 for one letter.
double letter_exponent(const Letter& letter);

struct LatticeOptions {
  double tolerance = 1e-9;
  std::uint64_t max_denominator = 1'000'000;
};

struct LatticeClass {
  /// Span T of the lattice, or empty when non-lattice.
  std::optional<double> span;

  bool lattice() const noexcept { return span.has_value(); }
};

/// Lattice test for the support {-ln(r_i m_i)} of the reproduction measure,
/// restricted to letters with p_j > 0. T is the largest real for which every
/// support point divided by T is an integer within `tolerance`.
LatticeClass classify_lattice(const IfsModel& model, LatticeOptions options = {});

struct MalthusianDiagnostics {
  double condition1_residual = 0.0;  // |sum_j p_j sum_i e^{-gamma tau} - 1|
  double condition2_value = 0.0;     // sum_j p_j sum_i tau e^{-gamma tau}
  double xlogx_value = 0.0;          // sum_j p_j X_j ln+ X_j, X_j = sum_i e^{-gamma tau}
};

MalthusianDiagnostics malthusian_diagnostics(const IfsModel& model, double gamma);

enum class Comparison { Equal, StrictlyLess };

struct EqualityVerdict {
  Comparison verdict = Comparison::StrictlyLess;
  std::vector<double> letter_exponents;  // alpha_j for each letter with p_j > 0
  /// Whether the verdict agrees with |gamma_r - gamma_h| <= 1e-9.
  bool consistent = true;
};

/// Equal iff every supported letter has the same alpha_j (within 1e-10).
EqualityVerdict check_equality_condition(const IfsModel& model);

/// Limit constant of e^{-gamma t} z_t / W for the "born after t to mothers born
/// by t" characteristic, in closed form.
double nerman_constant_hat_phi(const IfsModel& model, double gamma);

struct ExponentReport {
  double gamma_r = 0.0;
  double gamma_h = 0.0;
  std::vector<std::string> letter_ids;
  std::vector<double> hausdorff_d;
  LatticeClass lattice;
  MalthusianDiagnostics diagnostics;
  bool malthusian_ok = false;
  double xlogx_value = 0.0;
  EqualityVerdict comparison;
  double nerman_constant = 0.0;
};

ExponentReport exponent_report(const IfsModel& model, LatticeOptions lattice = {});

/// JSON object with every report field plus the supplied provenance fields.
std::string report_to_json(const ExponentReport& report, const std::string& model_digest, const std::string& version);

const char* to_string(Comparison c) noexcept;

}  // namespace cantorspec
