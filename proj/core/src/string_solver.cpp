#include "cantorspec/string_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cantorspec {

namespace {

// Counting uses the closed interval: eigenvalues equal to x are inside.
constexpr double kShiftNudge = 1e-15;

// A pivot that is exactly zero is replaced by -kZeroPivot * (pivot scale).
// DBL_EPSILON^2 keeps the following reciprocal finite for any link length.
constexpr double kZeroPivot = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();

void require_shift(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("counting function needs x >= 0");
}

/// Number of non-positive pivots of K - s M in the LDL^T factorization.
///
/// Written in terms of e_k = d_k - 1/l_k, the pivot minus its right-link
/// stiffness. This is the Stieltjes continued fraction of the string: it has no
/// subtractive cancellation, so the Neumann zero mode yields an exact zero pivot
/// at s = 0 however stiff the links are.
std::size_t inertia(const StieltjesString& string, double s, Boundary boundary) {
  const auto links = string.links();
  const auto masses = string.masses();
  const std::size_t n = masses.size();
  const bool dirichlet = boundary == Boundary::Dirichlet;

  std::size_t negatives = 0;
  double e = (dirichlet ? 1.0 / links[0] : 0.0) - s * masses[0];
  for (std::size_t k = 0; k < n; ++k) {
    const double spring = k + 1 < n ? 1.0 / links[k + 1] : (dirichlet ? 1.0 / links[n] : 0.0);
    double d = spring + e;
    if (d == 0.0) d = -kZeroPivot * (spring + std::abs(e) + s * masses[k]);
    if (d <= 0.0) ++negatives;
    if (k + 1 < n) e = e / (links[k + 1] * d) - s * masses[k + 1];
  }
  return negatives;
}

}  // namespace

StieltjesString::StieltjesString(Interval interval, std::vector<double> positions, std::vector<double> masses)
    : interval_(interval) {
  if (!(interval.a < interval.b)) throw std::invalid_argument("string: interval requires a < b");
  if (positions.size() != masses.size()) throw std::invalid_argument("string: positions and masses differ in length");
  if (positions.empty()) throw std::invalid_argument("string: needs at least one atom");
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const double x = positions[k];
    if (!(x > interval.a && x < interval.b)) throw std::invalid_argument("string: atom outside the open interval");
    if (!(masses[k] > 0.0) || !std::isfinite(masses[k])) throw std::invalid_argument("string: masses must be positive");
    if (k > 0 && x < positions[k - 1]) throw std::invalid_argument("string: positions must be sorted");
    if (k > 0 && x == positions_.back()) {
      masses_.back() += masses[k];
      continue;
    }
    positions_.push_back(x);
    masses_.push_back(masses[k]);
  }
  links_.reserve(positions_.size() + 1);
  links_.push_back(positions_.front() - interval.a);
  for (std::size_t k = 1; k < positions_.size(); ++k) links_.push_back(positions_[k] - positions_[k - 1]);
  links_.push_back(interval.b - positions_.back());
}

StieltjesString StieltjesString::from_measure(const AtomizedMeasure& measure) {
  return StieltjesString(measure.interval, measure.positions, measure.masses);
}

std::size_t count_dirichlet(const StieltjesString& string, double x) {
  require_shift(x);
  return inertia(string, x * (1.0 + kShiftNudge), Boundary::Dirichlet);
}

std::size_t count_neumann(const StieltjesString& string, double x) {
  require_shift(x);
  return inertia(string, x * (1.0 + kShiftNudge), Boundary::Neumann);
}

std::size_t count(const StieltjesString& string, double x, Boundary boundary) {
  return boundary == Boundary::Dirichlet ? count_dirichlet(string, x) : count_neumann(string, x);
}

double eigenvalue(const StieltjesString& string, std::size_t k, Boundary boundary) {
  const std::size_t n = string.size();
  const bool dirichlet = boundary == Boundary::Dirichlet;
  if (dirichlet ? (k < 1 || k > n) : (k >= n)) {
    throw std::invalid_argument("eigenvalue: index " + std::to_string(k) + " out of range for " + std::to_string(n) +
                                " atoms");
  }
  const std::size_t target = dirichlet ? k : k + 1;
  if (count(string, 0.0, boundary) >= target) return 0.0;

  // Gershgorin bound on M^{-1} K.
  const auto links = string.links();
  const auto masses = string.masses();
  double hi = 0.0;
  for (std::size_t j = 0; j < n; ++j) hi = std::max(hi, 2.0 * (1.0 / links[j] + 1.0 / links[j + 1]) / masses[j]);
  hi *= 1.0 + 1e-12;
  double lo = 0.0;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count(string, mid, boundary) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<CountingSample> counting_curve(const StieltjesString& string, std::span<const double> xs) {
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CountingSample> out;
  out.reserve(sorted.size());
  for (double x : sorted) out.push_back({x, count_dirichlet(string, x), count_neumann(string, x)});
  return out;
}

void write_curve_csv(std::ostream& out, std::span<const CountingSample> curve, bool dirichlet, bool neumann) {
  const auto old = out.precision(17);
  out << 'x';
  if (dirichlet) out << ",N_D";
  if (neumann) out << ",N_N";
  out << '\n';
  for (const auto& s : curve) {
    out << s.x;
    if (dirichlet) out << ',' << s.count_dirichlet;
    if (neumann) out << ',' << s.count_neumann;
    out << '\n';
  }
  out.precision(old);
}

void write_string_text(std::ostream& out, const StieltjesString& string) {
  const auto old = out.precision(17);
  for (std::size_t k = 0; k < string.size(); ++k) out << string.positions()[k] << ' ' << string.masses()[k] << '\n';
  out.precision(old);
}

std::vector<BracketingChain> check_bracketing(const RandomTree& tree, std::size_t n, std::span<const double> xs) {
  if (n < 1) throw std::invalid_argument("check_bracketing: needs n >= 1");
  const StieltjesString whole = StieltjesString::from_measure(atomize(build_cells(tree, n)));

  const Letter& root = tree.letter_of(0);
  const auto products = contraction_products(root);
  std::vector<StieltjesString> parts;
  for (std::uint32_t i = 1; i <= root.size(); ++i) {
    const Address at{i};
    parts.push_back(StieltjesString::from_measure(atomize(build_cells(subtree(tree, at), n - 1))));
  }

  std::vector<BracketingChain> out;
  out.reserve(xs.size());
  for (double x : xs) {
    BracketingChain chain;
    chain.x = x;
    chain.dirichlet = count_dirichlet(whole, x);
    chain.neumann = count_neumann(whole, x);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      chain.children_dirichlet += count_dirichlet(parts[i], products[i] * x);
      chain.children_neumann += count_neumann(parts[i], products[i] * x);
    }
    out.push_back(chain);
  }
  return out;
}

BracketingChain check_bracketing(const RandomTree& tree, std::size_t n, double x) {
  const double xs[] = {x};
  return check_bracketing(tree, n, xs).front();
}

}  // namespace cantorspec
