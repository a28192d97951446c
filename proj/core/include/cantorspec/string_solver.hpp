#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cantorspec/cantor_measure.hpp"
#include "cantorspec/ifs_model.hpp"
#include "cantorspec/random_tree.hpp"

namespace cantorspec {

enum class Boundary { Dirichlet, Neumann };

/// Discrete Krein string: point masses on (a,b) joined by massless links.
///
/// The vibration problem is the pencil K u = lambda M u with M = diag(masses)
/// and K the tridiagonal stiffness of the links. Dirichlet clamps both ends
/// (the boundary links l_0 and l_n enter K); Neumann leaves them free.
class StieltjesString {
 public:
  /// Positions must be sorted and lie strictly inside (a,b); masses must be
  /// positive. Coincident atoms are merged. Throws std::invalid_argument.
  StieltjesString(Interval interval, std::vector<double> positions, std::vector<double> masses);

  static StieltjesString from_measure(const AtomizedMeasure& measure);

  const Interval& interval() const noexcept { return interval_; }
  std::size_t size() const noexcept { return positions_.size(); }
  std::span<const double> positions() const noexcept { return positions_; }
  std::span<const double> masses() const noexcept { return masses_; }
  /// l_0 = x_1 - a, l_k = x_{k+1} - x_k, l_n = b - x_n (n + 1 entries).
  std::span<const double> links() const noexcept { return links_; }

 private:
  Interval interval_;
  std::vector<double> positions_;
  std::vector<double> masses_;
  std::vector<double> links_;
};

/// Number of Dirichlet eigenvalues <= x. Throws std::invalid_argument for x < 0.
std::size_t count_dirichlet(const StieltjesString& string, double x);

/// Number of Neumann eigenvalues <= x, the zero mode included (so >= 1).
std::size_t count_neumann(const StieltjesString& string, double x);

std::size_t count(const StieltjesString& string, double x, Boundary boundary);

/// k-th eigenvalue by bisection on the counting function, relative tolerance
/// 1e-10. Dirichlet indices run 1..n, Neumann indices 0..n-1.
double eigenvalue(const StieltjesString& string, std::size_t k, Boundary boundary);

struct CountingSample {
  double x = 0.0;
  std::size_t count_dirichlet = 0;
  std::size_t count_neumann = 0;
};

/// Both counts at every x, sorted by x.
std::vector<CountingSample> counting_curve(const StieltjesString& string, std::span<const double> xs);

/// CSV with header x,N_D,N_N (or only the requested column).
void write_curve_csv(std::ostream& out, std::span<const CountingSample> curve, bool dirichlet = true,
                     bool neumann = true);

/// Plain-text dump: one "position mass" pair per line.
void write_string_text(std::ostream& out, const StieltjesString& string);

/// The four terms of the Dirichlet-Neumann bracketing chain
///   sum_i N_D^(child i)(r_i m_i x) <= N_D(x) <= N_N(x) <= sum_i N_N^(child i)(r_i m_i x).
struct BracketingChain {
  double x = 0.0;
  std::size_t children_dirichlet = 0;
  std::size_t dirichlet = 0;
  std::size_t neumann = 0;
  std::size_t children_neumann = 0;

  bool holds() const noexcept {
    return children_dirichlet <= dirichlet && dirichlet <= neumann && neumann <= children_neumann;
  }
};

/// Evaluates the chain with the depth-n atomization of the whole tree and the
/// depth-(n-1) atomization of each root-child subtree. Requires n >= 1.
BracketingChain check_bracketing(const RandomTree& tree, std::size_t n, double x);
std::vector<BracketingChain> check_bracketing(const RandomTree& tree, std::size_t n, std::span<const double> xs);

}  // namespace cantorspec
