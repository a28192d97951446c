#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cantorspec/ifs_model.hpp"
#include "cantorspec/random_tree.hpp"

namespace cantorspec {

/// S_ii([a,b]) carrying mass m_ii.
struct Cell {
  Address address;
  double left = 0.0;
  double right = 0.0;
  double mass = 0.0;

  double length() const noexcept { return right - left; }
};

/// Approximation of the recursive Cantor measure: mass m_ii spread uniformly
/// over each cell, cells sorted by left endpoint.
struct MeasureApprox {
  std::size_t generation = 0;
  Interval interval;
  std::vector<Cell> cells;

  double total_mass() const noexcept;
};

/// Point-mass surrogate consumed by the string solver.
struct AtomizedMeasure {
  Interval interval;
  std::vector<double> positions;
  std::vector<double> masses;
};

/// Cells of generation n. Throws std::invalid_argument when some node above
/// generation n is unexpanded.
MeasureApprox build_cells(const RandomTree& tree, std::size_t n);

/// Cells of all leaves, for trees grown with a resolution stop rule (the
/// leaves form a cut of the tree, so masses still sum to one).
/// `generation` is set to the tree depth.
MeasureApprox build_leaf_cells(const RandomTree& tree);

/// Distribution function of the approximation. Throws std::invalid_argument
/// for x outside [a,b].
double cdf(const MeasureApprox& measure, double x);

/// One atom per cell, at the cell midpoint, carrying the cell mass.
AtomizedMeasure atomize(const MeasureApprox& measure);

/// Generation n+1 of `tree` assembled from generation n of each root-child
/// subtree, pushed forward by S_i and scaled by m_i of the root letter.
MeasureApprox compose_from_children(const RandomTree& tree, std::size_t n);

/// Cell-by-cell comparison of geometry and mass.
bool measures_match(const MeasureApprox& x, const MeasureApprox& y, double tolerance = 1e-10);

/// build_cells(tree, n+1) agrees with compose_from_children(tree, n).
bool check_self_similarity(const RandomTree& tree, std::size_t n);

/// CSV with header generation,address,left,right,mass.
void write_cells_csv(std::ostream& out, const MeasureApprox& measure);

/// CSV with header x,F; `points` equally spaced samples over [a,b].
void write_cdf_csv(std::ostream& out, const MeasureApprox& measure, std::size_t points);

}  // namespace cantorspec
