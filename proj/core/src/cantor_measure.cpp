#include "cantorspec/cantor_measure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cantorspec {

namespace {

/// S_ii as x -> scale * x + shift.
struct Affine {
  double scale = 1.0;
  double shift = 0.0;

  Affine then(const ContractionMap& s) const noexcept { return {scale * s.ratio, scale * s.offset + shift}; }
  double operator()(double x) const noexcept { return scale * x + shift; }
};

template <class Keep>
MeasureApprox collect(const RandomTree& tree, std::size_t generation, Keep keep) {
  const IfsModel& model = tree.model();
  const auto nodes = tree.nodes();
  std::vector<Affine> maps(nodes.size());
  std::vector<double> masses(nodes.size(), 1.0);

  MeasureApprox out;
  out.generation = generation;
  out.interval = model.interval;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& node = nodes[k];
    if (keep(node)) {
      out.cells.push_back({tree.address_of(k), maps[k](model.interval.a), maps[k](model.interval.b), masses[k]});
    }
    if (node.child_count == 0) continue;
    const Letter& letter = tree.letter_of(k);
    for (std::uint32_t i = 0; i < node.child_count; ++i) {
      maps[node.first_child + i] = maps[k].then(letter.maps[i]);
      masses[node.first_child + i] = masses[k] * letter.weights[i];
    }
  }
  // Breadth-first order is lexicographic within a generation, which for
  // order-preserving maps is already left-to-right. Leaf cuts need a sort.
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const Cell& x, const Cell& y) { return x.left < y.left; });
  return out;
}

}  // namespace

double MeasureApprox::total_mass() const noexcept {
  double s = 0.0;
  for (const auto& c : cells) s += c.mass;
  return s;
}

MeasureApprox build_cells(const RandomTree& tree, std::size_t n) {
  if (!tree.complete_to(n)) {
    throw std::invalid_argument("build_cells: generation " + std::to_string(n) + " is not fully expanded (tree depth " +
                                std::to_string(tree.depth()) + ")");
  }
  return collect(tree, n, [n](const RandomTree::Node& node) { return node.depth == n; });
}

MeasureApprox build_leaf_cells(const RandomTree& tree) {
  return collect(tree, tree.depth(), [](const RandomTree::Node& node) { return node.child_count == 0; });
}

double cdf(const MeasureApprox& measure, double x) {
  const Interval iv = measure.interval;
  if (!(x >= iv.a && x <= iv.b)) throw std::invalid_argument("cdf: x outside [a,b]");
  if (x == iv.b) return 1.0;
  double f = 0.0;
  for (const Cell& c : measure.cells) {
    if (c.right <= x) {
      f += c.mass;
    } else {
      if (c.left < x) f += c.mass * (x - c.left) / c.length();
      break;
    }
  }
  return std::clamp(f, 0.0, 1.0);
}

AtomizedMeasure atomize(const MeasureApprox& measure) {
  AtomizedMeasure out;
  out.interval = measure.interval;
  out.positions.reserve(measure.cells.size());
  out.masses.reserve(measure.cells.size());
  for (const Cell& c : measure.cells) {
    out.positions.push_back(0.5 * (c.left + c.right));
    out.masses.push_back(c.mass);
  }
  return out;
}

MeasureApprox compose_from_children(const RandomTree& tree, std::size_t n) {
  const Letter& root = tree.letter_of(0);
  const std::uint32_t children = tree.nodes()[0].child_count;
  if (children == 0) throw std::invalid_argument("compose_from_children: root is a leaf");

  MeasureApprox out;
  out.generation = n + 1;
  out.interval = tree.model().interval;
  for (std::uint32_t i = 1; i <= children; ++i) {
    const Address at{i};
    const MeasureApprox part = build_cells(subtree(tree, at), n);
    const ContractionMap& s = root.maps[i - 1];
    for (const Cell& c : part.cells) {
      out.cells.push_back({concat(at, c.address), s(c.left), s(c.right), root.weights[i - 1] * c.mass});
    }
  }
  return out;
}

bool measures_match(const MeasureApprox& x, const MeasureApprox& y, double tolerance) {
  if (x.cells.size() != y.cells.size()) return false;
  for (std::size_t k = 0; k < x.cells.size(); ++k) {
    const Cell& p = x.cells[k];
    const Cell& q = y.cells[k];
    if (std::abs(p.left - q.left) > tolerance || std::abs(p.right - q.right) > tolerance ||
        std::abs(p.mass - q.mass) > tolerance) {
      return false;
    }
  }
  return true;
}

bool check_self_similarity(const RandomTree& tree, std::size_t n) {
  return measures_match(build_cells(tree, n + 1), compose_from_children(tree, n));
}

void write_cells_csv(std::ostream& out, const MeasureApprox& measure) {
  const auto old = out.precision(17);
  out << "generation,address,left,right,mass\n";
  for (const Cell& c : measure.cells) {
    out << c.address.size() << ',' << format_address(c.address) << ',' << c.left << ',' << c.right << ',' << c.mass
        << '\n';
  }
  out.precision(old);
}

void write_cdf_csv(std::ostream& out, const MeasureApprox& measure, std::size_t points) {
  if (points < 2) throw std::invalid_argument("write_cdf_csv: need at least 2 points");
  const auto old = out.precision(17);
  out << "x,F\n";
  const Interval iv = measure.interval;
  for (std::size_t k = 0; k < points; ++k) {
    const double x = k + 1 == points ? iv.b : iv.a + iv.length() * static_cast<double>(k) / static_cast<double>(points - 1);
    out << x << ',' << cdf(measure, x) << '\n';
  }
  out.precision(old);
}

}  // namespace cantorspec
