#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantorspec {

struct Interval {
  double a = 0.0;
  double b = 1.0;

  double length() const noexcept { return b - a; }
  bool contains(double x) const noexcept { return a <= x && x <= b; }
};

/// Affine contraction S(x) = ratio * x + offset.
struct ContractionMap {
  double ratio = 0.5;
  double offset = 0.0;

  double operator()(double x) const noexcept { return ratio * x + offset; }
};

/// One element of the alphabet: an IFS together with its weight vector.
struct Letter {
  std::string id;
  std::vector<ContractionMap> maps;
  std::vector<double> weights;

  std::size_t size() const noexcept { return maps.size(); }
};

struct IfsModel {
  Interval interval;
  std::vector<Letter> letters;
  std::vector<double> probs;
  /// Tolerance for the sum-to-one and endpoint checks.
  double tolerance = 1e-12;

  std::size_t letter_index(const std::string& id) const;
};

struct Violation {
  std::string letter;                  // empty for model-level violations
  std::optional<std::size_t> map;      // 1-based map index when applicable
  std::string message;
};

std::string to_string(const Violation& v);

/// Checks a letter against the base interval. Returns every violated invariant.
std::vector<Violation> validate_letter(const Letter& letter, Interval interval, double tolerance = 1e-12);

/// Every violated invariant of the model; empty iff the model is admissible.
std::vector<Violation> validate_model(const IfsModel& model);

/// Thrown when an operation requires an admissible model.
class InvalidModel : public std::invalid_argument {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

void require_valid(const IfsModel& model);

/// Per-child products r_i * m_i, in map order.
std::vector<double> contraction_products(const Letter& letter);

/// Indices of letters with positive selection probability.
std::vector<std::size_t> support(const IfsModel& model);

}  // namespace cantorspec
